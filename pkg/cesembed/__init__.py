"""cesembed: mergulhos entre espaços de Cesàro e Copson com pesos."""

__version__ = "0.1.0"
