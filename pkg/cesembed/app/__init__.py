# Ponto de entrada da linha de comando
