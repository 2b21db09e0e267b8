"""Exceções do pacote pipeline."""

from __future__ import annotations


class PipelineError(Exception):
    """Requisição incompleta ou comando desconhecido."""
