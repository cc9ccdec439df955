"""Jinja-шаблоны текстовых отчётов model checker'а."""
