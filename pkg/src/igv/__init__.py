"""Incomplete cooperative games: values, UD uniqueness, axioms and experiments."""

__version__ = "0.1.0"
