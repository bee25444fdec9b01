"""Utility package.

Responsibilities:
- Logging setup shared by every command
"""

from .logging import configure_logging, reset_logging

__all__ = ["configure_logging", "reset_logging"]
