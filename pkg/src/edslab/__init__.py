"""Exact elliptic divisibility sequence laboratory."""

__version__ = "0.1.0"
