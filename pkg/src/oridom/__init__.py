"""Exact computation and bounds verification for directed domination."""

__version__ = "0.1.0"
