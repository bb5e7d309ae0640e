"""Spread workbench - maximum-spread K_{s,t}-minor-free graphs."""

__version__ = "0.1.0"
