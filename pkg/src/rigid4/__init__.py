"""Goursat G-II rank-4 rigid local systems in exact arithmetic."""

__version__ = "0.1.0"
