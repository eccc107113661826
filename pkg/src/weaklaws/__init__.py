"""Weak mixed distributive laws over finite categories and finite-dimensional linear data."""

from . import fincat, lifting, linback, mates, weakdl
from .config import DEFAULT_BOUNDS, Bounds

__version__ = "0.1.0"
