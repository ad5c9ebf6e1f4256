"""Configuration package for spiderlab."""

from .config import Loader, Spiderlab

__all__ = ["Loader", "Spiderlab"]
