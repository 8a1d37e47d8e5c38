"""Finite sets as the initial rig category, computed on the skeleton [n]."""

from . import canhom, finperm, rigiface, skelrig

__version__ = "0.1.0"

__all__ = ["canhom", "finperm", "rigiface", "skelrig"]
