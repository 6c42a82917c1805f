# Apache License, Version 2.0
"""Delaunay-set triangulations, simplex functionals and windowed densities."""

from ._delone import *  # noqa: F401,F403
from ._delone import DeloneError

__all__ = [name for name in dir() if not name.startswith("_")]
