"""Dirichlet characters, L-functions and primes in arithmetic progressions."""

from ._core import *  # noqa: F401,F403
from ._core import DirichletError

__all__ = [name for name in dir() if not name.startswith("_")]
