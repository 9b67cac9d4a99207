"""Eigenvalue-weighted uncertainty bounds for q-commutators."""

from ._qunc import *  # noqa: F401,F403
from ._qunc import QuncError

__all__ = [name for name in dir() if not name.startswith("_")]
