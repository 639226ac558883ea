"""Integer K-theory of tori, cocycle indices and truncated spectral triples."""

from ._torusk import *  # noqa: F401,F403
from ._torusk import NumericalError, PreconditionError, ValidationError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
