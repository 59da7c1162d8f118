"""Mealy automata, the I2 semigroup and its growth series."""

from ._core import *  # noqa: F401,F403
from ._core import (  # noqa: F401
    CapacityError,
    ConsistencyError,
    InputDomainError,
    ParseError,
)

__version__ = "0.1.0"
