"""Hypergroup amalgam norms: transforms, positivity tests and inequality verifiers.

Continuous hypergroups (Bessel-Kingman, Naimark) are handled numerically;
the countable hypergroups H_1/2 and H are handled in exact dyadic arithmetic.
"""
from __future__ import annotations

__version__ = "0.1.0"

from .dyadic import Dyadic, pow2
from .errors import (
    ConfigError,
    DivergenceError,
    DomainError,
    HyperAmalgamError,
    NonConvergence,
    PositivityViolation,
    UnknownSuite,
)
from .numerics import GridFunction, QuadratureConfig, integrate
from .params import AmalgamParams

__all__ = [
    "__version__",
    "AmalgamParams",
    "ConfigError",
    "DivergenceError",
    "DomainError",
    "Dyadic",
    "GridFunction",
    "HyperAmalgamError",
    "NonConvergence",
    "PositivityViolation",
    "QuadratureConfig",
    "UnknownSuite",
    "integrate",
    "pow2",
]
