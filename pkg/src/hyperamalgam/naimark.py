"""The Naimark hypergroup on the half line and its unbounded characters.

Haar measure is ``sinh(x)^2 dx`` and ``chi_a(x) = sinh(rx) / (r sinh x)`` with
``a = -r^2``. For ``r > 1`` these characters grow like ``e^{(r-1)x}``, which
is what breaks the local-to-global norm estimate on this hypergroup.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

# c = int_0^1 sinh(t)^2 dt
LOCAL_MASS = (math.sinh(2.0) - 2.0) / 4.0


def naimark_haar_weight(x):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise DomainError("x must be >= 0")
    out = np.sinh(x) ** 2
    return float(out) if out.ndim == 0 else out


def _log_sinh(x: np.ndarray) -> np.ndarray:
    # log sinh x = x + log1p(-e^{-2x}) - log 2 for large x; direct below (no cancellation)
    small = x < 20.0
    out = np.empty(x.shape)
    out[small] = np.log(np.sinh(x[small]))
    xb = x[~small]
    out[~small] = xb + np.log1p(-np.exp(-2.0 * xb)) - math.log(2.0)
    return out


def _r(a: float) -> float:
    if not a < -1:
        raise DomainError(f"need a < -1 for an unbounded character, got {a}")
    return math.sqrt(-a)


def log_naimark_character(a: float, x):
    """``log chi_a(x)`` (0 at ``x = 0``)."""
    r = _r(a)
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise DomainError("x must be >= 0")
    out = np.zeros(x.shape)
    pos = x > 0
    xp = x[pos]
    out[pos] = _log_sinh(r * xp) - math.log(r) - _log_sinh(xp)
    return float(out) if out.ndim == 0 else out


def naimark_character(a: float, x):
    """``sinh(rx) / (r sinh x)`` with ``r = sqrt(-a)``, evaluated in log space."""
    out = np.exp(log_naimark_character(a, x))
    return float(out) if np.ndim(out) == 0 else out


def window_mass(x: float) -> float:
    """``omega(J_x) = int_{x-1}^{x+1} sinh(t)^2 dt = (cosh(2x) sinh 2 - 2) / 2``."""
    if x < 1:
        raise DomainError("J_x = [x-1, x+1] needs x >= 1")
    return (math.cosh(2 * x) * math.sinh(2.0) - 2.0) / 2.0


def log_window_mass(x: float) -> float:
    if x < 1:
        raise DomainError("J_x = [x-1, x+1] needs x >= 1")
    if x < 300:
        return math.log(window_mass(x))
    # cosh(2x) sinh 2 / 2 dominates
    return 2 * x - math.log(2.0) + math.log(math.sinh(2.0)) - math.log(2.0)


def log_bound_unchecked(a: float, p: float, x: float) -> float:
    """Log of the lower bound for any unbounded character (``a < -1``).

    Only ``a < -9`` makes it diverge; other values are for recording.
    """
    if not x > 1:
        raise DomainError("need x > 1")
    if not p >= 1:
        raise DomainError("need p >= 1")
    c = LOCAL_MASS
    return (log_naimark_character(a, x - 1) + math.log(c / 2) - log_window_mass(x)
            + math.log(c / 2) / p)


def log_counterexample_lower_bound(a: float, p: float, x: float) -> float:
    if not a < -9:
        raise DomainError("the divergence argument needs a < -9")
    return log_bound_unchecked(a, p, x)


def counterexample_lower_bound(a: float, p: float, x: float, cfg=None) -> float:
    """``chi_a(x-1) * c / (2 omega(J_x)) * (c/2)^{1/p}``.

    Lower bound for ``||chi_a (tau_x 1_U)^{1/p}||_p``; ``chi_a`` is increasing,
    so its minimum over ``J_x`` sits at ``x - 1``. ``cfg`` is accepted for
    interface uniformity (everything here is closed form).
    """
    return math.exp(log_counterexample_lower_bound(a, p, x))


def character_is_increasing(a: float, x_max: float = 20.0, samples: int = 2001) -> bool:
    xs = np.linspace(0.0, x_max, samples)
    return bool(np.all(np.diff(log_naimark_character(a, xs)) > 0))
