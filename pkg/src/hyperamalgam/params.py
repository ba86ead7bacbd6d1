from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

INF = math.inf


def _parse_exponent(v) -> float:
    if isinstance(v, str):
        v = v.strip().lower()
        if v in ("inf", "infinity", "oo", "∞"):
            return INF
        v = float(v)
    v = float(v)
    if math.isnan(v) or v < 1:
        raise DomainError(f"exponent {v!r} outside [1, inf]")
    return v


def conjugate(p: float) -> float:
    """Hölder conjugate, with ``1 <-> inf``."""
    p = _parse_exponent(p)
    if p == 1:
        return INF
    if p == INF:
        return 1.0
    return p / (p - 1)


@dataclass(frozen=True)
class AmalgamParams:
    """Exponent pair ``(p, q)``: local ``L^p``, global ``l^q``. ``math.inf`` is exact."""

    p: float
    q: float

    def __post_init__(self):
        object.__setattr__(self, "p", _parse_exponent(self.p))
        object.__setattr__(self, "q", _parse_exponent(self.q))

    @property
    def reciprocals(self) -> tuple[float, float]:
        return 1.0 / self.p, 1.0 / self.q

    def __str__(self) -> str:
        fmt = lambda v: "inf" if v == INF else f"{v:g}"
        return f"({fmt(self.p)},{fmt(self.q)})"
