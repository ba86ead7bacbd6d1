"""Functions on a window of the half line and adaptive quadrature.

Everything the continuous hypergroups need numerically lives here: the
:class:`GridFunction` representation, a vectorised adaptive Gauss-Kronrod
integrator that always splits at declared breakpoints, sampled suprema and a
tabulated antiderivative used to evaluate translates quickly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import DomainError, NonConvergence

__all__ = [
    "GridFunction",
    "QuadratureConfig",
    "MomentTable",
    "integrate",
    "integrate_err",
    "sup_on_interval",
    "cell_sups",
]

# QUADPACK qk15 abscissae/weights, nonnegative half, outermost first.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

KRONROD_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 13]] = _WG[0]
GAUSS_WEIGHTS[[3, 11]] = _WG[1]
GAUSS_WEIGHTS[[5, 9]] = _WG[2]
GAUSS_WEIGHTS[7] = _WG[3]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    max_subdivisions: int = 2**14

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be at least 1")

    def refined(self, factor: float = 10.0) -> "QuadratureConfig":
        return QuadratureConfig(self.abs_tol / factor, self.rel_tol / factor,
                                self.max_subdivisions)


DEFAULT_CONFIG = QuadratureConfig()


@dataclass(frozen=True)
class GridFunction:
    """A real function on ``[0, x_max]`` that vanishes beyond ``support_bound``.

    ``rule`` must accept and return numpy arrays. ``breakpoints`` lists the
    points where the function may fail to be smooth; quadrature always splits
    there and sampled suprema always include them.
    """

    rule: Callable[[np.ndarray], np.ndarray]
    support_bound: float
    breakpoints: tuple = ()
    x_max: float | None = None

    def __post_init__(self):
        support = float(self.support_bound)
        x_max = support if self.x_max is None else float(self.x_max)
        if not x_max > 0:
            raise DomainError("x_max must be positive")
        if support < 0 or support > x_max:
            raise DomainError(f"support bound {support} outside [0, {x_max}]")
        bps = sorted({float(b) for b in self.breakpoints if 0.0 <= b <= x_max})
        object.__setattr__(self, "support_bound", support)
        object.__setattr__(self, "x_max", x_max)
        object.__setattr__(self, "breakpoints", tuple(bps))

    def __call__(self, x):
        arr = np.asarray(x, dtype=float)
        if np.any(arr < 0):
            raise DomainError("GridFunction evaluated at a negative point")
        out = np.zeros(arr.shape)
        inside = arr <= self.support_bound
        if np.any(inside):
            vals = np.asarray(self.rule(arr[inside]), dtype=float)
            out[inside] = np.broadcast_to(vals, out[inside].shape)
        if out.ndim == 0:
            return float(out)
        return out

    # construction helpers

    @classmethod
    def indicator(cls, a: float, b: float, x_max: float | None = None) -> "GridFunction":
        """Indicator of ``[a, b)``."""
        if not 0 <= a <= b:
            raise DomainError("indicator needs 0 <= a <= b")

        def rule(x):
            return ((x >= a) & (x < b)).astype(float)

        return cls(rule, b, (a, b), x_max if x_max is not None else max(b, 1e-300))

    @classmethod
    def constant(cls, c: float, bound: float, x_max: float | None = None) -> "GridFunction":
        return cls(lambda x: np.full(np.shape(x), float(c)), bound, (0.0, bound), x_max)

    @classmethod
    def zero(cls, x_max: float = 1.0) -> "GridFunction":
        return cls(lambda x: np.zeros(np.shape(x)), 0.0, (), x_max)

    def scaled(self, c: float) -> "GridFunction":
        return GridFunction(lambda x: c * self.rule(x), self.support_bound,
                            self.breakpoints, self.x_max)

    def __add__(self, other: "GridFunction") -> "GridFunction":
        return GridFunction(lambda x: self(x) + other(x),
                            max(self.support_bound, other.support_bound),
                            self.breakpoints + other.breakpoints,
                            max(self.x_max, other.x_max))

    def __mul__(self, other: "GridFunction") -> "GridFunction":
        return GridFunction(lambda x: self(x) * other(x),
                            min(self.support_bound, other.support_bound),
                            self.breakpoints + other.breakpoints,
                            max(self.x_max, other.x_max))

    def abs_power(self, p: float) -> "GridFunction":
        return GridFunction(lambda x: np.abs(self.rule(x)) ** p, self.support_bound,
                            self.breakpoints, self.x_max)

    def truncated(self, bound: float) -> "GridFunction":
        """Restriction to ``[0, bound]`` (zero beyond)."""
        bound = min(float(bound), self.support_bound)
        return GridFunction(self.rule, bound, self.breakpoints + (bound,), self.x_max)

    def with_window(self, x_max: float) -> "GridFunction":
        return GridFunction(self.rule, self.support_bound, self.breakpoints, x_max)

    @cached_property
    def moments(self) -> "MomentTable":
        """Antiderivative table of ``f(t) t`` (the motion-hypergroup density)."""
        return MomentTable(self, power=1)


def _gk15(func, a: np.ndarray, b: np.ndarray):
    centre = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = centre[:, None] + half[:, None] * KRONROD_NODES[None, :]
    fx = np.asarray(func(x.ravel()), dtype=float).reshape(x.shape)
    if not np.all(np.isfinite(fx)):
        raise NonConvergence("integrand returned a non-finite value")
    resk = fx @ KRONROD_WEIGHTS
    resg = fx @ GAUSS_WEIGHTS
    mean = 0.5 * resk
    resabs = half * (np.abs(fx) @ KRONROD_WEIGHTS)
    resasc = half * (np.abs(fx - mean[:, None]) @ KRONROD_WEIGHTS)
    result = half * resk
    err = np.abs(half * (resk - resg))
    scale = np.where((resasc != 0) & (err != 0),
                     np.minimum(1.0, (200.0 * err / np.where(resasc == 0, 1, resasc)) ** 1.5),
                     1.0)
    err = np.where((resasc != 0) & (err != 0), resasc * scale, err)
    floor = 50.0 * _EPS * resabs
    err = np.maximum(err, floor)
    return result, err, floor


def _as_integrand(f, weight):
    if weight is None:
        return f
    return lambda x: np.asarray(f(x), dtype=float) * np.asarray(weight(x), dtype=float)


def integrate_err(f, a: float, b: float, weight=None, cfg: QuadratureConfig | None = None,
                  points: Iterable[float] = ()) -> tuple[float, float]:
    """Adaptive G7/K15 integral of ``f * weight`` over ``[a, b]``.

    Returns ``(value, error_estimate)``. ``f`` is a :class:`GridFunction` or
    any vectorised callable; its breakpoints and the extra ``points`` inside
    ``(a, b)`` always become subdivision points.
    """
    cfg = cfg or DEFAULT_CONFIG
    a = float(a)
    b = float(b)
    if a > b:
        raise DomainError(f"integration bounds reversed: [{a}, {b}]")
    if isinstance(f, GridFunction):
        if a < 0:
            raise DomainError("lower bound below 0")
        if b > f.x_max * (1 + 1e-12):
            raise DomainError(f"upper bound {b} exceeds x_max {f.x_max}")
        points = tuple(points) + f.breakpoints
    if a == b:
        return 0.0, 0.0
    func = _as_integrand(f, weight)
    cuts = sorted({float(p) for p in points if a < p < b})
    edges = np.array([a] + cuts + [b])
    lo, hi = edges[:-1], edges[1:]
    lo, hi = lo[hi > lo], hi[hi > lo]
    val, err, floor = _gk15(func, lo, hi)
    done_val = 0.0
    done_err = 0.0
    n_intervals = len(lo)
    length = b - a
    while True:
        total = done_val + float(np.sum(val))
        total_err = done_err + float(np.sum(err))
        tol = max(cfg.abs_tol, cfg.rel_tol * abs(total))
        if total_err <= tol:
            return total, total_err
        width = hi - lo
        local = tol * width / length
        tiny = width <= 64 * _EPS * np.maximum(1.0, np.maximum(np.abs(lo), np.abs(hi)))
        accept = (err <= local) | (err <= floor * 1.0001) | tiny
        if np.all(accept):
            # everything left is roundoff limited
            return total, total_err
        done_val += float(np.sum(val[accept]))
        done_err += float(np.sum(err[accept]))
        lo, hi = lo[~accept], hi[~accept]
        mid = 0.5 * (lo + hi)
        n_intervals += len(lo)
        if n_intervals > cfg.max_subdivisions:
            raise NonConvergence(
                f"no convergence on [{a}, {b}] after {n_intervals} subintervals "
                f"(estimate {total_err:.3g} > {tol:.3g})")
        lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])
        val, err, floor = _gk15(func, lo, hi)


def integrate(f, a: float, b: float, weight=None, cfg: QuadratureConfig | None = None,
              points: Iterable[float] = ()) -> float:
    """Value part of :func:`integrate_err`."""
    return integrate_err(f, a, b, weight, cfg, points)[0]


def sup_on_interval(f, a: float, b: float, samples: int = 257,
                    points: Iterable[float] = ()) -> float:
    """Largest ``|f|`` over a grid on ``[a, b]`` plus every breakpoint inside.

    This is a lower bound for the true supremum; it is exact whenever the
    maximum is attained at a breakpoint, an endpoint or one of ``points``.
    """
    if a > b:
        raise DomainError(f"interval reversed: [{a}, {b}]")
    if samples < 2:
        raise DomainError("need at least two samples")
    extra = list(points)
    if isinstance(f, GridFunction):
        if b > f.x_max * (1 + 1e-12):
            raise DomainError(f"upper bound {b} exceeds x_max {f.x_max}")
        extra += list(f.breakpoints)
    grid = np.linspace(a, b, samples)
    extra = [p for p in extra if a <= p <= b]
    if extra:
        grid = np.concatenate([grid, np.array(extra, dtype=float)])
    return float(np.max(np.abs(f(grid))))


def cell_sups(f, edges: Sequence[float], samples: int = 65,
              points: Iterable[float] = ()) -> np.ndarray:
    """Sampled suprema of ``|f|`` on each closed cell ``[edges[k], edges[k+1]]``.

    Vectorised version of :func:`sup_on_interval` over a partition.
    """
    edges = np.asarray(edges, dtype=float)
    n = len(edges) - 1
    t = np.linspace(0.0, 1.0, samples)
    grid = edges[:-1, None] + (edges[1:] - edges[:-1])[:, None] * t[None, :]
    cell = np.repeat(np.arange(n), samples)
    xs = [grid.ravel()]
    ids = [cell]
    extra = list(points)
    if isinstance(f, GridFunction):
        extra += list(f.breakpoints)
    if extra:
        extra = np.asarray(extra, dtype=float)
        extra = extra[(extra >= edges[0]) & (extra <= edges[-1])]
        # a point on a shared edge belongs to both neighbouring cells
        right = np.clip(np.searchsorted(edges, extra, side="right") - 1, 0, n - 1)
        left = np.clip(np.searchsorted(edges, extra, side="left") - 1, 0, n - 1)
        xs += [extra, extra]
        ids += [right, left]
    x = np.concatenate(xs)
    idx = np.concatenate(ids)
    vals = np.abs(np.asarray(f(x), dtype=float))
    out = np.zeros(n)
    np.maximum.at(out, idx, vals)
    return out


class MomentTable:
    """Tabulated ``s -> int_0^s f(t) t^power dt`` with fast vectorised lookup.

    The support is cut into cells at every breakpoint and at least every
    ``cell_width``; cumulative values at cell edges come from the adaptive
    integrator and partial cells use a fixed Gauss-Legendre rule, which is
    accurate because ``f`` is smooth inside each cell.
    """

    def __init__(self, f: GridFunction, power: int = 1, cell_width: float = 0.125,
                 order: int = 24, cfg: QuadratureConfig | None = None):
        self.f = f
        self.power = power
        support = f.support_bound
        grid = np.arange(0.0, support, cell_width) if support > 0 else np.array([0.0])
        edges = np.unique(np.concatenate([[0.0, support], grid,
                                          [b for b in f.breakpoints if b <= support]]))
        self.edges = edges
        cfg = cfg or QuadratureConfig(abs_tol=1e-14, rel_tol=1e-13)
        weight = (lambda t: t ** power) if power else None
        pieces = [integrate(f, lo, hi, weight, cfg) for lo, hi in zip(edges[:-1], edges[1:])]
        self.cumulative = np.concatenate([[0.0], np.cumsum(pieces)])
        self._nodes, self._weights = np.polynomial.legendre.leggauss(order)

    def _gauss(self, lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        half = 0.5 * (hi - lo)
        t = 0.5 * (hi + lo)[:, None] + half[:, None] * self._nodes[None, :]
        vals = np.asarray(self.f(t.ravel()), dtype=float).reshape(t.shape)
        if self.power:
            vals = vals * t ** self.power
        return half * (vals @ self._weights)

    def _cell(self, s: np.ndarray) -> np.ndarray:
        return np.clip(np.searchsorted(self.edges, s, side="right") - 1, 0, len(self.edges) - 2)

    def antiderivative(self, s) -> np.ndarray:
        s = np.clip(np.atleast_1d(np.asarray(s, dtype=float)), 0.0, self.edges[-1])
        k = self._cell(s)
        return self.cumulative[k] + self._gauss(self.edges[k], s)

    def segment(self, lo, hi) -> np.ndarray:
        """``int_lo^hi f(t) t^power dt`` elementwise (requires ``lo <= hi``)."""
        top = self.edges[-1]
        lo = np.clip(np.atleast_1d(np.asarray(lo, dtype=float)), 0.0, top)
        hi = np.clip(np.atleast_1d(np.asarray(hi, dtype=float)), 0.0, top)
        lo, hi = np.broadcast_arrays(lo, hi)
        same = self._cell(lo) == self._cell(hi)
        out = np.empty(lo.shape)
        if np.any(same):
            out[same] = self._gauss(lo[same], hi[same])
        if np.any(~same):
            out[~same] = self.antiderivative(hi[~same]) - self.antiderivative(lo[~same])
        return out


def as_points(values: Iterable[float]) -> tuple:
    return tuple(float(v) for v in values if math.isfinite(v))
