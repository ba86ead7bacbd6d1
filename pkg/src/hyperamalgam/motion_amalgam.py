"""Amalgam norms on the motion hypergroup and the verifiers built on them.

The discrete norm tiles the half line by ``I_n = [n-1, n)`` with Haar masses
``omega_n = n^2 - n + 1/3``. The continuous norm slides the window
``tau_y 1_[0,1]`` over a finite sample set of centres ``y`` that always
contains ``0`` and every ``n + 1/2``, the centres the lower equivalence
estimate relies on.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .bessel_kingman import (
    fourier_from_nodes,
    fourier_nodes,
    indicator_convolution,
    interval_translate,
    motion_convolve,
    motion_fourier_grid,
    translate_indicator,
)
from .errors import DomainError
from .numerics import DEFAULT_CONFIG, GridFunction, QuadratureConfig, cell_sups, integrate
from .params import INF, AmalgamParams

_SLACK = 1e-9


def interval_mass(n: int) -> float:
    """``omega(I_n) = n^2 - n + 1/3``."""
    if int(n) != n or n < 1:
        raise DomainError(f"interval index must be a positive integer, got {n}")
    n = int(n)
    return n * n - n + 1.0 / 3.0


def interval_masses(n_max: int) -> np.ndarray:
    n = np.arange(1, n_max + 1, dtype=float)
    return n * n - n + 1.0 / 3.0


def _check_support(f: GridFunction, n_max: int) -> None:
    if n_max < 1:
        raise DomainError("N_max must be >= 1")
    if f.support_bound > n_max * (1 + 1e-12):
        raise DomainError(f"support bound {f.support_bound} exceeds N_max = {n_max}")


def cell_integrals(f: GridFunction, p: float, n_max: int, cfg: QuadratureConfig | None = None) -> np.ndarray:
    """``int_{I_n} |f|^p domega`` for ``n = 1..n_max``."""
    cfg = cfg or DEFAULT_CONFIG
    fp = f.abs_power(p).with_window(max(f.x_max, n_max))
    top = fp.support_bound
    out = np.zeros(n_max)
    for n in range(1, n_max + 1):
        lo, hi = n - 1.0, min(float(n), top)
        if hi > lo:
            out[n - 1] = integrate(fp, lo, hi, weight=lambda x: x * x, cfg=cfg)
    return out


def cell_values(f: GridFunction, p: float, n_max: int, cfg: QuadratureConfig | None = None) -> np.ndarray:
    """Normalised local sizes ``(omega_n^-1 int_{I_n} |f|^p)^{1/p}`` (``sup |f|`` if ``p = inf``)."""
    if p == INF:
        return cell_sups(f.with_window(max(f.x_max, n_max)), np.arange(n_max + 1.0), samples=129)
    w = interval_masses(n_max)
    return (cell_integrals(f, p, n_max, cfg) / w) ** (1.0 / p)


def combine_cells(values: np.ndarray, q: float, n_max: int | None = None) -> float:
    if q == INF:
        return float(np.max(values)) if len(values) else 0.0
    w = interval_masses(len(values))
    return float(np.sum(w * values ** q) ** (1.0 / q))


def discrete_norm(f: GridFunction, params: AmalgamParams, n_max: int,
                  cfg: QuadratureConfig | None = None) -> float:
    """``(sum_n omega_n (omega_n^-1 int_{I_n} |f|^p domega)^{q/p})^{1/q}`` with the
    usual sup conventions for infinite exponents."""
    _check_support(f, n_max)
    return combine_cells(cell_values(f, params.p, n_max, cfg), params.q)


def default_sample_set(n_max: int, step: float = 0.25) -> tuple:
    """``{0, step, 2 step, ...} U {n + 1/2}`` covering every window that meets ``[0, n_max]``."""
    grid = set(np.round(np.arange(0.0, n_max + 1 + 1e-9, step), 12).tolist())
    grid |= {n + 0.5 for n in range(0, n_max + 1)}
    return tuple(sorted(grid))


def window_integral(f: GridFunction, p: float, y: float, cfg: QuadratureConfig | None = None) -> float:
    """``int |f|^p tau_y 1_[0,1] domega``."""
    cfg = cfg or DEFAULT_CONFIG
    lo = max(0.0, y - 1.0)
    hi = min(y + 1.0, f.support_bound)
    if hi <= lo:
        return 0.0
    fp = f.abs_power(p)
    kinks = [abs(1.0 - y), y - 1.0]
    return integrate(fp, lo, hi, weight=lambda x: translate_indicator(y, x) * x * x,
                     cfg=cfg, points=kinks)


def continuous_norm(f: GridFunction, p: float, sample_set: Iterable[float],
                    cfg: QuadratureConfig | None = None) -> float:
    """``max_y (int |f|^p tau_y 1_[0,1] domega)^{1/p}`` over the sample set.

    For ``p = inf`` the window norm equals ``||f||_inf`` for every window
    family, so the sampled sup of ``|f|`` is returned instead.
    """
    if p == INF:
        return cell_sups(f, np.arange(0.0, math.ceil(f.support_bound) + 1.0), samples=257).max()
    best = 0.0
    for y in sample_set:
        if y - 1 >= f.support_bound:
            continue
        best = max(best, window_integral(f, p, float(y), cfg))
    return best ** (1.0 / p)


def lower_constant(p: float) -> float:
    return (32.0 / 3.0) ** (1.0 / p)


def upper_constant(p: float) -> float:
    return max(1 + 3 ** (1 / p) + 7 ** (1 / p), 3 ** (1 + 1 / p))


@dataclass(frozen=True)
class EquivalenceReport:
    p: float
    discrete: float
    continuous: float
    C_lower: float
    C_upper: float
    lower_ok: bool
    upper_ok: bool

    @property
    def passed(self) -> bool:
        return self.lower_ok and self.upper_ok

    @property
    def lhs(self) -> float:
        return self.discrete

    @property
    def rhs(self) -> float:
        return self.continuous


def verify_equivalence(f: GridFunction, p: float, cfg: QuadratureConfig | None = None,
                       n_max: int | None = None, sample_set: Sequence[float] | None = None) -> EquivalenceReport:
    """Check ``||f||_{p,inf} <= (32/3)^{1/p} ||f||_{p,inf,[0,1]}`` and
    ``||f||_{p,inf,[0,1]} <= max(1 + 3^{1/p} + 7^{1/p}, 3^{1+1/p}) ||f||_{p,inf}``."""
    if not 1 <= p < INF:
        raise DomainError("equivalence is stated for 1 <= p < inf")
    n_max = n_max or max(1, int(math.ceil(f.support_bound)))
    ys = default_sample_set(n_max) if sample_set is None else sample_set
    d = discrete_norm(f, AmalgamParams(p, INF), n_max, cfg)
    c = continuous_norm(f, p, ys, cfg)
    lo, up = lower_constant(p), upper_constant(p)
    return EquivalenceReport(p, d, c, lo, up,
                             d <= lo * c * (1 + _SLACK) + _SLACK,
                             c <= up * d * (1 + _SLACK) + _SLACK)


# ----------------------------------------------------------------------------
# translation on (L^inf, l^1)


def _interval_translate_sups(a: float, b: float, y: float, n_cells: int) -> np.ndarray:
    """Exact ``sup_{I_k} tau_y 1_[a,b)`` for ``k = 1..n_cells``.

    On each cell the translate is a ratio of quadratics with a single
    interior critical point ``sqrt(y^2 - b^2)``; the sup is attained at a
    cell end, a branch switch or that point.
    """
    cand = [y, y + a, abs(y - a), a - y, y + b, abs(y - b), b - y]
    if y > b:
        cand.append(math.sqrt(y * y - b * b))
    cand = np.array([c for c in cand if c > 0], dtype=float)
    edges = np.arange(0.0, n_cells + 1.0)
    k_lo = np.arange(n_cells)
    # closed cells; the left end of I_1 is handled by its limit below
    xs = [edges[1:-1], edges[1:]]
    ks = [k_lo[1:], k_lo]
    cell = np.clip(np.floor(cand).astype(int), 0, n_cells - 1)
    ok = cand <= n_cells
    xs.append(cand[ok])
    ks.append(cell[ok])
    x = np.concatenate(xs)
    k = np.concatenate(ks)
    vals = interval_translate(a, b, y, x)
    out = np.zeros(n_cells)
    np.maximum.at(out, k, vals)
    # x -> 0+: density of t dt / (2xy) on [y-x, y+x], i.e. 1 inside, 1/2 at an end
    limit = 1.0 if a < y < b else (0.5 if y in (a, b) else 0.0)
    out[0] = max(out[0], limit)
    return out


def linf_l1_norm_of_translate(n: int, y: float) -> float:
    """``||tau_y 1_{I_n}||_{(L^inf, l^1)} = sum_k omega_k sup_{I_k} tau_y 1_{I_n}``."""
    cells = int(math.ceil(n + y)) + 1
    sups = _interval_translate_sups(n - 1.0, float(n), float(y), cells)
    return float(np.sum(interval_masses(cells) * sups))


def translation_ratio(n: int, y: float, cfg: QuadratureConfig | None = None) -> float:
    """``||tau_y 1_{I_n}||_{(L^inf,l^1)} / ||1_{I_n}||_{(L^inf,l^1)}``.

    The denominator is ``omega_n``. Suprema are exact (closed-form translate
    evaluated at all candidate maximisers).
    """
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    if y < 0:
        raise DomainError("y must be >= 0")
    if y == 0:
        return 1.0
    return linf_l1_norm_of_translate(int(n), float(y)) / interval_mass(n)


TRANSLATION_BOUND = 2 + 5 * 24


# ----------------------------------------------------------------------------
# Young, Hausdorff-Young, Theorem on transforms


def _young_target(a: AmalgamParams, b: AmalgamParams) -> AmalgamParams:
    rp = 1 / a.p + 1 / b.p - 1
    rq = 1 / a.q + 1 / b.q - 1
    if not (-1e-15 <= rp <= 1 + 1e-15 and -1e-15 <= rq <= 1 + 1e-15):
        raise DomainError("exponent arithmetic leaves the unit square")
    to_exp = lambda r: INF if r <= 1e-15 else 1 / min(r, 1.0)
    return AmalgamParams(to_exp(rp), to_exp(rq))


@dataclass(frozen=True)
class YoungReport:
    target: AmalgamParams
    lhs: float
    rhs: float
    ratio: float


def young_check(f: GridFunction, g: GridFunction, fp: AmalgamParams, gp: AmalgamParams,
                cfg: QuadratureConfig | None = None) -> YoungReport:
    """``||f*g||_{(p,q)}`` against ``||f||_{(p1,q1)} ||g||_{(p2,q2)}``; ratio only."""
    target = _young_target(fp, gp)
    h = motion_convolve(f, g)
    n_h = max(1, int(math.ceil(h.support_bound)))
    lhs = discrete_norm(h, target, n_h, cfg)
    rf = discrete_norm(f, fp, max(1, int(math.ceil(f.support_bound))), cfg)
    rg = discrete_norm(g, gp, max(1, int(math.ceil(g.support_bound))), cfg)
    rhs = rf * rg
    ratio = lhs / rhs if rhs > 0 else (0.0 if lhs == 0 else INF)
    return YoungReport(target, lhs, rhs, ratio)


def hy_witness(n: int, cfg: QuadratureConfig | None = None) -> GridFunction:
    """``g_n = 3 1_{I_1} * 1_[n-2, n+1)`` (``1_[0,2)`` for ``n = 1``); equals 1 on ``I_n``."""
    if int(n) != n or n < 1:
        raise DomainError("n must be a positive integer")
    n = int(n)
    a, b = (0.0, 2.0) if n == 1 else (max(0.0, n - 2.0), n + 1.0)
    bps = {0.0, 1.0, a, b, a + 1, b + 1, abs(a - 1), abs(b - 1)}
    return GridFunction(lambda x: 3.0 * indicator_convolution(a, b, 0.0, 1.0, x), b + 1.0,
                        tuple(bps), b + 1.0)


def fourier_gridfunction(f: GridFunction, lam_max: float, order: int = 24) -> GridFunction:
    """``lam -> f^(lam)`` on ``[0, lam_max]`` as a GridFunction on the dual."""
    return GridFunction(lambda l: motion_fourier_grid(f, l, order=order), lam_max, (), lam_max)


@dataclass(frozen=True)
class HYReport:
    n: int
    lhs: float
    rhs: float
    ratio: float
    ratio_doubled: float


def hausdorff_young_ratio(f: GridFunction, lam_max: float = 32.0,
                          cfg: QuadratureConfig | None = None) -> HYReport:
    """``||f^||_{(inf,2)} / ||f||_{(2,1)}`` on ``[0, lam_max]`` and on ``[0, 2 lam_max]``."""
    n_f = max(1, int(math.ceil(f.support_bound)))
    rhs = discrete_norm(f, AmalgamParams(2, 1), n_f, cfg)

    nodes = fourier_nodes(f, 2 * lam_max)

    def lhs_at(L):
        lams = np.linspace(0.0, L, int(64 * L) + 1)
        vals = np.abs(fourier_from_nodes(nodes, lams))
        cells = np.minimum(np.floor(lams).astype(int), int(L) - 1)
        sups = np.zeros(int(L))
        np.maximum.at(sups, cells, vals)
        w = interval_masses(int(L))
        return float(np.sqrt(np.sum(w * sups ** 2)))

    l1 = lhs_at(lam_max)
    l2 = lhs_at(2 * lam_max)
    return HYReport(0, l1, rhs, l1 / rhs, l2 / rhs)


@dataclass(frozen=True)
class TransformsReport:
    cond1: float
    cond3: float
    cond2_truncated: float
    lam_max: float

    @property
    def all_finite(self) -> bool:
        return all(math.isfinite(v) for v in (self.cond1, self.cond3, self.cond2_truncated))


def check_transforms_theorem(g: GridFunction, cfg: QuadratureConfig | None = None,
                             lam_max: int = 32) -> TransformsReport:
    """The three conditions for ``f = g * g~`` (``g~ = g`` on this hypergroup).

    (1) ``int_0^1 |f|^2 domega``, (3) ``||f||_{(2,inf)}``, (2) ``||f^||_{(1,2)}``
    over ``[0, lam_max]`` with dual measure ``lam^2 dlam``. ``f^ = (g^)^2`` by
    the convolution theorem, which is tested separately.
    """
    cfg = cfg or DEFAULT_CONFIG
    f = motion_convolve(g, g)
    top = min(1.0, f.support_bound)
    cond1 = integrate(f.abs_power(2), 0.0, top, weight=lambda x: x * x, cfg=cfg) if top > 0 else 0.0
    cond3 = discrete_norm(f, AmalgamParams(2, INF), max(1, int(math.ceil(f.support_bound))), cfg)
    fhat = GridFunction(lambda l: motion_fourier_grid(g, l) ** 2, float(lam_max), (), float(lam_max))
    cond2 = discrete_norm(fhat, AmalgamParams(1, 2), int(lam_max), cfg)
    return TransformsReport(cond1, cond3, cond2, float(lam_max))


# ----------------------------------------------------------------------------
# Wiener property on the motion hypergroup


def wiener_ratio(f: GridFunction, p: float, sample_set: Sequence[float] | None = None,
                 cfg: QuadratureConfig | None = None) -> float:
    """``||f||_{p,inf,[0,1]} / ||f 1_[0,1]||_p`` over the window of ``f``."""
    if sample_set is None:
        top = int(math.floor(f.support_bound)) - 1
        sample_set = default_sample_set(max(top, 0))
        sample_set = tuple(y for y in sample_set if y + 1 <= f.support_bound)
    num = continuous_norm(f, p, sample_set, cfg)
    den = integrate(f.abs_power(p), 0.0, min(1.0, f.support_bound), weight=lambda x: x * x,
                    cfg=cfg or DEFAULT_CONFIG) ** (1.0 / p)
    return num / den
