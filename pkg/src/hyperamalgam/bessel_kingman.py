"""Bessel-Kingman hypergroups on the half line, with closed forms at alpha = 1/2.

At ``alpha = 1/2`` (the motion hypergroup) Haar measure is ``x**2 dx``, the
characters are ``sin(lx)/(lx)`` and

    eps_x * eps_y (f) = (1 / 2xy) int_{|x-y|}^{x+y} f(z) z dz,

which lets translates and convolutions be evaluated from a tabulated
antiderivative of ``f(t) t`` instead of nested adaptive quadrature.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy import special

from .errors import DomainError, NonConvergence
from .numerics import (
    DEFAULT_CONFIG,
    GridFunction,
    QuadratureConfig,
    integrate,
)

MOTION_ALPHA = 0.5
_SERIES_LIMIT = 12.0
_MAX_TERMS = 10_000


@dataclass(frozen=True)
class BKParams:
    alpha: float

    def __post_init__(self):
        if not self.alpha > -0.5:
            raise DomainError(f"alpha must exceed -1/2, got {self.alpha}")


@dataclass(frozen=True)
class SpectralAtoms:
    """Finite nonnegative measure ``sum w_i delta_{lambda_i}`` on the dual."""

    atoms: tuple = ()

    def __post_init__(self):
        atoms = tuple((float(l), float(w)) for l, w in self.atoms)
        for l, w in atoms:
            if l < 0 or w < 0 or not (math.isfinite(l) and math.isfinite(w)):
                raise DomainError("spectral atoms need lambda >= 0 and weight >= 0")
        object.__setattr__(self, "atoms", atoms)

    @property
    def total(self) -> float:
        return sum(w for _, w in self.atoms)

    def __len__(self):
        return len(self.atoms)


def _check_alpha(alpha: float) -> float:
    BKParams(alpha)
    return float(alpha)


def haar_weight(alpha: float, x):
    """Density ``x**(2 alpha + 1)`` of the Haar measure."""
    _check_alpha(alpha)
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DomainError("Haar weight needs x >= 0")
    out = arr ** (2 * alpha + 1)
    return float(out) if out.ndim == 0 else out


def _kernel_constant(alpha: float) -> float:
    # Gamma(a+1) / (Gamma(1/2) Gamma(a+1/2) 2^(2a-1)), in log form for large alpha
    return math.exp(math.lgamma(alpha + 1) - math.lgamma(0.5) - math.lgamma(alpha + 0.5)
                    - (2 * alpha - 1) * math.log(2.0))


def kernel(alpha: float, x: float, y: float, z):
    """Density ``K_alpha(x, y, z)`` of ``eps_x * eps_y`` against ``z**(2a+1) dz``.

    Zero outside ``(|x-y|, x+y)``. At the endpoints it is 0 except for
    ``alpha = 1/2``, where the constant middle branch extends to them.
    """
    alpha = _check_alpha(alpha)
    if x <= 0 or y <= 0:
        raise DomainError("kernel needs x, y > 0")
    z = np.asarray(z, dtype=float)
    lo, hi = abs(x - y), x + y
    if alpha == 0.5:
        inside = (z >= lo) & (z <= hi) & (z > 0)
    else:
        inside = (z > lo) & (z < hi)
    out = np.zeros(z.shape)
    if np.any(inside):
        zi = z[inside]
        bracket = (zi * zi - lo * lo) * (hi * hi - zi * zi)
        out[inside] = (_kernel_constant(alpha) * bracket ** (alpha - 0.5)
                       / (x * y * zi) ** (2 * alpha))
    return float(out) if out.ndim == 0 else out


def _j_series(alpha: float, x: np.ndarray) -> np.ndarray:
    w = -(x * 0.5) ** 2
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, _MAX_TERMS + 1):
        term = term * w / (k * (alpha + k))
        total = total + term
        if np.all(np.abs(term) <= 1e-17 * np.maximum(1.0, np.abs(total))):
            return total
    raise NonConvergence(f"j_alpha series did not converge in {_MAX_TERMS} terms")


def j_alpha(alpha: float, x):
    """Normalised Bessel function ``j_a(x) = Gamma(a+1) (2/x)^a J_a(x)``, ``j_a(0) = 1``.

    Small arguments use the power series; large ones use scipy's ``jv`` because
    the alternating series cancels catastrophically there. ``alpha = 1/2``
    always uses ``sin(x)/x``.
    """
    alpha = _check_alpha(alpha)
    arr = np.abs(np.asarray(x, dtype=float))
    if alpha == 0.5:
        out = np.sinc(arr / np.pi)
    else:
        out = np.empty(arr.shape)
        small = arr <= _SERIES_LIMIT
        if np.any(small):
            out[small] = _j_series(alpha, arr[small])
        big = ~small
        if np.any(big):
            xb = arr[big]
            logc = math.lgamma(alpha + 1) + alpha * (math.log(2.0) - np.log(xb))
            out[big] = np.exp(logc) * special.jv(alpha, xb)
        if not np.all(np.isfinite(out)):
            raise NonConvergence("j_alpha evaluation produced a non-finite value")
    return float(out) if out.ndim == 0 else out


def motion_character(lam: float, x):
    """``sin(lam x) / (lam x)``, the motion-hypergroup character."""
    return j_alpha(MOTION_ALPHA, lam * np.asarray(x, dtype=float))


def _breaks(f) -> tuple:
    return f.breakpoints if isinstance(f, GridFunction) else ()


def convolve_points(alpha: float, x: float, y: float, f: Callable, cfg: QuadratureConfig | None = None) -> float:
    """``eps_x * eps_y (f)``.

    ``f`` is a :class:`GridFunction` or a vectorised callable. For
    ``alpha != 1/2`` the integral is taken in the angle variable
    ``z = sqrt(x^2 + y^2 - 2xy cos t)``, where the kernel becomes
    ``sin(t)^(2 alpha)`` up to a constant and has no endpoint singularity.
    """
    alpha = _check_alpha(alpha)
    cfg = cfg or DEFAULT_CONFIG
    if x < 0 or y < 0:
        raise DomainError("points of the half line must be >= 0")
    if x == 0 or y == 0:
        return float(f(max(x, y)))
    lo, hi = abs(x - y), x + y
    if isinstance(f, GridFunction) and hi > f.x_max * (1 + 1e-12):
        raise DomainError(f"x + y = {hi} exceeds the window {f.x_max}")
    inner = [b for b in _breaks(f) if lo < b < hi]
    if alpha == 0.5:
        val = integrate(f, lo, hi, weight=lambda z: z, cfg=cfg, points=inner)
        return val / (2 * x * y)
    cos_pts = [(x * x + y * y - b * b) / (2 * x * y) for b in inner]
    theta_pts = [math.acos(min(1.0, max(-1.0, c))) for c in cos_pts]

    def integrand(t):
        z = np.sqrt(np.maximum(x * x + y * y - 2 * x * y * np.cos(t), 0.0))
        z = np.clip(z, lo, hi)
        return np.asarray(f(z), dtype=float) * np.sin(t) ** (2 * alpha)

    c = math.exp(math.lgamma(alpha + 1) - 0.5 * math.log(math.pi) - math.lgamma(alpha + 0.5))
    return c * integrate(integrand, 0.0, math.pi, cfg=cfg, points=theta_pts)


def kernel_mass(alpha: float, x: float, y: float, cfg: QuadratureConfig | None = None) -> float:
    """``int K_alpha(x, y, z) z^(2a+1) dz`` by direct quadrature in ``z``."""
    alpha = _check_alpha(alpha)
    cfg = cfg or QuadratureConfig(abs_tol=1e-12, rel_tol=1e-11, max_subdivisions=2 ** 16)
    lo, hi = abs(x - y), x + y
    if alpha < 0.5:
        # integrable endpoint singularities: substitute z = mid - half cos(t)
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)

        def g(t):
            z = mid - half * np.cos(t)
            return kernel(alpha, x, y, z) * z ** (2 * alpha + 1) * half * np.sin(t)

        return integrate(g, 0.0, math.pi, cfg=cfg)
    return integrate(lambda z: kernel(alpha, x, y, z) * z ** (2 * alpha + 1), lo, hi, cfg=cfg)


def character_product_residual(alpha: float, lam: float, x: float, y: float,
                               cfg: QuadratureConfig | None = None) -> float:
    """``|phi(x) phi(y) - eps_x * eps_y (phi)|`` for ``phi = j_alpha(lam .)``."""
    phi = lambda z: j_alpha(alpha, lam * np.asarray(z, dtype=float))
    lhs = phi(x) * phi(y)
    return abs(lhs - convolve_points(alpha, x, y, phi, cfg))


# ----------------------------------------------------------------------------
# motion hypergroup: translates, transforms, convolution


def interval_translate(a: float, b: float, y: float, x):
    """``tau_y 1_[a,b) (x)`` in closed form (vectorised in ``x``)."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or y < 0:
        raise DomainError("translates need x, y >= 0")
    if y == 0:
        out = ((x >= a) & (x < b)).astype(float)
        return float(out) if out.ndim == 0 else out
    lo = np.maximum(np.abs(x - y), a)
    hi = np.minimum(x + y, b)
    with np.errstate(divide="ignore", invalid="ignore"):
        val = np.where(hi > lo, (hi - lo) * (hi + lo) / (4 * x * y), 0.0)
    at0 = x == 0
    if np.any(at0):
        val = np.where(at0, float(a <= y < b), val)
    return float(val) if val.ndim == 0 else val


def translate_indicator(y: float, x):
    """``tau_y 1_[0,1] (x)``: 1 if ``x+y <= 1``, ``(1-(x-y)^2)/(4xy)`` if
    ``x+y > 1`` and ``|x-y| < 1``, else 0."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or y < 0:
        raise DomainError("translates need x, y >= 0")
    d = x - y
    with np.errstate(divide="ignore", invalid="ignore"):
        mid = (1 - d * d) / (4 * x * y)
    out = np.where(x + y <= 1, 1.0, np.where(np.abs(d) < 1, mid, 0.0))
    return float(out) if out.ndim == 0 else out


def indicator_translate_breakpoints(a: float, b: float, y: float) -> tuple:
    """Points where ``tau_y 1_[a,b)`` may fail to be smooth."""
    pts = [y + a, abs(y - a), y + b, abs(y - b), a - y, b - y]
    return tuple(sorted({p for p in pts if p >= 0}))


def motion_translate(y: float, f: GridFunction, cfg: QuadratureConfig | None = None) -> GridFunction:
    """``tau_y f (x) = (1/2xy) int_{|x-y|}^{x+y} f(t) t dt`` as a new GridFunction."""
    if y < 0:
        raise DomainError("translation needs y >= 0")
    if y == 0:
        return f
    table = f.moments
    y = float(y)

    def rule(x):
        x = np.asarray(x, dtype=float)
        out = np.empty(x.shape)
        zero = x == 0
        if np.any(zero):
            out[zero] = f(y)
        nz = ~zero
        if np.any(nz):
            xs = x[nz]
            out[nz] = table.segment(np.abs(xs - y), xs + y) / (2 * xs * y)
        return out

    bps = set(f.breakpoints) | {y}
    for b in f.breakpoints:
        bps |= {b + y, abs(b - y)}
    support = f.support_bound + y
    return GridFunction(rule, support, tuple(bps), max(f.x_max, support))


def indicator_fourier(eps: float, lam):
    """``(sin(l e) - l e cos(l e)) / l^3``, with ``e^3 / 3`` at ``l = 0``."""
    lam = np.asarray(lam, dtype=float)
    le = lam * eps
    with np.errstate(divide="ignore", invalid="ignore"):
        val = (np.sin(le) - le * np.cos(le)) / lam ** 3
    # series near 0 avoids cancellation: e^3 (1/3 - (le)^2/30 + (le)^4/840)
    small = np.abs(le) < 1e-2
    series = eps ** 3 * (1 / 3 - le ** 2 / 30 + le ** 4 / 840)
    out = np.where(small, series, val)
    return float(out) if out.ndim == 0 else out


def motion_fourier(f: GridFunction, lam: float, cfg: QuadratureConfig | None = None) -> float:
    """``f^(lam) = int f(x) j(lam x) x^2 dx``."""
    if lam < 0:
        raise DomainError("lambda must be >= 0")
    cfg = cfg or QuadratureConfig(abs_tol=1e-13, rel_tol=1e-12, max_subdivisions=2 ** 16)
    s = f.support_bound
    if lam == 0:
        return integrate(f, 0.0, s, weight=lambda x: x * x, cfg=cfg)
    # cut at every half period so the rule never straddles many oscillations
    cuts = np.arange(np.pi / lam, s, np.pi / lam)
    val = integrate(f, 0.0, s, weight=lambda x: np.sin(lam * x) * x, cfg=cfg, points=cuts[:4096])
    return val / lam


def _gl_cells(edges: np.ndarray, order: int):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    lo, hi = edges[:-1], edges[1:]
    half = 0.5 * (hi - lo)
    x = (0.5 * (hi + lo))[:, None] + half[:, None] * nodes[None, :]
    w = half[:, None] * weights[None, :]
    return x.ravel(), w.ravel()


def fine_edges(a: float, b: float, width: float, points: Iterable[float] = ()) -> np.ndarray:
    n = max(1, int(math.ceil((b - a) / width)))
    grid = np.linspace(a, b, n + 1)
    extra = [p for p in points if a < p < b]
    return np.unique(np.concatenate([grid, extra]))


def fourier_nodes(f: GridFunction, lam_max: float, order: int = 24,
                  width: float | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes ``x`` and weights ``w f(x) x^2`` for ``f^``.

    Cells are cut at the breakpoints of ``f`` and are short enough
    (``<= pi / (2 lam_max)``) for the oscillating kernel to be resolved.
    """
    s = f.support_bound
    if width is None:
        width = min(0.25, math.pi / (2 * lam_max)) if lam_max > 0 else 0.25
    x, w = _gl_cells(fine_edges(0.0, s, width, f.breakpoints), order)
    return x, f(x) * x * x * w


def fourier_from_nodes(nodes: tuple[np.ndarray, np.ndarray], lams) -> np.ndarray:
    x, fw = nodes
    lams = np.asarray(lams, dtype=float)
    flat = lams.ravel()
    out = np.empty(flat.size)
    for start in range(0, flat.size, 256):
        block = flat[start:start + 256]
        out[start:start + 256] = np.sinc(np.outer(block, x) / np.pi) @ fw
    return out.reshape(lams.shape)


def motion_fourier_grid(f: GridFunction, lams: Sequence[float], order: int = 24,
                        width: float | None = None) -> np.ndarray:
    """``f^`` at many frequencies with one fixed composite Gauss-Legendre rule."""
    lams = np.asarray(lams, dtype=float)
    if np.any(lams < 0):
        raise DomainError("lambda must be >= 0")
    if f.support_bound == 0:
        return np.zeros(lams.shape)
    lmax = float(np.max(lams)) if lams.size else 0.0
    return fourier_from_nodes(fourier_nodes(f, lmax, order, width), lams)


def motion_convolve(f: GridFunction, g: GridFunction, order: int = 20, width: float = 0.25) -> GridFunction:
    """``f * g`` on the motion hypergroup.

    ``(f*g)(x) = (1/2x) int g(y) y [F(x+y) - F(|x-y|)] dy`` with ``F`` the
    antiderivative of ``f(t) t``; the ``y`` integral uses composite
    Gauss-Legendre on cells cut at every kink ``|x +- b|`` of the integrand.
    """
    table = f.moments
    sg = g.support_bound
    fb = tuple(f.breakpoints) + (f.support_bound,)

    def value(x):
        if sg == 0:
            return 0.0
        if x == 0:
            return float(integrate(lambda y: g(y) * f(y) * y * y, 0.0, min(sg, f.support_bound),
                                   points=fb + g.breakpoints)) if f.support_bound > 0 else 0.0
        kinks = [x + b for b in fb] + [abs(x - b) for b in fb] + [b - x for b in fb]
        edges = fine_edges(0.0, sg, width, list(g.breakpoints) + kinks)
        y, w = _gl_cells(edges, order)
        seg = table.segment(np.abs(x - y), x + y)
        return float(np.sum(w * g(y) * y * seg)) / (2 * x)

    def rule(xs):
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        return np.array([value(float(x)) for x in xs.ravel()]).reshape(xs.shape)

    bps = {0.0}
    for a in fb + tuple(g.breakpoints) + (sg,):
        for b in fb:
            bps |= {a + b, abs(a - b)}
    support = f.support_bound + sg
    return GridFunction(rule, support, tuple(bps), max(support, f.x_max, g.x_max, 1e-300))


def indicator_convolution(a: float, b: float, c: float, d: float, x):
    """``(1_[a,b) * 1_[c,d))(x) = int_c^d tau_x 1_[a,b)(y) y^2 dy``, exactly.

    For fixed ``x > 0`` the integrand ``y (hi^2 - lo^2) / 4x`` is a cubic in
    ``y`` between the kinks ``x +- a``, ``a - x``, ``x +- b``, ``b - x``, so a
    2-point Gauss rule on each piece is exact.
    """
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.zeros(x.shape)
    zero = x == 0
    if np.any(zero):
        lo, hi = max(a, c), min(b, d)
        out[zero] = (hi ** 3 - lo ** 3) / 3 if hi > lo else 0.0
    xs = x[~zero]
    if xs.size:
        kinks = np.stack([xs + a, np.abs(xs - a), a - xs, xs + b, np.abs(xs - b), b - xs,
                          np.full_like(xs, c), np.full_like(xs, d)], axis=1)
        kinks = np.sort(np.clip(kinks, c, d), axis=1)
        lo, hi = kinks[:, :-1], kinks[:, 1:]
        mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
        total = np.zeros(xs.shape)
        for t in (-1 / math.sqrt(3), 1 / math.sqrt(3)):
            y = mid + half * t
            xx = xs[:, None]
            l = np.maximum(np.abs(xx - y), a)
            h = np.minimum(xx + y, b)
            val = np.where(h > l, y * (h - l) * (h + l) / (4 * xx), 0.0)
            total += np.sum(half * val, axis=1)
        out[~zero] = total
    return out


def indicator_self_convolution(eps: float, x):
    """``1_[0,eps] * 1_[0,eps] (x)`` in closed form."""
    x = np.asarray(x, dtype=float)
    s = x / eps
    out = np.zeros(s.shape)
    inner = s <= 2
    si = s[inner]
    val = np.where(si <= 1, (1 - np.minimum(si, 1)) ** 3 / 3, 0.0)
    pos = si > 0
    sp = np.where(pos, si, 1.0)
    lo = np.abs(1 - sp)

    def G(u):
        return u * u / 2 - (u ** 4 / 4 - 2 * sp * u ** 3 / 3 + sp * sp * u * u / 2)

    # int_{|1-s|}^{1} y [ (s+y)^2/2 - ... ] dy / (2 s): contribution of y with x+y > eps
    upper = np.where(sp <= 1, 1.0, 1.0)
    lower = np.where(sp <= 1, 1 - sp, lo)
    add = (G(upper) - G(lower)) / (4 * sp)
    val = val + np.where(pos, add, 0.0)
    val = np.where(pos, val, 1 / 3)
    out[inner] = val
    out = out * eps ** 3
    return float(out) if out.ndim == 0 else out
