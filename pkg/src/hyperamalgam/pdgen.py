"""Seeded generators of positive definite and positive-type test functions."""
from __future__ import annotations

import random

import numpy as np

from .bessel_kingman import SpectralAtoms, indicator_self_convolution, motion_convolve
from .dyadic import ZERO, Dyadic
from .dyadic_hyper import DiscreteFn, Space, _space, synthesize_pd
from .errors import DomainError
from .numerics import GridFunction

DEFAULT_WINDOW = 64.0
LAMBDA_GRID = 1.0 / 16.0


def bochner_motion(atoms: SpectralAtoms, x_max: float = DEFAULT_WINDOW) -> GridFunction:
    """``f(x) = sum_i c_i sin(l_i x) / (l_i x)`` on ``[0, x_max]``."""
    if not isinstance(atoms, SpectralAtoms):
        atoms = SpectralAtoms(tuple(atoms))
    lams = np.array([l for l, _ in atoms.atoms], dtype=float)
    ws = np.array([w for _, w in atoms.atoms], dtype=float)

    def rule(x):
        x = np.asarray(x, dtype=float)
        if lams.size == 0:
            return np.zeros(x.shape)
        return np.sinc(np.multiply.outer(x, lams) / np.pi) @ ws

    return GridFunction(rule, x_max, (), x_max)


def random_spectral_atoms(seed: int, n_atoms: int | None = None, lam_max: float = 20.0) -> SpectralAtoms:
    """Atoms on the ``1/16`` grid of ``[0, lam_max]`` with weights in ``(0, 1]``."""
    rng = random.Random(seed)
    n = n_atoms if n_atoms is not None else rng.randint(1, 5)
    steps = int(round(lam_max / LAMBDA_GRID))
    atoms = [(rng.randint(0, steps) * LAMBDA_GRID, rng.randint(1, 16) / 16.0) for _ in range(n)]
    return SpectralAtoms(tuple(sorted(atoms)))


def convolution_square(g: GridFunction, cfg=None) -> GridFunction:
    """``g * g~``; the involution is the identity here so this is ``g * g``."""
    return motion_convolve(g, g)


def unbounded_positive_type(n_terms: int, cfg=None) -> GridFunction:
    """``sum_{n <= n_terms} l_n 1_{U_n} * 1_{U_n}`` with ``U_n = [0, 2^-n]``, ``l_n = 1/(n omega(U_n))``.

    Each term has L^1 norm ``l_n omega(U_n)^2 = omega(U_n)/n <= 1/n^2`` and
    value ``1/n`` at 0, so the full sum is integrable but unbounded near the
    identity.
    """
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    eps = [2.0 ** -k for k in range(1, n_terms + 1)]
    lam = [1.0 / (k * (e ** 3 / 3)) for k, e in zip(range(1, n_terms + 1), eps)]

    def rule(x):
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape)
        for e, l in zip(eps, lam):
            out = out + l * indicator_self_convolution(e, x)
        return out

    bps = sorted({e for e in eps} | {2 * e for e in eps} | {0.0})
    return GridFunction(rule, 2 * eps[0], tuple(bps), 2 * eps[0])


def random_alphas(space, seed: int, max_index: int, density: float = 0.5):
    """Dyadic coefficients ``k / 2^j`` (``k <= 15``, ``j <= 6``) on a finite index range."""
    space = _space(space)
    rng = random.Random(seed)
    lo = -max_index if space is Space.H else 0
    vals = {}
    for i in range(lo, max_index + 1):
        if rng.random() < density:
            vals[i] = Dyadic(rng.randint(0, 15), rng.randint(0, 6))
    a_minf = ZERO
    if space is Space.H and rng.random() < 0.25:
        a_minf = Dyadic(rng.randint(0, 15), rng.randint(0, 6))
    return DiscreteFn.from_mapping(vals), a_minf


def random_pd_discrete(space, seed: int, max_index: int, allow_constant: bool = True) -> DiscreteFn:
    """``sum alpha_i chi_i`` with seeded dyadic ``alpha_i >= 0``; always of positive type."""
    if max_index < 0:
        raise DomainError("max_index must be >= 0")
    alphas, a_minf = random_alphas(space, seed, max_index)
    if not allow_constant:
        a_minf = ZERO
    return synthesize_pd(space, alphas, a_minf)


def random_discrete(space, seed: int, span: int = 10, tail: bool = True) -> DiscreteFn:
    """An arbitrary (not necessarily positive-type) dyadic function with finite support data."""
    space = _space(space)
    rng = random.Random(seed)
    lo = 0 if space is Space.H12 else rng.randint(-span // 2, 0)
    n = rng.randint(1, span)
    vals = [Dyadic(rng.randint(-16, 16), rng.randint(0, 4)) for _ in range(n)]
    t = Dyadic(rng.randint(-8, 8), rng.randint(0, 3)) if tail else ZERO
    return DiscreteFn(lo, tuple(vals), t)


def random_compact_function(seed: int, support: int = 6) -> GridFunction:
    """Seeded test function on ``[0, support]``: steps, hats or a windowed Bochner sum."""
    rng = random.Random(seed)
    kind = seed % 3
    if kind == 0:
        pieces = []
        for _ in range(rng.randint(1, 4)):
            a = rng.randint(0, 4 * support - 1) / 4.0
            b = min(support, a + rng.randint(1, 8) / 4.0)
            pieces.append((a, b, rng.uniform(-2.0, 2.0)))

        def rule(x):
            out = np.zeros(np.shape(x))
            for a, b, c in pieces:
                out = out + c * ((x >= a) & (x < b))
            return out

        bps = [v for a, b, _ in pieces for v in (a, b)]
        return GridFunction(rule, float(support), tuple(bps), float(support))
    if kind == 1:
        hats = []
        for _ in range(rng.randint(1, 3)):
            c = rng.uniform(0.5, support - 0.5)
            w = rng.uniform(0.25, 1.5)
            hats.append((c, w, rng.uniform(0.2, 3.0)))

        def rule(x):
            out = np.zeros(np.shape(x))
            for c, w, h in hats:
                out = out + h * np.maximum(0.0, 1 - np.abs(x - c) / w)
            return out

        bps = [v for c, w, _ in hats for v in (c - w, c, c + w)]
        return GridFunction(rule, float(support), tuple(bps), float(support))
    f = bochner_motion(random_spectral_atoms(seed), float(support))
    return f
