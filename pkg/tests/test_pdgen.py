from __future__ import annotations

import math

import numpy as np
import pytest

from hyperamalgam import dyadic_hyper as dh
from hyperamalgam import pdgen
from hyperamalgam.bessel_kingman import (
    SpectralAtoms,
    character_product_residual,
    indicator_fourier,
    motion_fourier,
    motion_fourier_grid,
)
from hyperamalgam.numerics import GridFunction


def test_single_atom_is_character():
    f = pdgen.bochner_motion(SpectralAtoms(((2.5, 1.0),)))
    xs = np.linspace(0.0, 20.0, 201)
    assert np.allclose(f(xs), np.sinc(2.5 * xs / np.pi), atol=1e-15)


def test_empty_atoms():
    f = pdgen.bochner_motion(SpectralAtoms(()))
    assert np.all(f(np.linspace(0.0, 5.0, 11)) == 0)


def test_bochner_peaks_at_identity():
    xs = np.linspace(0.0, 64.0, 20001)
    for seed in range(20):
        f = pdgen.bochner_motion(pdgen.random_spectral_atoms(seed))
        vals = f(xs)
        assert np.max(np.abs(vals)) <= vals[0] * (1 + 1e-12)
        assert vals[0] == pytest.approx(pdgen.random_spectral_atoms(seed).total)


def test_products_of_characters_are_positive_definite():
    # j(lx) j(mx) = int j(nx) K(l, m, n) n^2 dn with K >= 0
    for l, m in [(1.0, 2.5), (3.0, 3.0), (0.5, 7.0)]:
        for x in (0.3, 1.7, 4.0):
            assert character_product_residual(0.5, x, l, m) <= 1e-9


def test_random_atoms_on_grid():
    a = pdgen.random_spectral_atoms(5)
    for lam, w in a.atoms:
        assert 0 <= lam <= 20 and (lam * 16).is_integer() and 0 < w <= 1


def test_convolution_square():
    g = GridFunction.indicator(0.0, 1.0)
    f = pdgen.convolution_square(g)
    for lam in (0.0, 1.0, 4.5):
        assert motion_fourier(f, lam) == pytest.approx(indicator_fourier(1.0, lam) ** 2, abs=1e-10)
    # f(0) = ||g||_2^2
    assert f(0.0) == pytest.approx(1 / 3, rel=1e-12)
    z = pdgen.convolution_square(GridFunction.zero(1.0))
    assert np.all(z(np.linspace(0.0, 2.0, 9)) == 0)


def test_unbounded_positive_type():
    f1 = pdgen.unbounded_positive_type(1)
    assert f1(0.0) == pytest.approx(1.0, rel=1e-12)
    for n in (3, 8):
        f = pdgen.unbounded_positive_type(n)
        assert f(0.0) == pytest.approx(sum(1 / k for k in range(1, n + 1)), rel=1e-12)
        # L^1 norm: each term contributes lambda_k omega(U_k)^2 = omega(U_k)/k <= 1/k^2
        l1 = motion_fourier(f, 0.0)
        assert l1 == pytest.approx(sum(2.0 ** (-3 * k) / 3 / k for k in range(1, n + 1)), rel=1e-8)
        assert l1 <= sum(1 / k ** 2 for k in range(1, n + 1)) <= math.pi ** 2 / 6
    f = pdgen.unbounded_positive_type(4)
    lams = np.linspace(0.0, 60.0, 121)
    assert np.min(motion_fourier_grid(f, lams)) >= -1e-6


def test_discrete_generators_deterministic_and_positive():
    for space in (dh.Space.H12, dh.Space.H):
        for seed in range(40):
            f = pdgen.random_pd_discrete(space, seed, 6)
            assert f == pdgen.random_pd_discrete(space, seed, 6)
            assert dh.is_positive_type(space, f)
        assert pdgen.random_discrete(space, 3) == pdgen.random_discrete(space, 3)


def test_all_zero_draw():
    zero = dh.synthesize_pd(dh.Space.H12, dh.DiscreteFn.zero())
    assert zero == dh.DiscreteFn.zero()


def test_compact_functions_deterministic():
    xs = np.linspace(0.0, 6.0, 97)
    for seed in range(6):
        f, g = pdgen.random_compact_function(seed), pdgen.random_compact_function(seed)
        assert np.array_equal(f(xs), g(xs))
        assert f.support_bound == 6.0
