from __future__ import annotations

import math

import numpy as np
import pytest

from hyperamalgam import motion_amalgam as ma
from hyperamalgam.bessel_kingman import indicator_fourier
from hyperamalgam.errors import DomainError
from hyperamalgam.numerics import GridFunction
from hyperamalgam.params import INF, AmalgamParams
from hyperamalgam.pdgen import bochner_motion, random_compact_function, random_spectral_atoms


def test_interval_mass_examples():
    assert ma.interval_mass(1) == pytest.approx(1 / 3)
    assert ma.interval_mass(2) == pytest.approx(7 / 3)
    assert ma.interval_mass(3) == pytest.approx(19 / 3)
    with pytest.raises(DomainError):
        ma.interval_mass(0)
    assert np.allclose(ma.interval_masses(3), [1 / 3, 7 / 3, 19 / 3])


@pytest.mark.parametrize("p", [1.0, 2.0, 3.5, INF])
def test_discrete_norm_of_constant(p):
    f = GridFunction.constant(1.0, 4.0)
    assert ma.discrete_norm(f, AmalgamParams(p, INF), 4) == pytest.approx(1.0, rel=1e-10)


@pytest.mark.parametrize("p,q", [(1, 1), (2, 1), (1, 2), (3, 4), (2, INF)])
def test_unit_mass_subinterval(p, q):
    n = 3
    a, b = 2.0, (8.0 + 3.0) ** (1 / 3)
    f = GridFunction.indicator(a, b)
    want = ma.interval_mass(n) ** ((0 if q == INF else 1 / q) - 1 / p)
    assert ma.discrete_norm(f, AmalgamParams(p, q), 4) == pytest.approx(want, rel=1e-9)


def test_first_cell_l2():
    f = GridFunction.indicator(0.0, 1.0)
    assert ma.discrete_norm(f, AmalgamParams(2, 2), 1) == pytest.approx(math.sqrt(1 / 3), rel=1e-12)


def test_support_must_fit_window():
    with pytest.raises(DomainError):
        ma.discrete_norm(GridFunction.indicator(0.0, 5.0), AmalgamParams(1, 1), 3)


def test_continuous_norm_examples():
    f = GridFunction.constant(1.0, 6.0)
    for p in (1.0, 2.0, 4.0):
        assert ma.continuous_norm(f, p, ma.default_sample_set(4)) == pytest.approx((1 / 3) ** (1 / p), rel=1e-9)
    g = random_compact_function(4)
    xs = np.linspace(0.0, g.support_bound, 4001)
    assert ma.continuous_norm(g, INF, ()) == pytest.approx(np.max(np.abs(g(xs))), rel=1e-3)
    k = 12
    h = GridFunction.indicator(k - 1.0, float(k))
    assert ma.continuous_norm(h, 1.0, ma.default_sample_set(k)) >= 3 / 32
    assert ma.window_integral(h, 1.0, k - 0.5) >= 3 / 32


def test_sample_set_contains_critical_points():
    s = set(ma.default_sample_set(5))
    assert 0.0 in s
    assert all(n + 0.5 in s for n in range(6))


def test_equivalence_examples():
    for f in (GridFunction.constant(1.0, 4.0), GridFunction.indicator(4.0, 5.0),
              bochner_motion(random_spectral_atoms(7), 6.0)):
        for p in (1.0, 2.0, 3.0):
            assert ma.verify_equivalence(f, p).passed
    assert ma.lower_constant(1.0) == pytest.approx(32 / 3)
    assert ma.upper_constant(1.0) == pytest.approx(11.0)
    assert ma.upper_constant(2.0) == pytest.approx(max(1 + 3 ** 0.5 + 7 ** 0.5, 3 ** 1.5))


def test_monotone_in_local_exponent():
    for seed in range(6):
        f = random_compact_function(seed)
        for q in (1.0, 2.0, INF):
            vals = [ma.discrete_norm(f, AmalgamParams(p, q), 6) for p in (1.0, 2.0, 4.0, INF)]
            assert all(a <= b * (1 + 1e-9) + 1e-12 for a, b in zip(vals, vals[1:]))


def test_embedding_in_global_exponent():
    for seed in range(6):
        f = random_compact_function(seed)
        for q1, q2 in [(2.0, 1.0), (INF, 1.0), (INF, 2.0), (4.0, 2.0)]:
            c = 3 ** (1 / q2 - (0 if q1 == INF else 1 / q1))
            lhs = ma.discrete_norm(f, AmalgamParams(2, q1), 6)
            rhs = ma.discrete_norm(f, AmalgamParams(2, q2), 6)
            assert lhs <= c * rhs * (1 + 1e-12)


def test_translation_ratio():
    assert ma.translation_ratio(3, 0.0) == 1.0
    r = ma.translation_ratio(1, 10.0)
    assert r <= ma.TRANSLATION_BOUND
    # brute-force sups of the closed-form translate on a fine grid
    from hyperamalgam.bessel_kingman import interval_translate

    for n, y in [(1, 10.0), (4, 2.75), (7, 0.5)]:
        cells = int(math.ceil(n + y)) + 1
        total = 0.0
        for k in range(1, cells + 1):
            xs = np.linspace(k - 1 + 1e-7, k, 20001)
            total += ma.interval_mass(k) * np.max(interval_translate(n - 1.0, float(n), y, xs))
        assert ma.translation_ratio(n, y) == pytest.approx(total / ma.interval_mass(n), rel=1e-5)


def test_hy_witness():
    g2 = ma.hy_witness(2)
    assert g2(1.5) == pytest.approx(1.0, abs=1e-12)
    assert ma.hy_witness(5)(10.0) == 0.0
    xs = np.linspace(0.0, 8.0, 801)
    assert np.all(ma.hy_witness(5)(xs) >= -1e-15)
    assert np.allclose(ma.hy_witness(1)(np.linspace(0.0, 1.0, 51)), 1.0, atol=1e-12)


def test_young_examples():
    f = GridFunction.indicator(0.0, 1.0)
    r = ma.young_check(f, f, AmalgamParams(1, 1), AmalgamParams(1, 1))
    assert r.lhs == pytest.approx(r.rhs, rel=1e-8)
    assert r.rhs == pytest.approx(1 / 9, rel=1e-10)
    r = ma.young_check(f, f, AmalgamParams(2, 2), AmalgamParams(2, 2))
    assert r.target.p == INF and r.target.q == INF and math.isfinite(r.ratio)
    z = GridFunction.zero(1.0)
    r = ma.young_check(f, z, AmalgamParams(1, 1), AmalgamParams(1, 1))
    assert r.lhs == 0.0


def test_transforms_examples():
    r = ma.check_transforms_theorem(GridFunction.indicator(0.0, 1.0))
    assert r.all_finite and r.cond1 > 0
    r0 = ma.check_transforms_theorem(GridFunction.zero(1.0))
    assert (r0.cond1, r0.cond3, r0.cond2_truncated) == (0.0, 0.0, 0.0)
    hat = GridFunction(lambda x: np.maximum(0.0, 1 - np.abs(np.asarray(x) - 1.0)), 2.0, (0.0, 1.0, 2.0))
    assert ma.check_transforms_theorem(hat).all_finite


def test_transform_of_indicator_square():
    f = GridFunction.indicator(0.0, 1.0)
    g = ma.fourier_gridfunction(f, 8.0)
    lams = np.array([0.0, 0.5, 3.0, 7.9])
    assert np.allclose(g(lams), indicator_fourier(1.0, lams), atol=1e-12)


def test_hausdorff_young_ratio_stable():
    r = ma.hausdorff_young_ratio(ma.hy_witness(2), 16.0)
    assert math.isfinite(r.ratio)
    assert abs(r.ratio_doubled - r.ratio) <= 1e-3 * r.ratio


def test_wiener_ratio_at_least_one():
    for seed in range(4):
        f = bochner_motion(random_spectral_atoms(seed), 12.0)
        for p in (2.0, 4.0):
            assert ma.wiener_ratio(f, p) >= 1.0 - 1e-9
