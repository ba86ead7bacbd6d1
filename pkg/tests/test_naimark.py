from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import integrate as spi

from hyperamalgam import naimark as nm
from hyperamalgam.errors import DomainError


def test_haar_weight():
    assert nm.naimark_haar_weight(0.0) == 0.0
    assert nm.naimark_haar_weight(1.0) == pytest.approx(((math.e - 1 / math.e) / 2) ** 2, rel=1e-15)
    assert nm.naimark_haar_weight(2.0) == pytest.approx(math.sinh(2.0) ** 2, rel=1e-15)
    assert nm.naimark_haar_weight(1.0) == pytest.approx(1.3811, abs=1e-4)


def test_character_identities():
    assert nm.naimark_character(-16.0, 0.0) == 1.0
    assert nm.naimark_character(-16.0, 1e-8) == pytest.approx(1.0, abs=1e-12)
    xs = np.linspace(0.01, 30.0, 300)
    assert np.allclose(nm.naimark_character(-4.0, xs), np.cosh(xs), rtol=1e-12)
    with pytest.raises(DomainError):
        nm.naimark_character(-1.0, 1.0)


def test_character_growth_rate():
    r = 4.0
    xs = np.array([20.0, 40.0, 80.0, 160.0])
    ratios = np.exp(nm.log_naimark_character(-r * r, xs) - (r - 1) * xs)
    assert np.allclose(ratios, 1 / r, rtol=1e-8)
    # no overflow where sinh itself would overflow
    assert math.isfinite(nm.log_naimark_character(-16.0, 1000.0))


def test_local_mass():
    want = spi.quad(lambda t: math.sinh(t) ** 2, 0.0, 1.0, epsabs=1e-15)[0]
    assert nm.LOCAL_MASS == pytest.approx(want, rel=1e-13)


def test_window_mass():
    for x in (1.0, 2.5, 7.0):
        want = spi.quad(lambda t: math.sinh(t) ** 2, x - 1, x + 1, epsrel=1e-13)[0]
        assert nm.window_mass(x) == pytest.approx(want, rel=1e-12)
        assert nm.log_window_mass(x) == pytest.approx(math.log(want), rel=1e-12)
    assert nm.log_window_mass(500.0) == pytest.approx(1000 + math.log(math.sinh(2.0) / 4), rel=1e-14)
    with pytest.raises(DomainError):
        nm.window_mass(0.5)


def test_divergence_at_a_minus_16():
    vals = [nm.counterexample_lower_bound(-16.0, 2.0, x) for x in (5.0, 10.0, 15.0, 20.0)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[-1] / vals[0] >= 1e3
    # net growth is about e^{(r-3) x} with r = 4
    assert vals[-1] / vals[0] == pytest.approx(math.exp(15.0), rel=1e-3)


@pytest.mark.parametrize("a", [-9.5, -12.5, -16.0, -100.0])
@pytest.mark.parametrize("p", [1.0, 2.0, 4.0])
def test_monotone_divergence(a, p):
    logs = [nm.log_counterexample_lower_bound(a, p, float(x)) for x in range(5, 21)]
    assert all(b > c for b, c in zip(logs[1:], logs))
    # net rate is r - 3, so a 10^3 gain over 15 units needs r >= 3 + log(1000)/15
    r = math.sqrt(-a)
    assert logs[-1] - logs[0] == pytest.approx(15 * (r - 3), rel=1e-3)
    if r >= 3 + math.log(1e3) / 15:
        assert logs[-1] - logs[0] >= math.log(1e3)


def test_bound_needs_a_below_minus_nine():
    with pytest.raises(DomainError):
        nm.counterexample_lower_bound(-5.0, 2.0, 5.0)


def test_character_is_increasing():
    assert nm.character_is_increasing(-16.0)
    assert nm.character_is_increasing(-1.5)
    # left endpoint is the minimum over J_x
    xs = np.linspace(9.0, 11.0, 101)
    vals = nm.log_naimark_character(-16.0, xs)
    assert np.argmin(vals) == 0
