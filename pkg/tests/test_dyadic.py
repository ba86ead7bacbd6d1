from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperamalgam.dyadic import Dyadic, pow2, to_dyadic
from hyperamalgam.errors import DomainError

dyadics = st.builds(Dyadic, st.integers(-10 ** 6, 10 ** 6), st.integers(0, 40))


def test_canonical_form():
    assert Dyadic(6, 2) == Dyadic(3, 1)
    assert (Dyadic(6, 2).num, Dyadic(6, 2).exp) == (3, 1)
    assert Dyadic(0, 9).exp == 0
    assert pow2(-3).to_json() == {"num": 1, "exp": 3}
    assert pow2(4) == 16


@given(dyadics, dyadics)
def test_field_operations_match_fractions(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb
    assert (a < b) == (fa < fb)
    assert (a == b) == (fa == fb)


@given(dyadics)
def test_json_round_trip(a):
    assert Dyadic.from_json(a.to_json()) == a
    assert hash(a) == hash(a.to_fraction())


def test_mixed_arithmetic():
    half = Dyadic(1, 1)
    assert half + 1 == Dyadic(3, 1)
    assert isinstance(half + 0.25, float)
    assert isinstance(half + Fraction(1, 3), Fraction)
    assert half / 4 == Dyadic(1, 3)
    assert half / 3 == Fraction(1, 6)
    assert half ** 3 == Dyadic(1, 3)
    assert sum([half, half, half]) == Dyadic(3, 1)


def test_conversions():
    assert to_dyadic(0.375) == Dyadic(3, 3)
    assert to_dyadic(Fraction(5, 16)) == Dyadic(5, 4)
    with pytest.raises(DomainError):
        to_dyadic(Fraction(1, 3))
    assert float(Dyadic(1, 2000)) > 0 or float(Dyadic(1, 2000)) == 0.0


def test_pickle_round_trip():
    import pickle

    d = Dyadic(-5, 7)
    assert pickle.loads(pickle.dumps(d)) == d
