"""Exact dyadic rationals ``num / 2**exp``.

All weights on the countable hypergroups (Haar masses ``2**-(n+1)``,
Plancherel masses ``2**(n-1)``, geometric tails) are dyadic, so with dyadic
function values every sum and product the verifiers need is exact.
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction

from .errors import DomainError

__all__ = ["Dyadic", "pow2", "to_dyadic", "is_exact"]


def _trailing_zeros(n: int) -> int:
    return (n & -n).bit_length() - 1


class Dyadic:
    """Canonical ``num / 2**exp`` with ``exp >= 0`` and ``num`` odd when ``exp > 0``.

    Arithmetic with ints and other dyadics stays exact; mixing with a float
    gives a float, mixing with a :class:`~fractions.Fraction` gives a Fraction.

    >>> Dyadic(3, 2) + Dyadic(1, 2)
    Dyadic(1, 0)
    >>> float(pow2(-3))
    0.125
    """

    __slots__ = ("num", "exp")

    def __init__(self, num: int = 0, exp: int = 0):
        num = int(num)
        exp = int(exp)
        if num == 0:
            exp = 0
        elif exp < 0:
            num <<= -exp
            exp = 0
        elif exp > 0:
            tz = min(_trailing_zeros(num), exp)
            num >>= tz
            exp -= tz
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    def __reduce__(self):
        return (Dyadic, (self.num, self.exp))

    # conversions

    @classmethod
    def from_fraction(cls, q) -> "Dyadic":
        q = Fraction(q)
        d = q.denominator
        if d & (d - 1):
            raise DomainError(f"{q} is not a dyadic rational")
        return cls(q.numerator, d.bit_length() - 1)

    @classmethod
    def from_json(cls, obj: dict) -> "Dyadic":
        return cls(int(obj["num"]), int(obj["exp"]))

    def to_json(self) -> dict:
        return {"num": self.num, "exp": self.exp}

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __float__(self) -> float:
        if self.exp < 1000:
            return self.num / (1 << self.exp)
        return float(self.to_fraction())

    def __int__(self) -> int:
        return int(self.to_fraction())

    def __repr__(self) -> str:
        return f"Dyadic({self.num}, {self.exp})"

    def __str__(self) -> str:
        return str(self.num) if self.exp == 0 else f"{self.num}/2^{self.exp}"

    # arithmetic

    def shift(self, k: int) -> "Dyadic":
        """Multiply by ``2**k``."""
        return Dyadic(self.num, self.exp - k)

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __pos__(self):
        return self

    def __abs__(self):
        return Dyadic(abs(self.num), self.exp)

    def __bool__(self):
        return self.num != 0

    def _binary(self, other, op):
        if isinstance(other, Dyadic):
            return op(self, other)
        if isinstance(other, bool):
            other = int(other)
        if isinstance(other, int):
            return op(self, Dyadic(other))
        if isinstance(other, Fraction):
            return NotImplemented
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, float):
            return float(self) + other
        if isinstance(other, Fraction):
            return self.to_fraction() + other

        def add(a, b):
            e = max(a.exp, b.exp)
            return Dyadic((a.num << (e - a.exp)) + (b.num << (e - b.exp)), e)

        return self._binary(other, add)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, float):
            return float(self) * other
        if isinstance(other, Fraction):
            return self.to_fraction() * other
        return self._binary(other, lambda a, b: Dyadic(a.num * b.num, a.exp + b.exp))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, float):
            return float(self) / other
        if isinstance(other, (int, Dyadic)) and not isinstance(other, bool):
            other = other if isinstance(other, Dyadic) else Dyadic(other)
            if other.num == 0:
                raise ZeroDivisionError("Dyadic division by zero")
            n = abs(other.num)
            if n & (n - 1) == 0:
                sign = -1 if other.num < 0 else 1
                return Dyadic(sign * self.num, self.exp + n.bit_length() - 1 - other.exp)
            return self.to_fraction() / other.to_fraction()
        return self.to_fraction() / Fraction(other)

    def __rtruediv__(self, other):
        if isinstance(other, float):
            return other / float(self)
        return Dyadic(other) / self if isinstance(other, int) else NotImplemented

    def __pow__(self, k):
        if isinstance(k, int) and k >= 0:
            return Dyadic(self.num ** k, self.exp * k)
        return float(self) ** k

    # comparison

    def _cmp_key(self, other):
        if isinstance(other, Dyadic):
            return self.to_fraction(), other.to_fraction()
        if isinstance(other, float):
            if math.isinf(other) or math.isnan(other):
                return float(self), other
            return self.to_fraction(), Fraction(other)
        if isinstance(other, numbers.Rational):
            return self.to_fraction(), Fraction(other)
        return None

    def __eq__(self, other):
        if isinstance(other, Dyadic):
            return self.num == other.num and self.exp == other.exp
        key = self._cmp_key(other)
        return NotImplemented if key is None else key[0] == key[1]

    def __lt__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else key[0] < key[1]

    def __le__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else key[0] <= key[1]

    def __gt__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else key[0] > key[1]

    def __ge__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else key[0] >= key[1]

    def __hash__(self):
        return hash(self.to_fraction())


ZERO = Dyadic(0)
ONE = Dyadic(1)


def pow2(k: int) -> Dyadic:
    """``2**k`` for any integer ``k``."""
    return Dyadic(1, -k)


def to_dyadic(x) -> Dyadic:
    """Exact conversion of ints, dyadic Fractions and dyadic floats."""
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, bool):
        return Dyadic(int(x))
    if isinstance(x, int):
        return Dyadic(x)
    if isinstance(x, float):
        if not math.isfinite(x):
            raise DomainError("non-finite float is not dyadic")
        return Dyadic.from_fraction(Fraction(x))
    return Dyadic.from_fraction(x)


def is_exact(x) -> bool:
    return isinstance(x, (Dyadic, int)) and not isinstance(x, bool)
