"""The countable hypergroups H_{1/2} and H in exact dyadic arithmetic.

Points are Python ints plus ``math.inf`` for the identity. ``H12`` is the
compact hypergroup on ``{0, 1, 2, ...} U {inf}``; ``H`` is its non-compact
extension to all of ``Z U {inf}``. Dual indices are ints plus ``-math.inf``
for the trivial character of ``H``.

Functions are :class:`DiscreteFn` objects: finitely many explicit values plus
a constant ``head`` (below the explicit range) and ``tail`` (above it, and at
the identity). Every infinite sum that appears is geometric in that
representation, so integrals, transforms and positivity tests are evaluated
exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable

from .dyadic import ONE, ZERO, Dyadic, pow2
from .errors import DivergenceError, DomainError, PositivityViolation
from .params import AmalgamParams, conjugate

INF = math.inf
NEG_INF = -math.inf


class Space(str, Enum):
    H12 = "H12"
    H = "H"


def _space(space) -> Space:
    return space if isinstance(space, Space) else Space(space)


def _norm_value(v):
    if isinstance(v, Dyadic):
        return v
    if isinstance(v, bool):
        return Dyadic(int(v))
    if isinstance(v, int):
        return Dyadic(v)
    if isinstance(v, Fraction):
        try:
            return Dyadic.from_fraction(v)
        except DomainError:
            return float(v)
    return float(v)


def _abs(v):
    return abs(v)


def _is_zero(v) -> bool:
    return v == 0


@dataclass(frozen=True)
class DiscreteFn:
    """``f(n) = vals[n - low]`` on ``[low, high]``, ``head`` below, ``tail`` above.

    ``f(inf)`` is the tail value (the continuous representative; the identity
    has Haar mass 0). Stored in canonical form: leading values equal to the
    head and trailing values equal to the tail are absorbed.
    """

    low: int
    vals: tuple
    tail: object = ZERO
    head: object = ZERO

    def __post_init__(self):
        vals = [_norm_value(v) for v in self.vals]
        tail = _norm_value(self.tail)
        head = _norm_value(self.head)
        low = int(self.low)
        if not vals:
            vals = [tail]
        while len(vals) > 1 and vals[-1] == tail:
            vals.pop()
        while len(vals) > 1 and vals[0] == head:
            vals.pop(0)
            low += 1
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "vals", tuple(vals))
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "head", head)

    @property
    def high(self) -> int:
        return self.low + len(self.vals) - 1

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Dyadic) for v in (*self.vals, self.tail, self.head))

    def __call__(self, m):
        if m == INF:
            return self.tail
        if m == NEG_INF or m < self.low:
            return self.head
        if m > self.high:
            return self.tail
        return self.vals[m - self.low]

    # constructors

    @classmethod
    def tabulate(cls, fn: Callable[[int], object], lo: int, hi: int,
                 tail=ZERO, head=ZERO) -> "DiscreteFn":
        if hi < lo:
            return cls(lo, (), tail, head)
        return cls(lo, tuple(fn(m) for m in range(lo, hi + 1)), tail, head)

    @classmethod
    def from_mapping(cls, values: dict, tail=ZERO, head=ZERO) -> "DiscreteFn":
        if not values:
            return cls(0, (), tail, head)
        lo, hi = min(values), max(values)
        return cls.tabulate(lambda m: values.get(m, ZERO), lo, hi, tail, head)

    @classmethod
    def point_mass(cls, n: int, value=ONE) -> "DiscreteFn":
        return cls(n, (value,))

    @classmethod
    def constant(cls, c) -> "DiscreteFn":
        return cls(0, (c,), c, c)

    @classmethod
    def zero(cls) -> "DiscreteFn":
        return cls(0, (ZERO,))

    @classmethod
    def indicator_from(cls, n: int) -> "DiscreteFn":
        """Indicator of ``U_n = {n, n+1, ..., inf}``."""
        return cls(n, (ONE,), ONE, ZERO)

    # pointwise algebra

    def map(self, fn) -> "DiscreteFn":
        return DiscreteFn(self.low, tuple(fn(v) for v in self.vals), fn(self.tail), fn(self.head))

    def combine(self, other: "DiscreteFn", fn) -> "DiscreteFn":
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        return DiscreteFn.tabulate(lambda m: fn(self(m), other(m)), lo, hi,
                                   fn(self.tail, other.tail), fn(self.head, other.head))

    def __add__(self, other):
        return self.combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self.combine(other, lambda a, b: a - b)

    def __mul__(self, other):
        if isinstance(other, DiscreteFn):
            return self.combine(other, lambda a, b: a * b)
        return self.map(lambda v: v * other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.map(lambda v: -v)

    def zeroed_below(self, n: int) -> "DiscreteFn":
        """``f * 1_{U_n}``."""
        return self * DiscreteFn.indicator_from(n)

    def zeroed_from(self, n: int) -> "DiscreteFn":
        """``f`` restricted to ``{m < n}`` (zero at and above ``n``, and at ``inf``)."""
        hi = max(n - 1, self.low)
        return DiscreteFn.tabulate(lambda m: self(m) if m < n else ZERO,
                                   min(self.low, n - 1), hi, ZERO, self.head)

    def values_between(self, start: int, stop: int) -> list:
        return [self(m) for m in range(start, stop)]

    def to_json(self) -> dict:
        return {"low": self.low, "vals": list(self.vals), "tail": self.tail, "head": self.head}


# ----------------------------------------------------------------------------
# measures


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finite combination of point masses and geometric spreads.

    A spread ``(n, w)`` is ``w * sum_{k>=1} 2**-k eps_{n+k}``, i.e. ``w`` times
    the measure ``eps_n * eps_n``.
    """

    atoms: tuple = ()
    spreads: tuple = ()

    def __post_init__(self):
        atoms: dict = {}
        for x, w in self.atoms:
            w = _norm_value(w)
            if w < 0:
                raise DomainError("measure weights must be nonnegative")
            atoms[x] = atoms.get(x, ZERO) + w
        spreads: dict = {}
        for n, w in self.spreads:
            w = _norm_value(w)
            if w < 0:
                raise DomainError("measure weights must be nonnegative")
            if n == INF:
                atoms[INF] = atoms.get(INF, ZERO) + w
            else:
                spreads[int(n)] = spreads.get(int(n), ZERO) + w
        object.__setattr__(self, "atoms", tuple(sorted((k, v) for k, v in atoms.items() if v != 0)))
        object.__setattr__(self, "spreads", tuple(sorted((k, v) for k, v in spreads.items() if v != 0)))

    @classmethod
    def point(cls, x) -> "DiscreteMeasure":
        return cls(((x, ONE),))

    @property
    def mass(self):
        return sum((w for _, w in self.atoms), ZERO) + sum((w for _, w in self.spreads), ZERO)

    @property
    def is_probability(self) -> bool:
        return self.mass == 1

    def integrate(self, f: DiscreteFn):
        total = ZERO
        for x, w in self.atoms:
            total = total + w * f(x)
        for n, w in self.spreads:
            total = total + w * spread_mean(f, n)
        return total


def spread_mean(f: DiscreteFn, n: int):
    """``sum_{k>=1} 2**-k f(n+k)``, i.e. ``f`` integrated against ``eps_n * eps_n``."""
    total = ZERO
    k = 1
    # head segment n+k < low
    if n + 1 < f.low:
        count = f.low - n - 1
        total = total + f.head * (ONE - pow2(-count))
        k = f.low - n
    while n + k <= f.high:
        total = total + pow2(-k) * f(n + k)
        k += 1
    return total + f.tail * pow2(1 - k)


# ----------------------------------------------------------------------------
# structure: Haar, convolution, characters, Plancherel


def _check_point(space: Space, n) -> None:
    if n == INF:
        return
    if n != int(n):
        raise DomainError(f"{n!r} is not a point")
    if space is Space.H12 and n < 0:
        raise DomainError(f"point {n} is not in H_1/2")


def haar(space, n) -> Dyadic:
    """Haar mass ``2**-(n+1)`` of a finite point, ``0`` at the identity."""
    space = _space(space)
    _check_point(space, n)
    if n == INF:
        return ZERO
    return pow2(-(int(n) + 1))


def convolve_points(space, m, n) -> DiscreteMeasure:
    """``eps_m * eps_n``."""
    space = _space(space)
    _check_point(space, m)
    _check_point(space, n)
    if m != n:
        return DiscreteMeasure.point(min(m, n))
    if m == INF:
        return DiscreteMeasure.point(INF)
    return DiscreteMeasure(spreads=((int(n), ONE),))


def character(space, n, m) -> int:
    """``chi_n(m)``: 0 for ``m <= n-2``, -1 at ``m = n-1``, 1 for ``m >= n``."""
    space = _space(space)
    _check_point(space, m)
    if n == NEG_INF:
        if space is Space.H12:
            raise DomainError("chi_{-inf} only exists on H")
        return 1
    if space is Space.H12 and n < 0:
        raise DomainError(f"no character chi_{n} on H_1/2")
    if m == INF or m >= n:
        return 1
    return -1 if m == n - 1 else 0


def character_fn(space, n) -> DiscreteFn:
    space = _space(space)
    if n == NEG_INF:
        character(space, n, 0)
        return DiscreteFn.constant(ONE)
    character(space, n, INF)
    lo = n - 1 if space is Space.H else max(0, n - 1)
    return DiscreteFn.tabulate(lambda m: character(space, n, m), lo, n, ONE, ZERO)


def plancherel(space, n) -> Dyadic:
    """Plancherel mass of ``chi_n``."""
    space = _space(space)
    if n == NEG_INF:
        if space is Space.H12:
            raise DomainError("chi_{-inf} only exists on H")
        return ZERO
    n = int(n)
    if space is Space.H12:
        if n < 0:
            raise DomainError(f"no character chi_{n} on H_1/2")
        return ONE if n == 0 else pow2(n - 1)
    return pow2(n - 1)


def translate(space, n, f: DiscreteFn) -> DiscreteFn:
    """``(tau_n f)(m) = int f d(eps_n * eps_m)``."""
    space = _space(space)
    _check_point(space, n)
    if n == INF:
        return f
    n = int(n)
    lo = min(f.low, n)
    if space is Space.H12:
        lo = max(lo, 0)
    sm = spread_mean(f, n)
    return DiscreteFn.tabulate(lambda m: f(m) if m < n else sm, lo, n, f(n), f.head)


def _spread_translate(g: DiscreteFn, n: int) -> DiscreteFn:
    """``sum_k 2**-k tau_{n+k} g``, the translate of ``g`` by ``eps_n * eps_n``."""
    limit = spread_mean(g, n)

    def value(m):
        if m <= n:
            return g(m)
        d = m - n
        total = ZERO
        for k in range(1, d):
            total = total + pow2(-k) * g(n + k)
        return total + pow2(-d) * (spread_mean(g, m) + g(m))

    lo = min(g.low, n)
    hi = max(g.high, n) + 2
    out = DiscreteFn.tabulate(value, lo, hi, limit, g.head)
    assert value(hi + 1) == limit
    return out


def convolve_measure_fn(space, mu: DiscreteMeasure, g: DiscreteFn) -> DiscreteFn:
    """``mu * g``, i.e. ``m -> int tau_x g(m) dmu(x)``."""
    space = _space(space)
    out = DiscreteFn.zero()
    for x, w in mu.atoms:
        out = out + translate(space, x, g) * w
    for n, w in mu.spreads:
        _check_point(space, n)
        out = out + _spread_translate(g, n) * w
    return out


# ----------------------------------------------------------------------------
# sums against Haar and Plancherel measure


def _haar_segment(a, b) -> Dyadic:
    """``sum_{a <= n < b} 2**-(n+1)`` for ``a`` finite, ``b`` finite or inf."""
    if b <= a:
        return ZERO
    if b == INF:
        return pow2(-int(a))
    return pow2(-int(a)) - pow2(-int(b))


def _start(space: Space, start):
    if space is Space.H12:
        return 0 if start is None else max(0, int(start))
    return NEG_INF if start is None else start


def haar_sum(space, f: DiscreteFn, start=None, stop=INF):
    """``sum_{start <= n < stop} f(n) omega(n)`` (exact for dyadic values)."""
    space = _space(space)
    a = _start(space, start)
    total = ZERO
    # head region [a, low)
    hb = min(f.low, stop)
    if a < hb and f.head != 0:
        if a == NEG_INF:
            raise DivergenceError("nonzero constant below 0 is not Haar integrable on H")
        total = total + f.head * _haar_segment(a, hb)
    for m in range(max(f.low, a) if a != NEG_INF else f.low, min(f.high + 1, stop)):
        total = total + f(m) * pow2(-(m + 1))
    ta = f.high + 1 if a == NEG_INF else max(f.high + 1, a)
    if ta < stop and f.tail != 0:
        total = total + f.tail * _haar_segment(ta, stop)
    return total


def _planch_segment(a, b) -> Dyadic:
    """``sum_{a <= n < b} 2**(n-1)`` for ``a`` finite or ``-inf`` and ``b`` finite."""
    if b <= a:
        return ZERO
    if a == NEG_INF:
        return pow2(int(b) - 1)
    return pow2(int(b) - 1) - pow2(int(a) - 1)


def plancherel_sum(space, F: DiscreteFn, start=None, stop=INF):
    """``sum_{start <= n < stop} F(n) pi(n)`` over the dual (``chi_{-inf}`` has mass 0)."""
    space = _space(space)
    a = _start(space, start)
    total = ZERO
    if space is Space.H12 and a <= 0 < stop:
        total = total + F(0)
        a = 1
    hb = min(F.low, stop)
    if a < hb and F.head != 0:
        total = total + F.head * _planch_segment(a, hb)
    lo = F.low if a == NEG_INF else max(F.low, a)
    for n in range(lo, min(F.high + 1, stop)):
        total = total + F(n) * pow2(n - 1)
    ta = F.high + 1 if a == NEG_INF else max(F.high + 1, a)
    if ta < stop and F.tail != 0:
        raise DivergenceError("nonzero tail is not Plancherel integrable")
    return total


def _tail_sums(space: Space, f: DiscreteFn, down_to: int) -> dict:
    """``T(n) = sum_{m >= n} f(m) omega(m)`` for ``down_to <= n <= high+1``."""
    top = f.high + 1
    T = {top: f.tail * pow2(-top) if f.tail != 0 else ZERO}
    for n in range(top - 1, down_to - 1, -1):
        T[n] = T[n + 1] + f(n) * pow2(-(n + 1))
    return T


def fourier(space, f: DiscreteFn) -> DiscreteFn:
    """``f^(chi_n) = sum_m f(m) chi_n(m) omega(m)``, as a function on the dual.

    On ``H`` the returned ``head`` is the (constant) transform at every
    ``n < low`` and at ``chi_{-inf}``.
    """
    space = _space(space)
    if space is Space.H:
        if f.head != 0:
            raise DivergenceError("f is not integrable on H (nonzero head)")
        base = f.low
    else:
        base = 0
    T = _tail_sums(space, f, base)

    def at(n):
        if space is Space.H12 and n == 0:
            return T[0]
        prev = f(n - 1) * pow2(-n) if (space is Space.H or n - 1 >= 0) else ZERO
        return T[n] - prev

    head = T[base] if space is Space.H else ZERO
    return DiscreteFn.tabulate(at, base, f.high + 1, ZERO, head)


def parseval_residual(space, f: DiscreteFn):
    """``|int f^2 domega - int (f^)^2 dpi|``; zero for every exact ``f``."""
    space = _space(space)
    lhs = haar_sum(space, f * f)
    F = fourier(space, f)
    rhs = plancherel_sum(space, F * F)
    return abs(lhs - rhs)


# ----------------------------------------------------------------------------
# positivity


def _le(a, b, tol: float) -> bool:
    if tol == 0:
        return a <= b
    a, b = float(a), float(b)
    return a <= b + tol * max(abs(a), abs(b), 1e-300)


def tails_hold(space, f: DiscreteFn, start=None, tol: float = 0.0) -> bool:
    """``|r(n)| <= sum_{k>n} r(k)`` for all ``n >= start``, with ``r = f omega``.

    ``start=None`` means the whole space. With ``start=N`` this is the
    positivity test on the subhypergroup ``U_N``.
    """
    space = _space(space)
    if not _le(0, f.tail, tol):
        return False
    if space is Space.H12:
        s = 0 if start is None else max(0, int(start))
    elif start is None:
        s = f.low
    else:
        s = int(start)
    s = min(s, f.high + 1)
    T = _tail_sums(space, f, s)
    for n in range(s, f.high + 1):
        r = f(n) * pow2(-(n + 1))
        if not _le(abs(r), T[n + 1], tol):
            return False
    if space is Space.H and start is None:
        # n < low: |h| 2^-(n+1) <= h (2^-(n+1) - 2^-low) + T(low) for every n
        h = f.head
        if not _le(0, h, tol):
            return False
        if not _le(h * pow2(-f.low), T[f.low], tol):
            return False
    return True


def is_positive_type(space, f: DiscreteFn, tol: float = 0.0) -> bool:
    """Exact positive-type test via the tails criterion on ``r(n) = f(n) omega(n)``."""
    return tails_hold(space, f, None, tol)


def spectral_positive(space, f: DiscreteFn, tol: float = 0.0) -> bool:
    """``f^ >= 0`` at every dual point of positive Plancherel mass."""
    F = fourier(space, f)
    return all(_le(0, v, tol) for v in (*F.vals, F.head, F.tail))


def synthesize_pd(space, alphas: DiscreteFn, alpha_minus_inf=ZERO) -> DiscreteFn:
    """``f = alpha_{-inf} + sum_i alpha_i chi_i`` for finitely many ``alpha_i >= 0``.

    ``alphas`` is indexed by the dual (``head`` and ``tail`` must be 0);
    ``alpha_minus_inf`` is the coefficient of the trivial character of ``H``.
    """
    space = _space(space)
    coeffs = (*alphas.vals, alphas.head, alphas.tail, _norm_value(alpha_minus_inf))
    if any(c < 0 for c in coeffs):
        raise DomainError("coefficients must be nonnegative")
    if alphas.head != 0 or alphas.tail != 0:
        raise DomainError("only finitely many coefficients may be nonzero")
    A = _norm_value(alpha_minus_inf)
    if space is Space.H12:
        if A != 0:
            raise DomainError("H_1/2 has no character chi_{-inf}")
        if alphas.low < 0 and any(alphas(i) != 0 for i in range(alphas.low, 0)):
            raise DomainError("negative dual index on H_1/2")
    total = sum(alphas.vals, ZERO)
    lo = alphas.low - 1
    if space is Space.H12:
        lo = max(lo, 0)

    def value(m):
        s = sum((alphas(i) for i in range(alphas.low, m + 1)), ZERO)
        return A + s - alphas(m + 1)

    return DiscreteFn.tabulate(value, lo, alphas.high, A + total, A)


def _abs_pow(v, p):
    if p == INF:
        raise DomainError("pointwise power needs a finite exponent")
    if float(p).is_integer() and isinstance(v, Dyadic):
        return abs(v) ** int(p)
    return float(abs(v)) ** float(p)


def pointwise_power(f: DiscreteFn, p) -> DiscreteFn:
    """``|f|**p``; exact for integer ``p`` and dyadic values, float otherwise."""
    if not p >= 1:
        raise DomainError("need p >= 1")
    return f.map(lambda v: _abs_pow(v, p))


def extend_by_zero(f: DiscreteFn, N: int) -> DiscreteFn:
    """Extend ``f|U_N`` to ``H`` by zero, after checking positivity on ``U_N``."""
    if not tails_hold(Space.H, f, start=N):
        raise PositivityViolation(f"function is not of positive type on U_{N}")
    return f.zeroed_below(N)


# ----------------------------------------------------------------------------
# norms


def _sup_abs(f: DiscreteFn, start, stop):
    """``sup |f(n)|`` over ``start <= n < stop`` (``inf`` counted through the tail)."""
    cands = []
    if start < f.low and start < stop:
        cands.append(abs(f.head))
    lo = f.low if start == NEG_INF else max(f.low, start)
    cands += [abs(f(m)) for m in range(lo, min(f.high + 1, stop))]
    if stop == INF or f.high + 1 < stop:
        cands.append(abs(f.tail))
    return max(cands) if cands else ZERO


def lp_power(space, f: DiscreteFn, p, start=None, stop=INF):
    """``sum |f|^p omega`` over a range (exact for integer ``p``)."""
    return haar_sum(space, pointwise_power(f, p), start, stop)


def lp_norm(space, f: DiscreteFn, p, start=None, stop=INF) -> float:
    space = _space(space)
    if p == INF:
        a = _start(space, start)
        return float(_sup_abs(f, a, stop))
    return float(lp_power(space, f, p, start, stop)) ** (1.0 / p)


def star_norm_parts(f: DiscreteFn, p, q):
    """The two ingredients of the star amalgam norm on ``H``.

    Returns ``(below, local)`` where ``below`` is ``sum_{n<0} omega |f|^q``
    (``sup_{n<0} |f|`` if ``q`` is infinite) and ``local`` is
    ``sum_{n>=0} omega |f|^p`` (``sup_{n>=0} |f|`` if ``p`` is infinite).
    Both are exact for integer exponents and dyadic values.
    """
    if q == INF:
        below = _sup_abs(f, NEG_INF, 0)
    else:
        below = haar_sum(Space.H, pointwise_power(f.zeroed_from(0), q))
    if p == INF:
        local = _sup_abs(f, 0, INF)
    else:
        local = lp_power(Space.H, f, p, 0)
    return below, local


def _combine_star(below, local, p, q) -> float:
    local_norm = float(local) if p == INF else float(local) ** (1.0 / p)
    if q == INF:
        return max(float(below), local_norm)
    return (float(below) + local_norm ** q) ** (1.0 / q)


def star_norm(f: DiscreteFn, params: AmalgamParams) -> float:
    """``||f||*_{p,q}`` on ``H`` with identity neighbourhood ``U_0``.

    Raises :class:`DivergenceError` when ``q < inf`` and ``f`` does not vanish
    eventually below 0.
    """
    below, local = star_norm_parts(f, params.p, params.q)
    return _combine_star(below, local, params.p, params.q)


def dual_star_parts(F: DiscreteFn, P, Q):
    """Dual counterpart of :func:`star_norm_parts`: compact part ``{n <= 0}``
    measured in ``L^P(pi)``, the rest in ``l^Q(pi)``."""
    if Q == INF:
        outside = _sup_abs(F, 1, INF)
    else:
        outside = plancherel_sum(Space.H, pointwise_power(F, Q), 1)
    if P == INF:
        local = _sup_abs(F, NEG_INF, 1)
    else:
        local = plancherel_sum(Space.H, pointwise_power(F, P), None, 1)
    return outside, local


def dual_star_norm(F: DiscreteFn, params: AmalgamParams) -> float:
    outside, local = dual_star_parts(F, params.p, params.q)
    return _combine_star(outside, local, params.p, params.q)


# ----------------------------------------------------------------------------
# verifiers


@dataclass(frozen=True)
class CheckReport:
    lhs: object
    rhs: object
    constant: object
    passed: bool | None
    detail: str = ""


def wiener_inequality_check(space, f: DiscreteFn, mu: DiscreteMeasure, N: int, p,
                            check_positivity: bool = True) -> CheckReport:
    """``int |f|^p (mu * 1_{U_N}) domega <= int |f|^p 1_{U_N} domega`` (constant 1)."""
    space = _space(space)
    if check_positivity and not is_positive_type(space, f):
        raise PositivityViolation("f is not of positive type")
    if not mu.is_probability:
        raise DomainError("mu must be a probability measure")
    if space is Space.H12 and N < 0:
        raise DomainError("U_N with N < 0 is not in H_1/2")
    window = convolve_measure_fn(space, mu, DiscreteFn.indicator_from(N))
    fp = pointwise_power(f, p)
    lhs = haar_sum(space, fp * window)
    rhs = haar_sum(space, fp, start=N)
    tol = 0.0 if isinstance(lhs, Dyadic) and isinstance(rhs, Dyadic) else 1e-12
    return CheckReport(lhs, rhs, ONE, _le(lhs, rhs, tol))


HY_ENDPOINTS = ((1, 1), (2, 2), (2, 1), (1, 2))


def hausdorff_young_check(f: DiscreteFn, p, q, slack: float = 1e-12) -> CheckReport:
    """``||f^||*_{q',p'} <= ||f||*_{p,q}`` on ``H``.

    Asserted at the four endpoint pairs; other pairs in ``[1, 2]^2`` are
    computed and reported with ``passed=None``.
    """
    if not (1 <= p <= 2 and 1 <= q <= 2):
        raise DomainError("Hausdorff-Young needs 1 <= p, q <= 2")
    F = fourier(Space.H, f)
    lhs = dual_star_norm(F, AmalgamParams(conjugate(q), conjugate(p)))
    rhs = star_norm(f, AmalgamParams(p, q))
    asserted = (p, q) in HY_ENDPOINTS
    ok = lhs <= rhs * (1 + slack) + 1e-300
    return CheckReport(lhs, rhs, ONE, ok if asserted else None,
                       "" if asserted else "intermediate exponent: reported only")


def character_square_series(n: int, m) -> Dyadic:
    """``sum_{k>=1} 2**-k chi_{n-k}(m)`` on ``H`` in closed form."""
    if m == INF:
        return ONE
    d = n - m
    total = ZERO
    if d - 1 >= 1:
        total = total - pow2(-(d - 1))
    return total + pow2(1 - max(1, d))


def character_product(space, m, n) -> DiscreteFn:
    """``chi_m chi_n`` as predicted by the product table (H only)."""
    space = _space(space)
    if m != n:
        return character_fn(space, max(m, n))
    if m == NEG_INF:
        return DiscreteFn.constant(ONE)
    lo = n - 2
    return DiscreteFn.tabulate(lambda x: character_square_series(n, x), lo, n, ONE, ZERO)


def total_mass(space) -> Dyadic:
    """Haar mass of ``H_1/2`` (equivalently of ``U_0`` in ``H``)."""
    return haar_sum(space, DiscreteFn.indicator_from(0))
