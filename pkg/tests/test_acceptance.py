"""The twelve acceptance criteria, each at its stated tolerance and time limit."""
from __future__ import annotations

import math
import time

import numpy as np
import pytest
from scipy import integrate as spi

from conftest import ACCEPTANCE
from hyperamalgam import dyadic_hyper as dh
from hyperamalgam import harness as hz
from hyperamalgam.bessel_kingman import (
    character_product_residual,
    convolve_points,
    indicator_fourier,
    kernel_mass,
    motion_fourier,
)
from hyperamalgam.naimark import counterexample_lower_bound
from hyperamalgam.numerics import GridFunction

pytestmark = pytest.mark.acceptance


def _record(n: int, limit: float, body) -> None:
    start = time.perf_counter()
    ok, detail = body()
    secs = time.perf_counter() - start
    ok = bool(ok) and secs < limit
    ACCEPTANCE[n] = (ok, secs, detail + ("" if secs < limit else f" [over {limit:g} s]"))
    print(f"{'PASS' if ok else 'FAIL'} criterion {n} ({secs:.2f} s) {detail}")
    assert ok, detail


def _cases(*cases) -> tuple:
    failed = [c.id for c in cases if c.passed is not True]
    return not failed, f"{len(cases)} cases, failed: {failed or 'none'}"


def test_criterion_01_exact_discrete():
    def body():
        return _cases(hz.task_haar_mass(),
                      hz.task_orthogonality("H12"), hz.task_orthogonality("H"),
                      hz.task_product_table(),
                      hz.task_parseval("H12", 0, 100), hz.task_parseval("H", 0, 100))
    _record(1, 5.0, body)


def test_criterion_02_tails_vs_spectrum():
    def body():
        return _cases(hz.task_tails_exhaustive("H12"), hz.task_tails_exhaustive("H"),
                      hz.task_tails_random("H12", 0, 500), hz.task_tails_random("H", 0, 500))
    _record(2, 10.0, body)


def test_criterion_03_operate():
    _record(3, 10.0, lambda: _cases(*[hz.task_operate(0, 200, p) for p in (1.0, 1.5, 2.0, 3.0)]))


def test_criterion_04_sharp_local_global():
    _record(4, 5.0, lambda: _cases(*[hz.task_sharp(0, 100, p) for p in (1.0, 2.0, 3.0, math.inf)]))


def test_criterion_05_sharp_wiener():
    def body():
        pos = hz.task_wiener_discrete(0, 100)
        neg = hz.task_wiener_negative()
        ok = pos.passed and pos.lhs == 0 and neg.passed
        return ok, f"positive-type failures {pos.lhs}/100, control lhs={neg.lhs} rhs={neg.rhs}"
    _record(5, 10.0, body)


def test_criterion_06_hausdorff_young_discrete():
    _record(6, 5.0, lambda: _cases(*[hz.task_hy_discrete(0, 100, p, q) for p, q in dh.HY_ENDPOINTS]))


def test_criterion_07_indicator_transform():
    def body():
        worst = 0.0
        for eps in (0.5, 1.0, 2.0):
            f = GridFunction.indicator(0.0, eps)
            for lam in np.round(np.arange(0.0, 10.0 + 1e-9, 0.1), 10):
                worst = max(worst, abs(motion_fourier(f, float(lam)) - indicator_fourier(eps, lam)))
        return worst <= 1e-8, f"max error {worst:.3e}"
    _record(7, 10.0, body)


def test_criterion_08_kernel():
    def body():
        grid = np.linspace(0.2, 3.0, 10)
        # alpha = 1/2 against (1/2xy) int f(z) z dz
        f = lambda z: np.exp(-0.5 * np.asarray(z)) * (1 + np.sin(3 * np.asarray(z)))
        red = 0.0
        for x in grid[::3]:
            for y in grid[::3]:
                direct = spi.quad(lambda z: f(z) * z, abs(x - y), x + y,
                                  epsabs=1e-14, epsrel=1e-13, limit=200)[0] / (2 * x * y)
                red = max(red, abs(convolve_points(0.5, float(x), float(y), f) - direct))
        mass = 0.0
        for alpha in (0.75, 1.0, 2.0):
            for x in grid:
                for y in grid:
                    mass = max(mass, abs(kernel_mass(alpha, float(x), float(y)) - 1.0))
        mult = 0.0
        for alpha in (0.75, 1.0, 2.0):
            for lam in (0.5, 2.0, 5.0):
                for x, y in [(0.3, 0.9), (1.1, 2.4), (2.8, 2.8)]:
                    mult = max(mult, character_product_residual(alpha, lam, x, y))
        ok = red <= 1e-10 and mass <= 1e-8 and mult <= 1e-7
        return ok, f"reduction {red:.2e}, mass {mass:.2e}, multiplicativity {mult:.2e}"
    _record(8, 60.0, body)


def _suite(name: str):
    rep = hz.run_suite(name)
    s = rep.summary
    return rep.ok and s["asserted"] > 0, f"{s['passed']}/{s['asserted']} asserted cases passed"


def test_criterion_09_norm_equivalence():
    _record(9, 60.0, lambda: _suite("equivalence-motion"))


def test_criterion_10_translation_bound():
    def body():
        rep = hz.run_suite("translation-bound")
        worst = max(c.lhs for c in rep.cases if c.id.startswith("translate/"))
        ok, detail = rep.ok and len(rep.cases) == 39, f"{rep.summary['passed']}/{len(rep.cases)} cases"
        return ok, f"{detail}, max ratio {worst:.4f}"
    _record(10, 60.0, body)


def test_criterion_11_naimark():
    def body():
        vals = [counterexample_lower_bound(-16.0, 2.0, x) for x in (5.0, 10.0, 15.0, 20.0)]
        inc = all(b > a for a, b in zip(vals, vals[1:]))
        return inc and vals[-1] / vals[0] >= 1e3, f"value(20)/value(5) = {vals[-1] / vals[0]:.3e}"
    _record(11, 5.0, body)


def test_criterion_12_wiener_motion():
    def body():
        rep = hz.run_suite("wiener-motion")
        bad = []
        worst = {2.0: 0.0, 4.0: 0.0}
        for c in rep.cases:
            p = c.inputs["p"]
            worst[p] = max(worst[p], c.lhs)
            if not (math.isfinite(c.lhs) and c.lhs <= hz.WIENER_MOTION_FROZEN[p] * (1 + 1e-9)):
                bad.append(c.id)
        ok = len(rep.cases) == 100 and not bad
        return ok, f"max ratio p=2 {worst[2.0]:.6f}, p=4 {worst[4.0]:.6f}; over frozen: {bad or 'none'}"
    _record(12, 60.0, body)
