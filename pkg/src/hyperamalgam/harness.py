"""Verification suites and their machine-readable reports.

Each suite expands into independent tasks (module-level callables plus
keyword arguments) so they can be farmed out to a process pool; the report
always lists cases sorted by id, which keeps the output byte-stable.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from . import __version__
from . import dyadic_hyper as dh
from .dyadic import ONE, ZERO, Dyadic
from .errors import ConfigError, DivergenceError, UnknownSuite
from .motion_amalgam import (
    TRANSLATION_BOUND,
    check_transforms_theorem,
    hausdorff_young_ratio,
    hy_witness,
    translation_ratio,
    verify_equivalence,
    wiener_ratio,
    young_check,
)
from .naimark import character_is_increasing, log_bound_unchecked
from .numerics import GridFunction, QuadratureConfig
from .params import INF, AmalgamParams
from .pdgen import (
    bochner_motion,
    random_compact_function,
    random_discrete,
    random_pd_discrete,
    random_spectral_atoms,
)

SUITES = (
    "equivalence-motion",
    "translation-bound",
    "hausdorff-young-motion",
    "transforms-theorem",
    "naimark",
    "discrete-exact",
    "wiener-discrete",
    "wiener-motion",
)

# Largest ||f||_{p,inf,[0,1]} / ||f 1_[0,1]||_p over the 50 seeded Bochner
# functions (seeds 0..49, window [0, 64]) on the first run.
WIENER_MOTION_FROZEN = {2: 1.1166800908885457, 4: 1.0197423698658774}


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    p: float | None = None
    q: float | None = None
    n_max: int = 6
    x_max: float = 64.0
    tol_abs: float = 1e-10
    tol_rel: float = 1e-8
    a: float = -16.0
    workers: int = 1

    def __post_init__(self):
        if not (self.tol_abs > 0 and self.tol_rel > 0):
            raise ConfigError("tolerances must be positive")
        for name in ("p", "q"):
            v = getattr(self, name)
            if v is not None and not (v >= 1):
                raise ConfigError(f"exponent {name}={v} outside [1, inf]")
        if self.n_max < 1:
            raise ConfigError("nmax must be >= 1")
        if not self.x_max > 0:
            raise ConfigError("xmax must be positive")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if not self.a < -1:
            raise ConfigError("Naimark parameter a must be < -1")

    @property
    def quad(self) -> QuadratureConfig:
        return QuadratureConfig(abs_tol=self.tol_abs, rel_tol=self.tol_rel)

    def to_json(self) -> dict:
        return {"seed": self.seed, "p": self.p, "q": self.q, "nmax": self.n_max,
                "xmax": self.x_max, "tol_abs": self.tol_abs, "tol_rel": self.tol_rel, "a": self.a}


@dataclass(frozen=True)
class Case:
    id: str
    inputs: dict
    lhs: Any
    rhs: Any
    constant: Any
    passed: bool | None  # None: recorded, not asserted

    def to_json(self) -> dict:
        return {"id": self.id, "inputs": self.inputs, "lhs": self.lhs, "rhs": self.rhs,
                "constant": self.constant, "pass": self.passed}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    version: str = __version__
    wall_time: float = 0.0

    @property
    def summary(self) -> dict:
        asserted = [c for c in self.cases if c.passed is not None]
        failed = sum(1 for c in asserted if not c.passed)
        return {"total": len(self.cases), "asserted": len(asserted),
                "passed": len(asserted) - failed, "failed": failed,
                "recorded": len(self.cases) - len(asserted)}

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def to_json(self) -> dict:
        return {"suite": self.suite, "version": self.version, "seed": self.seed,
                "config": self.config, "cases": [c.to_json() for c in self.cases],
                "summary": self.summary}


# ----------------------------------------------------------------------------
# serialisation


def _encode(v):
    if isinstance(v, Dyadic):
        return v.to_json()
    if isinstance(v, Fraction):
        return {"num": v.numerator, "den": v.denominator}
    if isinstance(v, (bool, type(None), str)):
        return v
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        v = float(v)
        if math.isnan(v):
            return "nan"
        if math.isinf(v):
            return "inf" if v > 0 else "-inf"
        return v
    if isinstance(v, dict):
        return {str(k): _encode(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_encode(x) for x in v]
    if hasattr(v, "to_json"):
        return _encode(v.to_json())
    return str(v)


def _decode(v):
    if isinstance(v, dict):
        if set(v) == {"num", "exp"}:
            return Dyadic(v["num"], v["exp"])
        if set(v) == {"num", "den"}:
            return Fraction(v["num"], v["den"])
        return {k: _decode(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_decode(x) for x in v]
    if v == "inf":
        return INF
    if v == "-inf":
        return -INF
    if v == "nan":
        return math.nan
    return v


def to_json_text(report: SuiteReport) -> str:
    return json.dumps(_encode(report.to_json()), indent=2, sort_keys=True) + "\n"


def to_csv_text(report: SuiteReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "id", "inputs", "lhs", "rhs", "constant", "pass"])
    for c in report.cases:
        enc = lambda v: json.dumps(_encode(v), sort_keys=True)
        w.writerow([report.suite, c.id, enc(c.inputs), enc(c.lhs), enc(c.rhs), enc(c.constant),
                    "" if c.passed is None else str(c.passed).lower()])
    return buf.getvalue()


def emit(report: SuiteReport, fmt: str = "json", path=None) -> str:
    """Serialise ``report`` as JSON or CSV; write to ``path`` when given."""
    if fmt == "json":
        text = to_json_text(report)
    elif fmt == "csv":
        text = to_csv_text(report)
    else:
        raise ConfigError(f"unknown format {fmt!r}")
    if path is not None and str(path) != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def parse_report(text: str) -> SuiteReport:
    """Inverse of the JSON emitter."""
    obj = _decode(json.loads(text))
    cases = [Case(c["id"], c["inputs"], c["lhs"], c["rhs"], c["constant"], c["pass"])
             for c in obj["cases"]]
    return SuiteReport(obj["suite"], obj["seed"], cases, obj.get("config", {}), obj["version"])


# ----------------------------------------------------------------------------
# task bodies (module level so a process pool can pickle them)


def _finite(*vals) -> bool:
    return all(math.isfinite(float(v)) for v in vals)


def task_equivalence(seed: int, p: float, tol_abs: float, tol_rel: float) -> Case:
    cfg = QuadratureConfig(abs_tol=tol_abs, rel_tol=tol_rel)
    f = random_compact_function(seed)
    r = verify_equivalence(f, p, cfg)
    return Case(f"equiv/seed={seed:03d}/p={p:g}", {"seed": seed, "p": p, "kind": seed % 3},
                r.discrete, r.continuous, {"C_lower": r.C_lower, "C_upper": r.C_upper}, r.passed)


def task_translation(n: int, y_max: float, step: float) -> Case:
    ys = np.arange(0.0, y_max + 1e-12, step)
    ratios = [translation_ratio(n, float(y)) for y in ys]
    k = int(np.argmax(ratios))
    return Case(f"translate/n={n:02d}", {"n": n, "y_max": y_max, "step": step, "argmax_y": float(ys[k])},
                ratios[k], TRANSLATION_BOUND, TRANSLATION_BOUND, ratios[k] <= TRANSLATION_BOUND)


def task_witness(n: int) -> Case:
    g = hy_witness(n)
    xs = np.linspace(n - 1.0, n, 201)[:-1]
    dev = float(np.max(np.abs(g(xs) - 1.0)))
    outside = float(np.max(np.abs(g(np.linspace(n + 2.0, n + 3.0, 11)))))
    return Case(f"witness/n={n:02d}", {"n": n}, dev, 1e-8, None, dev <= 1e-8 and outside == 0.0)


def task_hy_motion(n: int, lam_max: float) -> Case:
    r = hausdorff_young_ratio(hy_witness(n), lam_max)
    stable = abs(r.ratio_doubled - r.ratio) <= 1e-3 * r.ratio
    return Case(f"hy-motion/n={n:02d}", {"n": n, "lam_max": lam_max},
                r.lhs, r.rhs, {"ratio": r.ratio, "ratio_doubled": r.ratio_doubled},
                _finite(r.ratio, r.ratio_doubled) and stable)


def task_young(name: str, pair: tuple) -> Case:
    f = GridFunction.indicator(0.0, 1.0)
    (p1, q1), (p2, q2) = pair
    r = young_check(f, f, AmalgamParams(p1, q1), AmalgamParams(p2, q2))
    return Case(f"young/{name}", {"f": "1_[0,1]", "g": "1_[0,1]", "fp": [p1, q1], "gp": [p2, q2],
                                  "target": [r.target.p, r.target.q]},
                r.lhs, r.rhs, {"ratio": r.ratio}, _finite(r.lhs, r.rhs))


def _transform_test_fn(name: str) -> GridFunction:
    if name == "indicator":
        return GridFunction.indicator(0.0, 1.0)
    if name == "zero":
        return GridFunction.zero(1.0)
    if name == "hat":
        return GridFunction(lambda x: np.maximum(0.0, 1 - np.abs(x - 1.0)), 2.0, (0.0, 1.0, 2.0))
    seed = int(name.split("=")[1])
    return random_compact_function(3 * seed + 1, support=3)


def task_transforms(name: str) -> Case:
    g = _transform_test_fn(name)
    r = check_transforms_theorem(g)
    vals = [r.cond1, r.cond3, r.cond2_truncated]
    ok = r.all_finite
    if name == "zero":
        ok = ok and all(v == 0 for v in vals)
    return Case(f"transforms/{name}", {"g": name, "lam_max": r.lam_max},
                {"cond1": r.cond1, "cond3": r.cond3}, {"cond2_truncated": r.cond2_truncated}, None, ok)


def task_naimark(a: float, p: float) -> Case:
    xs = list(range(5, 21))
    logs = [log_bound_unchecked(a, p, float(x)) for x in xs]
    increasing = all(b > c for b, c in zip(logs[1:], logs))
    growth = math.exp(logs[-1] - logs[0])
    asserted = a < -9
    ok = increasing and growth >= 1e3 and character_is_increasing(a)
    return Case(f"naimark/a={a:g}/p={p:g}", {"a": a, "p": p, "x": [5, 20]},
                growth, 1e3, {"log_values": logs}, ok if asserted else None)


def task_naimark_points(a: float, p: float) -> Case:
    xs = [5.0, 10.0, 15.0, 20.0]
    vals = [math.exp(log_bound_unchecked(a, p, x)) for x in xs]
    ok = all(b > c for b, c in zip(vals[1:], vals)) and vals[-1] / vals[0] >= 1e3
    return Case(f"naimark-points/a={a:g}/p={p:g}", {"a": a, "p": p, "x": xs},
                vals[-1] / vals[0], 1e3, {"values": vals}, ok if a < -9 else None)


# discrete, exact


def task_haar_mass() -> Case:
    m = dh.total_mass(dh.Space.H12)
    return Case("exact/haar-mass", {"space": "H12"}, m, ONE, None, m == 1)


def task_orthogonality(space: str) -> Case:
    sp = dh.Space(space)
    lo = 0 if sp is dh.Space.H12 else -12
    bad = []
    for m in range(lo, 13):
        cm = dh.character_fn(sp, m)
        for n in range(lo, 13):
            val = dh.haar_sum(sp, cm * dh.character_fn(sp, n))
            want = ONE / dh.plancherel(sp, n) if m == n else ZERO
            if val != want:
                bad.append([m, n])
    return Case(f"exact/orthogonality/{space}", {"range": [lo, 12]}, len(bad), 0, None, not bad)


def task_product_table() -> Case:
    sp = dh.Space.H
    pts = list(range(-15, 16)) + [INF]
    bad = 0
    idx = list(range(-6, 7))
    for n in idx:
        cn = dh.character_fn(sp, n)
        sq = dh.character_product(sp, n, n)
        for m in pts:
            direct = dh.character_square_series(n, m)
            # brute series with exact geometric remainder: chi_{n-k}(m) = 1 once n-k <= m
            if m == INF:
                brute = ONE
            else:
                K = max(1, n - int(m))
                brute = sum((Dyadic(1, k) * dh.character(sp, n - k, m) for k in range(1, K)), ZERO)
                brute = brute + Dyadic(1, K - 1)
            if not (cn(m) * cn(m) == sq(m) == direct == brute):
                bad += 1
        for k in idx:
            if k != n:
                prod = dh.character_fn(sp, n) * dh.character_fn(sp, k)
                if any(prod(m) != dh.character(sp, max(n, k), m) for m in pts):
                    bad += 1
    return Case("exact/product-table", {"n": [-6, 6], "m": [-15, 15, "inf"]}, bad, 0, None, bad == 0)


def task_parseval(space: str, seed: int, count: int) -> Case:
    sp = dh.Space(space)
    worst = ZERO
    for s in range(seed, seed + count):
        f = random_discrete(sp, s, tail=sp is dh.Space.H12)
        worst = max(worst, dh.parseval_residual(sp, f))
    return Case(f"exact/parseval/{space}", {"seeds": [seed, seed + count - 1]}, worst, ZERO, None, worst == 0)


PATTERN_VALUES = (Dyadic(-1), Dyadic(-1, 1), ZERO, Dyadic(1, 1), ONE)


def task_tails_exhaustive(space: str) -> Case:
    sp = dh.Space(space)
    bad = 0
    positive = 0
    for pat in itertools.product(PATTERN_VALUES, repeat=5):
        f = dh.DiscreteFn(0, pat[:4], pat[4])
        a = dh.is_positive_type(sp, f)
        positive += a
        bad += a != dh.spectral_positive(sp, f)
    return Case(f"tails/exhaustive/{space}", {"patterns": 5 ** 5, "positive": positive},
                bad, 0, None, bad == 0)


def random_support10(space: dh.Space, seed: int) -> dh.DiscreteFn:
    import random

    rng = random.Random(seed)
    lo = 0 if space is dh.Space.H12 else rng.randint(-5, 0)
    n = rng.randint(1, 10 - lo + 1) if space is dh.Space.H12 else rng.randint(1, 11 - lo)
    mode = rng.random()
    if mode < 0.5:
        # near-positive: a random positive-type function with one perturbed value
        f = random_pd_discrete(space, seed, 5, allow_constant=False)
        k = rng.randint(f.low, f.high)
        vals = {m: f(m) for m in range(f.low, f.high + 1)}
        if rng.random() < 0.5:
            vals[k] = vals[k] + Dyadic(rng.randint(-4, 4), rng.randint(0, 4))
        return dh.DiscreteFn.from_mapping(vals, tail=f.tail)
    vals = [Dyadic(rng.randint(-8, 8), rng.randint(0, 3)) for _ in range(n)]
    return dh.DiscreteFn(lo, tuple(vals), Dyadic(rng.randint(-2, 8), rng.randint(0, 2)))


def task_tails_random(space: str, seed: int, count: int) -> Case:
    sp = dh.Space(space)
    bad = 0
    positive = 0
    for s in range(seed, seed + count):
        f = random_support10(sp, s)
        a = dh.is_positive_type(sp, f)
        positive += a
        bad += a != dh.spectral_positive(sp, f)
    return Case(f"tails/random/{space}", {"seeds": [seed, seed + count - 1], "positive": positive},
                bad, 0, None, bad == 0)


def task_operate(seed: int, count: int, p: float) -> Case:
    sp = dh.Space.H12
    exact = float(p).is_integer() and p in (1, 2)
    tol = 0.0 if exact else 1e-12
    failures = 0
    for s in range(seed, seed + count):
        f = random_pd_discrete(sp, s, 8)
        if not dh.is_positive_type(sp, f):
            failures += 1
            continue
        if not dh.is_positive_type(sp, dh.pointwise_power(f, p), tol):
            failures += 1
    return Case(f"operate/p={p:g}", {"seeds": [seed, seed + count - 1], "p": p, "tol": tol},
                failures, 0, None, failures == 0)


def task_sharp(seed: int, count: int, p: float) -> Case:
    """``||f||*_{p,inf} = ||f 1_{U_0}||_p`` for positive definite ``f`` on ``H``.

    For integer ``p`` the equality is decided exactly by comparing
    ``sup_{n<0} |f|`` (raised to ``p``) with ``sum_{n>=0} omega |f|^p``.
    """
    worst = 0.0
    exact_ok = True
    for s in range(seed, seed + count):
        f = random_pd_discrete(dh.Space.H, s, 6)
        star = dh.star_norm(f, AmalgamParams(p, INF))
        local = dh.lp_norm(dh.Space.H, f, p, start=0)
        below, loc = dh.star_norm_parts(f, p, INF)
        if p == INF:
            exact_ok &= below <= loc
        else:
            exact_ok &= below ** int(p) <= loc
        worst = max(worst, abs(star - local) / max(local, 1e-300))
    ok = exact_ok and worst <= 1e-12
    return Case(f"sharp/p={p:g}", {"seeds": [seed, seed + count - 1], "p": p}, worst, 0.0, ONE, ok)


def task_hy_discrete(seed: int, count: int, p: float, q: float) -> Case:
    worst = 0.0
    ok = True
    for s in range(seed, seed + count):
        f = random_discrete(dh.Space.H, s, tail=True)
        r = dh.hausdorff_young_check(f, p, q)
        worst = max(worst, r.lhs / r.rhs if r.rhs else 0.0)
        ok &= bool(r.passed)
    return Case(f"hy-discrete/p={p:g}/q={q:g}", {"seeds": [seed, seed + count - 1], "p": p, "q": q},
                worst, 1.0, ONE, ok)


def random_probability(space: dh.Space, rng) -> dh.DiscreteMeasure:
    lo = 0 if space is dh.Space.H12 else -3
    j = rng.randint(0, 4)
    parts = rng.randint(1, 4)
    total = 1 << j
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    weights = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    atoms, spreads = [], []
    for w in weights:
        if w == 0:
            continue
        x = rng.choice(list(range(lo, 7)) + [INF])
        (spreads if rng.random() < 0.3 and x != INF else atoms).append((x, Dyadic(w, j)))
    return dh.DiscreteMeasure(tuple(atoms), tuple(spreads))


def task_wiener_discrete(seed: int, count: int) -> Case:
    import random

    rng = random.Random(seed)
    failures = []
    for i in range(count):
        sp = dh.Space.H12 if i % 2 == 0 else dh.Space.H
        f = random_pd_discrete(sp, seed + i, 6, allow_constant=True)
        mu = random_probability(sp, rng)
        N = rng.randint(0, 3)
        p = (1, 2, 3)[i % 3]
        r = dh.wiener_inequality_check(sp, f, mu, N, p)
        if not r.passed:
            failures.append(i)
    return Case("wiener/positive-type", {"seed": seed, "count": count}, len(failures), 0, ONE, not failures)


def task_wiener_negative() -> Case:
    sp = dh.Space.H12
    f = dh.DiscreteFn.point_mass(5)
    r = dh.wiener_inequality_check(sp, f, dh.DiscreteMeasure.point(5), 6, 1, check_positivity=False)
    violated = not r.passed
    return Case("wiener/negative-control", {"f": "1_{5}", "mu": "eps_5", "N": 6, "p": 1,
                                            "positive_type": dh.is_positive_type(sp, f)},
                r.lhs, r.rhs, ONE, violated)


def task_wiener_motion(seed: int, p: float, x_max: float) -> Case:
    f = bochner_motion(random_spectral_atoms(seed), x_max)
    r = wiener_ratio(f, p)
    return Case(f"wiener-motion/seed={seed:03d}/p={p:g}", {"seed": seed, "p": p, "x_max": x_max},
                r, WIENER_MOTION_FROZEN.get(p), None, _finite(r))


# ----------------------------------------------------------------------------
# suite expansion


@dataclass(frozen=True)
class Task:
    fn: Callable
    kwargs: dict


def _ps(cfg: RunConfig, default):
    return (cfg.p,) if cfg.p is not None else default


def _tasks(name: str, cfg: RunConfig) -> list:
    s = cfg.seed
    if name == "equivalence-motion":
        return [Task(task_equivalence, dict(seed=s + i, p=p, tol_abs=cfg.tol_abs, tol_rel=cfg.tol_rel))
                for i in range(50) for p in _ps(cfg, (1.0, 2.0, 3.0, 4.0)) if p != INF]
    if name == "translation-bound":
        return ([Task(task_translation, dict(n=n, y_max=40.0, step=0.25)) for n in range(1, 31)]
                + [Task(task_witness, dict(n=n)) for n in range(2, 11)])
    if name == "hausdorff-young-motion":
        young = {"(1,1)*(1,1)": ((1, 1), (1, 1)), "(2,2)*(2,2)": ((2, 2), (2, 2)),
                 "(1,2)*(2,1)": ((1, 2), (2, 1))}
        return ([Task(task_hy_motion, dict(n=n, lam_max=32.0)) for n in range(1, 5)]
                + [Task(task_young, dict(name=k, pair=v)) for k, v in young.items()])
    if name == "transforms-theorem":
        return [Task(task_transforms, dict(name=n)) for n in
                ("indicator", "zero", "hat", f"seed={s}", f"seed={s + 1}")]
    if name == "naimark":
        return ([Task(task_naimark, dict(a=cfg.a, p=p)) for p in _ps(cfg, (1.0, 2.0, 4.0))]
                + [Task(task_naimark_points, dict(a=cfg.a, p=p)) for p in _ps(cfg, (2.0,))])
    if name == "discrete-exact":
        return ([Task(task_haar_mass, {}), Task(task_product_table, {})]
                + [Task(task_orthogonality, dict(space=sp)) for sp in ("H12", "H")]
                + [Task(task_parseval, dict(space=sp, seed=s, count=100)) for sp in ("H12", "H")]
                + [Task(task_tails_exhaustive, dict(space=sp)) for sp in ("H12", "H")]
                + [Task(task_tails_random, dict(space=sp, seed=s, count=500)) for sp in ("H12", "H")]
                + [Task(task_operate, dict(seed=s, count=200, p=p)) for p in (1.0, 1.5, 2.0, 3.0)]
                + [Task(task_sharp, dict(seed=s, count=100, p=p)) for p in (1.0, 2.0, 3.0, INF)]
                + [Task(task_hy_discrete, dict(seed=s, count=100, p=p, q=q))
                   for p, q in dh.HY_ENDPOINTS])
    if name == "wiener-discrete":
        return [Task(task_wiener_discrete, dict(seed=s, count=100)), Task(task_wiener_negative, {})]
    if name == "wiener-motion":
        return [Task(task_wiener_motion, dict(seed=s + i, p=p, x_max=cfg.x_max))
                for i in range(50) for p in _ps(cfg, (2.0, 4.0)) if p != INF]
    raise UnknownSuite(name)


def _run_task(task: Task) -> Case:
    try:
        return task.fn(**task.kwargs)
    except DivergenceError as exc:
        return Case(f"{task.fn.__name__}/error", _encode(task.kwargs), str(exc), None, None, False)


def run_suite(name: str, config: RunConfig | None = None) -> SuiteReport:
    """Run one suite (or ``all``) and return its report with cases sorted by id."""
    config = config or RunConfig()
    if name != "all" and name not in SUITES:
        raise UnknownSuite(name)
    names = SUITES if name == "all" else (name,)
    tasks = [t for n in names for t in _tasks(n, config)]
    start = time.perf_counter()
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            cases = list(pool.map(_run_task, tasks))
    else:
        cases = [_run_task(t) for t in tasks]
    cases.sort(key=lambda c: c.id)
    return SuiteReport(name, config.seed, cases, config.to_json(),
                       wall_time=time.perf_counter() - start)
