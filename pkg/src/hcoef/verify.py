"""Seeded property suites behind ``hc verify``."""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from .arith import f_fn, f_inv, g_fn, h_fn, prod_over, shift, t_fn
from .khc import k_det, k_pole_expand, k_residue_at_coincidence, k_sym
from .lattice import LatticeSpec, yang_baxter_check, z_lattice_enum, z_lattice_transfer
from .representations import default_reps, evaluate
from .residue import (
    pole_decompose,
    s_b_residues,
    verify_recursion_nontriv,
    verify_recursion_triv,
)
from .sampler import sample_point
from .zhc import degenerate_pair

SUITES = ("identities", "cross", "recursions", "lattice")


@dataclass
class VerifyReport:
    suite: str
    attempted: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.passed == self.attempted

    def to_json(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out


def _text(value) -> object:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_text(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _text(v) for k, v in value.items()}
    return value


def _point_json(pt) -> dict:
    return {"c": str(pt.c), "t": _text(pt.t), "x": _text(pt.x), "s": _text(pt.s), "y": _text(pt.y)}


def random_c(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([1, 1, 2, 3, -1, -2])) / rng.choice([1, 1, 2, 3])


def generic_values(rng: random.Random, count: int, c: Fraction, spread: int = 1000) -> list:
    """Distinct rationals with no pairwise difference in {0, ±c, ±2c}."""
    while True:
        vals = [Fraction(v) for v in rng.sample(range(-spread, spread + 1), count)]
        if degenerate_pair(vals, c) is None:
            return vals


# individual trials: each returns a dict of failed checks (empty when all pass)

def identities_trial(rng: random.Random, max_n: int = 5) -> dict:
    bad: dict = {}
    c = random_c(rng)
    x, y = generic_values(rng, 2, c, 50)
    checks = {
        "g antisymmetric": g_fn(x, y, c) == -g_fn(y, x, c),
        "h(x-c,y) = 1/g(x,y)": h_fn(x - c, y, c) == 1 / g_fn(x, y, c),
        "f(x-c,y) = 1/f(y,x)": f_fn(x - c, y, c) == f_inv(y, x, c),
        "t(x-c,y) = t(y,x)": t_fn(x - c, y, c) == t_fn(y, x, c),
        "f = 1 + g": f_fn(x, y, c) == 1 + g_fn(x, y, c),
        "t = g/h": t_fn(x, y, c) == g_fn(x, y, c) / h_fn(x, y, c),
        "h = f/g": h_fn(x, y, c) == f_fn(x, y, c) / g_fn(x, y, c),
    }

    n = rng.randint(0, max_n)
    vals = generic_values(rng, 2 * n + 1, c)
    xs, ys, z = tuple(vals[:n]), tuple(vals[n:2 * n]), vals[-1]
    kd = k_det(xs, ys, c)
    checks["K det = sym"] = kd == k_sym(xs, ys, c)
    checks["K det = pole expansion"] = kd == k_pole_expand(xs, ys, c)
    # the shift identities need evaluators that do not strip pairs themselves
    for name, fn in (("sym", k_sym), ("pole", k_pole_expand)):
        checks[f"K_(n+1)(x,z-c|y,z) = -K_n [{name}]"] = fn(xs + (z - c,), ys + (z,), c) == -kd
        checks[f"K_(n+1)(x,z|y,z+c) = -K_n [{name}]"] = fn(xs + (z,), ys + (z + c,), c) == -kd
    red = (-1) ** n * k_det(ys, xs, c) / prod_over(f_fn, ys, xs, c)
    checks["K(x-c|y) reduction"] = k_det(shift(xs, -c), ys, c) == red
    checks["K(x|y+c) reduction"] = k_det(xs, shift(ys, c), c) == red

    if 1 <= n <= 4:
        for variable in ("x", "y"):
            checks[f"residue in {variable}_n"] = _k_residue_extracted(xs, ys, c, variable) == \
                k_residue_at_coincidence(xs, ys, c, variable)
    for name, ok in checks.items():
        if not ok:
            bad[name] = {"c": str(c), "x": _text(xs), "y": _text(ys)}
    return bad


def _k_residue_extracted(xs, ys, c, variable: str) -> Fraction:
    """Residue of K_n at x_n = y_n from exact samples in the free variable."""
    n = len(xs)
    others = xs + ys
    poles = ys if variable == "x" else xs
    start = int(max(abs(v) for v in others)) + 10**4
    us = [Fraction(start + 3 * k) for k in range(n + 1)]
    samples = []
    for u in us:
        if variable == "x":
            samples.append((u, k_det(xs[:-1] + (u,), ys, c)))
        else:
            samples.append((u, k_det(xs, ys[:-1] + (u,), c)))
    residues = pole_decompose(samples, poles)
    return residues[-1]


def cross_trial(rng: random.Random, max_a: int = 3, max_b: int = 3) -> dict:
    while True:
        a, b = rng.randint(0, max_a), rng.randint(0, max_b)
        if a + b >= 1:
            break
    pt = sample_point(rng, a, b, random_c(rng))
    values = {rep.value: evaluate(rep, pt) for rep in default_reps(a, b)}
    if len(set(values.values())) == 1:
        return {}
    return {"disagreement": {"a": a, "b": b, "point": _point_json(pt), "values": _text(values)}}


def recursions_trial(rng: random.Random, max_a: int = 2, max_b: int = 2) -> dict:
    a, b = rng.randint(0, max_a), rng.randint(1, max(1, max_b))
    pt = sample_point(rng, a, b, random_c(rng))
    checks = {"residue at s_b = y_b": verify_recursion_triv(pt)}
    if a >= 1:
        checks["residue at s_b = t_a"] = verify_recursion_nontriv(pt)
    try:
        s_b_residues(pt, extra=3)
        checks["simple-pole reconstruction"] = True
    except ValueError:
        checks["simple-pole reconstruction"] = False
    return {name: {"a": a, "b": b, "point": _point_json(pt)} for name, ok in checks.items() if not ok}


def lattice_trial(rng: random.Random, max_a: int = 2, max_b: int = 2) -> dict:
    bad: dict = {}
    while True:
        a, b = rng.randint(0, max_a), rng.randint(0, max_b)
        if a + b <= 4:
            break
    pt = sample_point(rng, a, b, random_c(rng))
    spec = LatticeSpec.from_point(pt)
    enum_value, transfer_value = z_lattice_enum(spec), z_lattice_transfer(spec)
    if enum_value != transfer_value:
        bad["enum = transfer"] = {"point": _point_json(pt), "enum": str(enum_value),
                                  "transfer": str(transfer_value)}
    c = random_c(rng)
    x, y, z = generic_values(rng, 3, c, 100)
    if not yang_baxter_check(x, y, z, c):
        bad["Yang-Baxter"] = {"x": str(x), "y": str(y), "z": str(z), "c": str(c)}
    return bad


_TRIALS: dict = {
    "identities": lambda rng, max_a, max_b: identities_trial(rng),
    "cross": cross_trial,
    "recursions": recursions_trial,
    "lattice": lattice_trial,
}


def run_suite(suite: str, seed: int = 0, trials: int = 20, max_a: int = 2, max_b: int = 2,
              progress: Callable[[int], None] | None = None) -> VerifyReport:
    if suite not in _TRIALS:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES}")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    report = VerifyReport(suite)
    start = time.perf_counter()
    for i in range(trials):
        rng = random.Random(f"{suite}:{seed}:{i}")
        report.attempted += 1
        try:
            bad = _TRIALS[suite](rng, max_a, max_b)
        except Exception as exc:  # a crash counts as a failed trial
            bad = {"exception": f"{type(exc).__name__}: {exc}"}
        if bad:
            report.failures.append({"trial": i, "failed": bad})
        else:
            report.passed += 1
        if progress:
            progress(i)
    report.seconds = time.perf_counter() - start
    return report

