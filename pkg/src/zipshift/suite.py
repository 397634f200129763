"""Seeded experiment batteries.  Each returns a list of :class:`Check` records.

All randomness comes from ``random.Random(seed)`` (Mersenne Twister), and
per-trial seeds are drawn from that master stream in trial order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import coding
from .errors import CapExceeded
from .oracles import periodic_words_oracle
from .shadowing import perturbed_orbit, trace, verify_tracing
from .space import (
    ZipShiftSystem,
    all_cylinders,
    builtin_system,
    density_witness,
    distance,
    in_cylinder,
    mixing_gap,
    periodic_points,
    random_distinct_pair,
    random_point,
    separation_time,
    verify_backward_witness,
)


@dataclass
class Check:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": self.details}


def frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def expansivity(sys: ZipShiftSystem, trials: int, seed: int) -> list[Check]:
    """Random distinct pairs: witness distance exactly 1, backward witnesses checked on all branches."""
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        p, q = random_distinct_pair(sys.tm, rng)
        w = separation_time(sys, p, q)
        ok = w.distance == 1
        if ok and w.time < 0:
            try:
                ok = verify_backward_witness(sys, p, q, w.time)
            except CapExceeded as exc:
                out.append(Check(f"expansivity[{t}]", False, {"error": str(exc)}))
                continue
        out.append(Check(f"expansivity[{t}]", ok, w.to_json()))
    return out


def shadowing(sys: ZipShiftSystem, m: int, trials: int, length: int, seed: int) -> list[Check]:
    rng = random.Random(seed)
    eps = Fraction(1, sys.lam ** m)
    out = []
    for t in range(trials):
        p = random_point(sys.tm, rng)
        po = perturbed_orbit(sys, p, length, m, rng.getrandbits(64))
        rep = trace(sys, po, m)
        ver = verify_tracing(sys, rep.tracer, po, eps)
        ok = ver.accepted and ver.max_error == rep.max_error
        out.append(Check(f"shadowing[m={m},{t}]", ok, {
            "trial": t, "m": m,
            "max_error": frac(ver.max_error), "epsilon": frac(eps),
        }))
    return out


def periodic(sys: ZipShiftSystem, k_max: int) -> list[Check]:
    out = []
    for k in range(1, k_max + 1):
        try:
            pts = periodic_points(sys, k)
        except CapExceeded as exc:
            out.append(Check(f"periodic[k={k}]", False, {"error": str(exc)}))
            continue
        oracle = periodic_words_oracle(sys.tm, k)
        # compare as explicit windows [-k, k)
        ours = {tuple(p.index_at(i) for i in range(-k, k)) for p in pts}
        theirs = {left + right for left, right in oracle}
        ok = len(pts) == sys.lam ** k == len(oracle) and ours == theirs
        out.append(Check(f"periodic[k={k}]", ok, {
            "k": k, "count": len(pts), "expected": sys.lam ** k, "oracle": len(oracle),
        }))
    return out


def density(sys: ZipShiftSystem, radius: int, k_max: int | None = None) -> list[Check]:
    k_max = k_max or 2 * radius + 1
    cyls = all_cylinders(sys, -radius, radius)
    bad = []
    for c in cyls:
        p, k = density_witness(sys, c, k_max)
        if not in_cylinder(p, c):
            bad.append(c.to_json())
    return [Check(f"density[r={radius}]", not bad, {"cylinders": len(cyls), "failures": bad[:5]})]


def mixing(sys: ZipShiftSystem, d: int) -> list[Check]:
    gap = mixing_gap(sys, d, certify=True)
    return [Check(f"mixing[d={d}]", gap <= 2 * d + 2, {"gap": gap})]


def metric(sys: ZipShiftSystem, trials: int, seed: int) -> list[Check]:
    rng = random.Random(seed)
    fails = 0
    for _ in range(trials):
        p, q, r = (random_point(sys.tm, rng) for _ in range(3))
        dpq, dqr, dpr = distance(sys, p, q), distance(sys, q, r), distance(sys, p, r)
        ok = (dpr <= max(dpq, dqr) and (dpq == 0) == (p == q)
              and dpq == distance(sys, q, p))
        fails += not ok
    return [Check("metric", fails == 0, {"trials": trials, "failures": fails})]


def coding_battery(trials: int, seed: int, depth: int = 10, max_n: int = 12) -> list[Check]:
    rng = random.Random(seed)
    out = []
    expected = {
        "doubling": lambda n: Fraction(1, 2 ** (n + 2)),
        "tripling": lambda n: Fraction(1, 3 ** (n + 1)),
    }
    for name in ("doubling", "tripling"):
        scheme = coding.builtin_scheme(name)
        diams = [coding.generator_diameter(scheme.map, scheme.etp, n) for n in range(max_n + 1)]
        ok = all(d == expected[name](n) for n, d in enumerate(diams))
        out.append(Check(f"generator[{name}]", ok, {"diameters": [frac(d) for d in diams]}))
        fails = 0
        for _ in range(trials):
            word = coding.random_admissible_word(scheme, depth, rng)
            rep = coding.check_semiconjugacy(scheme, word, depth)
            a = coding.factor_pi_window(scheme, word)
            fails += not (rep.holds and a.width == coding.predicted_diameter(scheme, word))
        out.append(Check(f"semiconjugacy[{name}]", fails == 0, {"trials": trials, "failures": fails}))
    return out


BATTERIES = ("expansivity", "shadowing", "periodic", "density", "mixing", "metric", "coding")


def run(battery: str, *, lam: int = 4, trials: int = 100, seed: int = 0, m: int = 3,
        k: int = 6, length: int = 100, depth: int = 1) -> list[Check]:
    sys = builtin_system(lam)
    try:
        if battery == "expansivity":
            return expansivity(sys, trials, seed)
        if battery == "shadowing":
            return shadowing(sys, m, trials, length, seed)
        if battery == "periodic":
            return periodic(sys, k)
        if battery == "density":
            return density(sys, depth)
        if battery == "mixing":
            return mixing(sys, depth)
        if battery == "metric":
            return metric(sys, trials, seed)
        if battery == "coding":
            return coding_battery(trials, seed)
    except CapExceeded as exc:
        return [Check(battery, False, {"error": str(exc)})]
    raise ValueError(f"unknown battery {battery!r}; choose from {BATTERIES}")
