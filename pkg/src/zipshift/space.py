"""The metric space of a zip shift and the dynamics of the zip shift map.

Distances are exact :class:`fractions.Fraction` values ``lambda**-M`` where M
is the smallest ``|i|`` at which two points disagree and lambda = #S.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from . import alphabet
from .alphabet import TransitionMap
from .errors import (
    AlphabetMismatch,
    AlphabetViolation,
    CapExceeded,
    EqualPoints,
    InvalidChoice,
)
from .point import Window, ZipPoint, from_indices, tail_prefix, with_symbols

DEFAULT_CAP = 10**6
DEFAULT_SPAN_CAP = 12
HALF = Fraction(1, 2)


def _env_cap() -> int:
    raw = os.environ.get("ZIPSHIFT_CAP")
    return int(raw) if raw else DEFAULT_CAP


@dataclass(frozen=True)
class ZipShiftSystem:
    """A transition map together with the metric base lambda = #S."""

    tm: TransitionMap
    cap: int = field(default_factory=_env_cap)
    span_cap: int = DEFAULT_SPAN_CAP

    @property
    def lam(self) -> int:
        return self.tm.n_s

    def check_cap(self, count: int, what: str) -> None:
        if count > self.cap:
            raise CapExceeded(f"{what}: {count} exceeds enumeration cap {self.cap}")

    def to_json(self) -> dict:
        return {"tm": self.tm.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "ZipShiftSystem":
        return cls(TransitionMap.from_json(obj["tm"] if "tm" in obj else obj))


BUILTIN_SYSTEMS = {
    "example1": alphabet.example1,
    "example2": alphabet.example2,
    "lambda2": lambda: alphabet.full_shift(2),
    "lambda3": lambda: alphabet.cyclic(3, 2),
    "lambda4": alphabet.example1,
    "lambda6": lambda: alphabet.cyclic(6, 3),
}


def builtin_system(name: str | int) -> ZipShiftSystem:
    """Named systems; an integer lambda selects ``lambda<n>``."""
    key = f"lambda{name}" if isinstance(name, int) else name
    try:
        return ZipShiftSystem(BUILTIN_SYSTEMS[key]())
    except KeyError:
        raise KeyError(f"unknown builtin system {name!r}; known: {sorted(BUILTIN_SYSTEMS)}") from None


@dataclass(frozen=True)
class Cylinder:
    """Points with prescribed symbols at finitely many (not necessarily consecutive) indices."""

    constraints: tuple[tuple[int, str], ...] = ()

    def __post_init__(self):
        items = tuple(sorted((int(i), str(s)) for i, s in self.constraints))
        if len({i for i, _ in items}) != len(items):
            raise ValueError("cylinder constrains an index twice")
        object.__setattr__(self, "constraints", items)

    @classmethod
    def from_window(cls, w: Window) -> "Cylinder":
        return cls(tuple(w.items()))

    def indices(self, tm: TransitionMap) -> list[tuple[int, int]]:
        out = []
        for i, s in self.constraints:
            alpha = tm.z_alphabet if i < 0 else tm.s_alphabet
            if s not in alpha:
                raise AlphabetViolation(f"symbol {s!r} not allowed at index {i}")
            out.append((i, alpha.index(s)))
        return out

    @property
    def span(self) -> int:
        if not self.constraints:
            return 0
        return self.constraints[-1][0] - self.constraints[0][0] + 1

    def to_json(self) -> dict:
        return {"constraints": [{"i": i, "s": s} for i, s in self.constraints]}

    @classmethod
    def from_json(cls, obj: dict) -> "Cylinder":
        return cls(tuple((c["i"], c["s"]) for c in obj["constraints"]))


@dataclass(frozen=True)
class SeparationWitness:
    time: int
    distance: Fraction
    branch_universal: bool
    threshold: Fraction = HALF

    def to_json(self) -> dict:
        return {
            "n": self.time,
            "distance": _frac(self.distance),
            "branch_universal": self.branch_universal,
            "threshold": _frac(self.threshold),
        }


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _same_tm(p: ZipPoint, q: ZipPoint) -> None:
    if p.tm != q.tm:
        raise AlphabetMismatch("points live over different transition maps")


def _first_diff(at, ap, bt, bp) -> int | None:
    """First position where two eventually periodic one-sided words differ."""
    n = max(len(at), len(bt)) + math.lcm(len(ap), len(bp))
    a = tail_prefix(at, ap, n)
    b = tail_prefix(bt, bp, n)
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return k
    return None


def _side_disagreements(p: ZipPoint, q: ZipPoint) -> tuple[int | None, int | None]:
    """(least i >= 0 with p_i != q_i, least j > 0 with p_-j != q_-j); None when there is none."""
    _same_tm(p, q)
    r = _first_diff(p.right_transient, p.right_period, q.right_transient, q.right_period)
    l = _first_diff(p._out_t, p._out_p, q._out_t, q._out_p)
    return r, (None if l is None else l + 1)


def first_disagreement(sys: ZipShiftSystem, p: ZipPoint, q: ZipPoint) -> float | int:
    """min |i| with p_i != q_i, or ``math.inf`` when p == q."""
    r, l = _side_disagreements(p, q)
    cands = [v for v in (r, l) if v is not None]
    return min(cands) if cands else math.inf


def distance(sys: ZipShiftSystem, p: ZipPoint, q: ZipPoint) -> Fraction:
    m = first_disagreement(sys, p, q)
    if m == math.inf:
        return Fraction(0)
    return Fraction(1, sys.lam ** m)


def in_cylinder(p: ZipPoint, c: Cylinder) -> bool:
    return all(p.index_at(i) == s for i, s in c.indices(p.tm))


# -- dynamics ---------------------------------------------------------------

def shift(sys: ZipShiftSystem, p: ZipPoint) -> ZipPoint:
    """The zip shift: move left by one, compressing the symbol leaving index 0 through tau."""
    rt, rp = p.right_transient, p.right_period
    if rt:
        s0, rt, new_rp = rt[0], rt[1:], rp
    else:
        s0, new_rp = rp[0], rp[1:] + rp[:1]
    lt = p.left_transient + (p.tm.assignment[s0],)
    return from_indices(p.tm, p.left_period, lt, rt, new_rp)


def preimage(sys: ZipShiftSystem, p: ZipPoint, choice: int) -> ZipPoint:
    """The inverse branch that puts S-index ``choice`` at index 0."""
    z = p.index_at(-1)
    if p.tm.assignment[choice] != z:
        raise InvalidChoice(
            f"{p.tm.s_alphabet[choice]!r} is not in the fiber of {p.tm.z_alphabet[z]!r}"
        )
    lp, lt = p.left_period, p.left_transient
    if lt:
        lt = lt[:-1]
    else:
        lp = lp[-1:] + lp[:-1]
    return from_indices(p.tm, lp, lt, (choice,) + p.right_transient, p.right_period)


def preimages(sys: ZipShiftSystem, p: ZipPoint) -> list[ZipPoint]:
    """All preimages, one per element of the fiber over p_{-1}, ordered by S-index."""
    return [preimage(sys, p, s) for s in p.tm.fiber_indices(p.index_at(-1))]


def iterate(sys: ZipShiftSystem, p: ZipPoint, n: int) -> ZipPoint:
    if n < 0:
        raise ValueError("use iterate_back for negative times")
    for _ in range(n):
        p = shift(sys, p)
    return p


Chooser = Callable[[int, tuple[str, ...]], str]


def fixed_choice(k: int = 0) -> Chooser:
    """Always take the k-th fiber element (cyclically when the fiber is short)."""
    return lambda step, fib: fib[k % len(fib)]


def cycling_choice() -> Chooser:
    return lambda step, fib: fib[step % len(fib)]


def explicit_choices(symbols: Sequence[str]) -> Chooser:
    syms = [str(s) for s in symbols]
    return lambda step, fib: syms[step]


def iterate_back(sys: ZipShiftSystem, p: ZipPoint, n: int, chooser: Chooser,
                 record: list | None = None) -> ZipPoint:
    """n inverse steps; ``chooser(step, fiber)`` names the S-symbol placed at index 0.

    Chosen symbols are appended to ``record`` when it is given.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    sa = p.tm.s_alphabet
    for step in range(n):
        fib_idx = p.tm.fiber_indices(p.index_at(-1))
        fib = tuple(sa[s] for s in fib_idx)
        sym = str(chooser(step, fib))
        if sym not in fib:
            raise InvalidChoice(f"step {step}: {sym!r} not in fiber {fib}")
        if record is not None:
            record.append(sym)
        p = preimage(sys, p, sa.index(sym))
    return p


def backward_branches(sys: ZipShiftSystem, p: ZipPoint, n: int) -> list[ZipPoint]:
    """Every n-step backward iterate of p, over all branch compositions."""
    layer = [p]
    for _ in range(n):
        sys.check_cap(len(layer) * sys.lam, "backward branch enumeration")
        layer = [q for x in layer for q in preimages(sys, x)]
    return layer


# -- expansivity ------------------------------------------------------------

def separation_time(sys: ZipShiftSystem, p: ZipPoint, q: ZipPoint) -> SeparationWitness:
    """Least |n| with d(f^n p, f^n q) > 1/2 (forward preferred on ties).

    Forward, the disagreement at index i >= 0 reaches index 0 after exactly i
    shifts.  Backward, after j inverse steps index 0 holds a symbol from the
    fiber over the original Z-symbol at -j; distinct Z-symbols have disjoint
    fibers, so the separation holds for every branch choice.
    """
    r, l = _side_disagreements(p, q)
    if r is None and l is None:
        raise EqualPoints("separation needs distinct points")
    if l is None or (r is not None and r <= l):
        d = distance(sys, iterate(sys, p, r), iterate(sys, q, r))
        return SeparationWitness(r, d, False)
    return SeparationWitness(-l, Fraction(1), True)


def backward_universal_distance(sys: ZipShiftSystem, p: ZipPoint, q: ZipPoint, m: int) -> Fraction:
    """min over all pairs of m-step inverse branches of the distance between them.

    Branch choices can only coincide over equal Z-symbols, so the minimum is
    lambda**-k with k = min{|i + m| : p_i != q_i}.
    """
    _same_tm(p, q)
    if p == q:
        return Fraction(0)
    target = -m
    d = 0
    while True:
        for i in {target - d, target + d}:
            if p.index_at(i) != q.index_at(i):
                return Fraction(1, sys.lam ** d)
        d += 1


def verify_backward_witness(sys: ZipShiftSystem, p: ZipPoint, q: ZipPoint, n: int,
                            threshold: Fraction = HALF) -> bool:
    """Brute force: every pair of |n|-step inverse branches is farther apart than threshold."""
    ps = backward_branches(sys, p, -n)
    qs = backward_branches(sys, q, -n)
    sys.check_cap(len(ps) * len(qs), "branch pair enumeration")
    return all(distance(sys, a, b) > threshold for a in ps for b in qs)


def power_separation(sys: ZipShiftSystem, p: ZipPoint, q: ZipPoint, k: int) -> SeparationWitness:
    """Separation witness for the k-th power of the shift.

    The threshold is lambda**-(k-1) / 2, which reduces to 1/2 at k = 1.  A
    disagreement at index i is brought within k-1 of the origin by the nearest
    multiple of k, so a witness always exists.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if p == q:
        raise EqualPoints("separation needs distinct points")
    _same_tm(p, q)
    gamma = Fraction(1, 2 * sys.lam ** (k - 1))
    fp, fq = p, q
    n = 0
    while True:
        d = distance(sys, fp, fq)
        if d > gamma:
            return SeparationWitness(n, d, False, gamma)
        if n > 0:
            d = backward_universal_distance(sys, p, q, k * n)
            if d > gamma:
                return SeparationWitness(-n, d, True, gamma)
        n += 1
        fp, fq = iterate(sys, fp, k), iterate(sys, fq, k)


# -- periodic points, density, transitivity, mixing -------------------------

def periodic_points(sys: ZipShiftSystem, k: int) -> list[ZipPoint]:
    """All points fixed by shift^k, one per word w in S^k: ``...tau(w)tau(w) . w w...``."""
    if k < 1:
        raise ValueError("k must be positive")
    sys.check_cap(sys.lam ** k, f"periodic points of period {k}")
    tau = sys.tm.assignment
    out = []
    for w in itertools.product(range(sys.lam), repeat=k):
        p = from_indices(sys.tm, tuple(tau[s] for s in w), (), (), w)
        if iterate(sys, p, k) != p:
            raise AssertionError(f"constructed point {p} is not fixed by shift^{k}")
        out.append(p)
    return out


def density_witness(sys: ZipShiftSystem, c: Cylinder, k_max: int) -> tuple[ZipPoint, int]:
    """A periodic point of least period-length k <= k_max inside the cylinder.

    Constraints are folded onto residues mod k; a Z-constraint is lifted to the
    lowest-index symbol of its fiber.
    """
    if c.span > sys.span_cap:
        raise CapExceeded(f"cylinder span {c.span} exceeds {sys.span_cap}")
    cons = c.indices(sys.tm)
    tau = sys.tm.assignment
    for k in range(1, k_max + 1):
        word = _fold_constraints(sys.tm, cons, k)
        if word is None:
            continue
        p = from_indices(sys.tm, tuple(tau[s] for s in word), (), (), word)
        if not in_cylinder(p, c) or iterate(sys, p, k) != p:
            raise AssertionError("density construction produced an invalid point")
        return p, k
    raise CapExceeded(f"no periodic point of period <= {k_max} in {c}")


def _fold_constraints(tm: TransitionMap, cons, k: int) -> tuple[int, ...] | None:
    exact: dict[int, int] = {}
    via_tau: dict[int, int] = {}
    for i, s in cons:
        r = i % k
        if i >= 0:
            if exact.get(r, s) != s:
                return None
            exact[r] = s
        else:
            if via_tau.get(r, s) != s:
                return None
            via_tau[r] = s
    word = []
    for r in range(k):
        if r in exact:
            if r in via_tau and tm.assignment[exact[r]] != via_tau[r]:
                return None
            word.append(exact[r])
        elif r in via_tau:
            word.append(tm.fiber_indices(via_tau[r])[0])
        else:
            word.append(0)
    return tuple(word)


def transitive_word(sys: ZipShiftSystem, max_len: int) -> list[int]:
    """Shortlex concatenation of all S-words of length 1..max_len (as indices)."""
    sys.check_cap(sum(sys.lam ** n * n for n in range(1, max_len + 1)), "transitive word")
    out: list[int] = []
    for n in range(1, max_len + 1):
        for w in itertools.product(range(sys.lam), repeat=n):
            out.extend(w)
    return out


def transitive_window(sys: ZipShiftSystem, depth: int) -> Window:
    """Right-side window whose forward shifts visit every cylinder inside [-depth, depth]."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    word = transitive_word(sys, 2 * depth + 1)
    sa = sys.tm.s_alphabet
    return Window(0, tuple(sa[s] for s in word))


def transitive_point(sys: ZipShiftSystem, depth: int) -> ZipPoint:
    """An eventually periodic point agreeing with the transitive window on its support."""
    word = transitive_word(sys, 2 * depth + 1)
    return from_indices(sys.tm, (0,), (), word, (0,))


def verify_transitive(sys: ZipShiftSystem, depth: int) -> bool:
    """Every full cylinder on [-depth, depth] is entered by some forward shift of the window."""
    w = transitive_window(sys, depth)
    tm = sys.tm
    x = [tm.s_alphabet.index(s) for s in w.symbols]
    tau = tm.assignment
    seen = set()
    for n in range(depth, len(x) - depth):
        seen.add(tuple(tau[x[n + i]] for i in range(-depth, 0)) + tuple(x[n:n + depth + 1]))
    total = tm.n_z ** depth * tm.n_s ** (depth + 1)
    sys.check_cap(total, "full cylinders")
    for left in itertools.product(range(tm.n_z), repeat=depth):
        for right in itertools.product(range(tm.n_s), repeat=depth + 1):
            if left + right not in seen:
                return False
    return True


def full_cylinders(sys: ZipShiftSystem, d: int) -> list[Cylinder]:
    """All cylinders fixing every index of [-d, d]."""
    tm = sys.tm
    sys.check_cap(tm.n_z ** d * tm.n_s ** (d + 1), "full cylinders")
    out = []
    for left in itertools.product(tm.z_alphabet.symbols, repeat=d):
        for right in itertools.product(tm.s_alphabet.symbols, repeat=d + 1):
            out.append(Cylinder(tuple(zip(range(-d, d + 1), left + right))))
    return out


def all_cylinders(sys: ZipShiftSystem, lo: int, hi: int) -> list[Cylinder]:
    """Every cylinder whose constrained indices lie in [lo, hi] (including the whole space)."""
    tm = sys.tm
    choices = []
    for i in range(lo, hi + 1):
        alpha = tm.z_alphabet if i < 0 else tm.s_alphabet
        choices.append([None] + list(alpha.symbols))
    sys.check_cap(math.prod(len(c) for c in choices), "cylinder enumeration")
    out = []
    for combo in itertools.product(*choices):
        out.append(Cylinder(tuple((lo + k, s) for k, s in enumerate(combo) if s is not None)))
    return out


def _mixing_constraints(tm: TransitionMap, u, v, n: int) -> dict[int, tuple[str, int]] | None:
    """Constraints on x for x in U and shift^n(x) in V; None when incompatible."""
    req: dict[int, tuple[str, int]] = {}

    def put(j, kind, s):
        old = req.get(j)
        if old is None:
            req[j] = (kind, s)
            return True
        if old == (kind, s):
            return True
        kinds = {old[0], kind}
        if kinds == {"S", "T"}:
            sv = old[1] if old[0] == "S" else s
            zv = s if kind == "T" else old[1]
            if tm.assignment[sv] == zv:
                req[j] = ("S", sv)
                return True
        return False

    for i, s in u:
        if not put(i, "S" if i >= 0 else "Z", s):
            return None
    for i, s in v:
        j = i + n
        kind = "S" if i >= 0 else ("T" if j >= 0 else "Z")
        if not put(j, kind, s):
            return None
    return req


def mixing_witness(sys: ZipShiftSystem, u: Cylinder, v: Cylinder, n: int) -> ZipPoint | None:
    """A point x in U with shift^n(x) in V, or None when shift^n(U) misses V."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    tm = sys.tm
    req = _mixing_constraints(tm, u.indices(tm), v.indices(tm), n)
    if req is None:
        return None
    hi = max([j for j in req if j >= 0], default=-1)
    lo = min([j for j in req if j < 0], default=0)
    right = [0] * (hi + 1)
    left = [0] * (-lo)
    for j, (kind, s) in req.items():
        if kind == "T":
            s = tm.fiber_indices(s)[0]
        if j >= 0:
            right[j] = s
        else:
            left[-j - 1] = s
    return from_indices(tm, (0,), left[::-1], right, (0,))


def mixing_gap(sys: ZipShiftSystem, d: int, certify: bool = True) -> int:
    """Least N >= 1 with shift^n(U) meeting V for all n >= N and all cylinders U, V in [-d, d].

    Only full cylinders need checking: a sub-cylinder contains a full one.  For
    n > 2d the shifted window of V is disjoint from U's, so the scan stops there.
    """
    cyls = full_cylinders(sys, d)
    sys.check_cap(len(cyls) ** 2, "cylinder pairs")
    tm = sys.tm
    idx = [c.indices(tm) for c in cyls]
    last_fail = 0
    for n in range(1, 2 * d + 2):
        if any(_mixing_constraints(tm, a, b, n) is None for a in idx for b in idx):
            last_fail = n
    gap = last_fail + 1
    if certify:
        certify_mixing(sys, d, gap)
    return gap


def certify_mixing(sys: ZipShiftSystem, d: int, gap: int, extra: int = 1) -> int:
    """Build and check an explicit witness for every (U, V, n) with gap <= n <= 2d+1+extra.

    Returns the number of certified triples; raises AssertionError on any failure.
    """
    cyls = full_cylinders(sys, d)
    count = 0
    for n in range(gap, 2 * d + 2 + extra):
        for u in cyls:
            for v in cyls:
                x = mixing_witness(sys, u, v, n)
                if x is None or not in_cylinder(x, u) or not in_cylinder(iterate(sys, x, n), v):
                    raise AssertionError(f"mixing fails for n={n}, U={u}, V={v}")
                count += 1
    return count


def sensitivity_witness(sys: ZipShiftSystem, p: ZipPoint, depth: int) -> tuple[ZipPoint, int]:
    """q agreeing with p on [-depth, depth] whose orbit is at distance 1 from p's at time depth+1."""
    if sys.lam < 2:
        raise ValueError("a one-symbol zip shift is a single point")
    i = depth + 1
    cur = p.index_at(i)
    q = with_symbols(p, {i: 0 if cur != 0 else 1})
    n = depth + 1
    if distance(sys, iterate(sys, p, n), iterate(sys, q, n)) != 1:
        raise AssertionError("sensitivity construction failed")
    return q, n


# -- products ---------------------------------------------------------------

@dataclass(frozen=True)
class ProductSystem:
    """Two zip shifts side by side, with the max-coordinate metric."""

    first: ZipShiftSystem
    second: ZipShiftSystem
    system: ZipShiftSystem

    def pair(self, p: ZipPoint, q: ZipPoint) -> ZipPoint:
        return product_point(self, p, q)

    def split(self, pq: ZipPoint) -> tuple[ZipPoint, ZipPoint]:
        return split_point(self, pq)


def product_system(sys1: ZipShiftSystem, sys2: ZipShiftSystem) -> ProductSystem:
    tm = alphabet.product_transition(sys1.tm, sys2.tm)
    return ProductSystem(sys1, sys2, ZipShiftSystem(tm, cap=min(sys1.cap, sys2.cap)))


def _zip_tails(at, ap, bt, bp, width):
    n = max(len(at), len(bt))
    period = math.lcm(len(ap), len(bp))
    a = tail_prefix(at, ap, n + period)
    b = tail_prefix(bt, bp, n + period)
    pairs = [x * width + y for x, y in zip(a, b)]
    return pairs[:n], pairs[n:]


def product_point(ps: ProductSystem, p: ZipPoint, q: ZipPoint) -> ZipPoint:
    if p.tm != ps.first.tm or q.tm != ps.second.tm:
        raise AlphabetMismatch("points do not belong to the factor systems")
    rt, rp = _zip_tails(p.right_transient, p.right_period, q.right_transient, q.right_period,
                        ps.second.tm.n_s)
    lt, lp = _zip_tails(p._out_t, p._out_p, q._out_t, q._out_p, ps.second.tm.n_z)
    return from_indices(ps.system.tm, lp[::-1], lt[::-1], rt, rp)


def split_point(ps: ProductSystem, pq: ZipPoint) -> tuple[ZipPoint, ZipPoint]:
    if pq.tm != ps.system.tm:
        raise AlphabetMismatch("point does not belong to the product system")
    ws, wz = ps.second.tm.n_s, ps.second.tm.n_z

    def parts(word, width):
        return [s // width for s in word], [s % width for s in word]

    lp1, lp2 = parts(pq.left_period, wz)
    lt1, lt2 = parts(pq.left_transient, wz)
    rt1, rt2 = parts(pq.right_transient, ws)
    rp1, rp2 = parts(pq.right_period, ws)
    return (from_indices(ps.first.tm, lp1, lt1, rt1, rp1),
            from_indices(ps.second.tm, lp2, lt2, rt2, rp2))


def distance_max(ps: ProductSystem, a: ZipPoint, b: ZipPoint) -> Fraction:
    a1, a2 = split_point(ps, a)
    b1, b2 = split_point(ps, b)
    return max(distance(ps.first, a1, b1), distance(ps.second, a2, b2))


def product_separation(ps: ProductSystem, a: ZipPoint, b: ZipPoint) -> SeparationWitness:
    """The coordinate witness with least |n| (forward preferred on ties)."""
    a1, a2 = split_point(ps, a)
    b1, b2 = split_point(ps, b)
    cands = []
    if a1 != b1:
        cands.append(separation_time(ps.first, a1, b1))
    if a2 != b2:
        cands.append(separation_time(ps.second, a2, b2))
    if not cands:
        raise EqualPoints("separation needs distinct points")
    return min(cands, key=lambda w: (abs(w.time), w.time < 0))


# -- random generation ------------------------------------------------------

def random_point(tm: TransitionMap, rng: random.Random, max_transient: int = 4,
                 max_period: int = 3) -> ZipPoint:
    def word(n_sym, lo, hi):
        return [rng.randrange(n_sym) for _ in range(rng.randint(lo, hi))]

    return from_indices(
        tm,
        word(tm.n_z, 1, max_period),
        word(tm.n_z, 0, max_transient),
        word(tm.n_s, 0, max_transient),
        word(tm.n_s, 1, max_period),
    )


def random_distinct_pair(tm: TransitionMap, rng: random.Random, **kw) -> tuple[ZipPoint, ZipPoint]:
    while True:
        p, q = random_point(tm, rng, **kw), random_point(tm, rng, **kw)
        if p != q:
            return p, q


def iter_words(n_symbols: int, length: int) -> Iterator[tuple[int, ...]]:
    return itertools.product(range(n_symbols), repeat=length)
