"""Coding piecewise-affine full-branch interval maps by zip shifts.

Everything is exact: endpoints, slopes and offsets are Fractions.  The ambient
space is [0, 1); every branch is an affine bijection of an open subinterval
onto (0, 1).

Pipeline::

    principal_domains -> build_dtp -> build_itp -> build_etp -> derive_zip_alphabets

The resulting :class:`CodingScheme` carries S (labels of the extended
partition), Z (labels of the image partition) and tau, and supports
itineraries, the finite-depth factor map and the semiconjugacy check.
"""

from __future__ import annotations

import itertools
import random
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .alphabet import TransitionMap, _z_name, new_transition_map
from .errors import (
    BoundaryHit,
    CapExceeded,
    DiameterTooLarge,
    EmptyIntersection,
    ImageMismatch,
    InvalidMap,
    InvalidPastBranch,
    NotACover,
    NotFullBranch,
)
from .point import Window
from .space import DEFAULT_CAP, _env_cap

ZERO, ONE = Fraction(0), Fraction(1)


def as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction
    lo_closed: bool = False
    hi_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval with lo {self.lo} > hi {self.hi}")

    @classmethod
    def open(cls, lo, hi) -> "RationalInterval":
        return cls(lo, hi, False, False)

    @classmethod
    def closed(cls, lo, hi) -> "RationalInterval":
        return cls(lo, hi, True, True)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_empty(self) -> bool:
        return self.lo == self.hi and not (self.lo_closed and self.hi_closed)

    def contains(self, x) -> bool:
        x = as_fraction(x)
        left = self.lo < x or (self.lo_closed and x == self.lo)
        right = x < self.hi or (self.hi_closed and x == self.hi)
        return left and right

    def contains_interval(self, other: "RationalInterval") -> bool:
        if other.is_empty:
            return True
        left = self.lo < other.lo or (
            self.lo == other.lo and (self.lo_closed or not other.lo_closed))
        right = other.hi < self.hi or (
            self.hi == other.hi and (self.hi_closed or not other.hi_closed))
        return left and right

    def closure(self) -> "RationalInterval":
        return RationalInterval(self.lo, self.hi, True, True)

    def interior(self) -> "RationalInterval":
        return RationalInterval(self.lo, self.hi, False, False)

    def intersect(self, other: "RationalInterval") -> "RationalInterval | None":
        """Intersection, or None when empty."""
        if self.lo > other.lo:
            lo, lo_c = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lo_c = other.lo, other.lo_closed
        else:
            lo, lo_c = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_c = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hi_c = other.hi, other.hi_closed
        else:
            hi, hi_c = self.hi, self.hi_closed and other.hi_closed
        if lo > hi or (lo == hi and not (lo_c and hi_c)):
            return None
        return RationalInterval(lo, hi, lo_c, hi_c)

    def affine(self, slope, offset) -> "RationalInterval":
        """Image under y = slope * x + offset."""
        a, b = slope * self.lo + offset, slope * self.hi + offset
        if slope > 0:
            return RationalInterval(a, b, self.lo_closed, self.hi_closed)
        return RationalInterval(b, a, self.hi_closed, self.lo_closed)

    def distance_to(self, other: "RationalInterval") -> Fraction:
        return max(ZERO, other.lo - self.hi, self.lo - other.hi)

    def to_json(self) -> list[str]:
        return [_frac(self.lo), _frac(self.hi)]

    def __str__(self) -> str:
        return f"{'[' if self.lo_closed else '('}{self.lo}, {self.hi}{']' if self.hi_closed else ')'}"


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s) -> Fraction:
    return Fraction(str(s))


UNIT = RationalInterval.closed(0, 1)


@dataclass(frozen=True)
class Branch:
    domain: RationalInterval
    slope: Fraction
    offset: Fraction

    def __post_init__(self):
        object.__setattr__(self, "slope", as_fraction(self.slope))
        object.__setattr__(self, "offset", as_fraction(self.offset))

    def __call__(self, x) -> Fraction:
        return self.slope * x + self.offset

    def inverse(self, y) -> Fraction:
        return (y - self.offset) / self.slope

    def image(self, cell: RationalInterval | None = None) -> RationalInterval:
        return (cell or self.domain).affine(self.slope, self.offset)

    def preimage(self, target: RationalInterval) -> RationalInterval:
        return target.affine(1 / self.slope, -self.offset / self.slope)


@dataclass(frozen=True)
class PWLMap:
    """Piecewise-affine map of [0, 1) with open branch domains in increasing order."""

    branches: tuple[Branch, ...]

    def __post_init__(self):
        brs = tuple(self.branches)
        if not brs:
            raise InvalidMap("a map needs at least one branch")
        brs = tuple(sorted(brs, key=lambda b: b.domain.lo))
        if brs[0].domain.lo != 0 or brs[-1].domain.hi != 1:
            raise InvalidMap("branch domains must start at 0 and end at 1")
        for a, b in zip(brs, brs[1:]):
            if a.domain.hi != b.domain.lo:
                raise InvalidMap(f"branch domains {a.domain} and {b.domain} are not adjacent")
        for b in brs:
            if b.domain.width <= 0:
                raise InvalidMap("empty branch domain")
            if b.slope == 0:
                raise InvalidMap("a constant branch is not injective")
            if not UNIT.contains_interval(b.image().closure()):
                raise InvalidMap(f"branch on {b.domain} leaves [0, 1]")
        object.__setattr__(self, "branches", brs)

    def __len__(self) -> int:
        return len(self.branches)

    def branch_index(self, x) -> int:
        """Branch used to evaluate x; domains are treated as half-open [lo, hi)."""
        x = as_fraction(x)
        for i, b in enumerate(self.branches):
            if b.domain.lo <= x < b.domain.hi:
                return i
        raise ValueError(f"{x} is outside [0, 1)")

    def __call__(self, x) -> Fraction:
        return self.branches[self.branch_index(x)](as_fraction(x))

    def branch_containing(self, cell: RationalInterval) -> int | None:
        for i, b in enumerate(self.branches):
            if b.domain.closure().contains_interval(cell):
                return i
        return None

    def to_json(self) -> dict:
        return {"branches": [
            {"domain": b.domain.to_json(), "slope": _frac(b.slope), "offset": _frac(b.offset)}
            for b in self.branches
        ]}

    @classmethod
    def from_json(cls, obj: dict) -> "PWLMap":
        return cls(tuple(
            Branch(
                RationalInterval.open(parse_fraction(b["domain"][0]), parse_fraction(b["domain"][1])),
                parse_fraction(b["slope"]),
                parse_fraction(b["offset"]),
            )
            for b in obj["branches"]
        ))


def mod_one_map(k: int) -> PWLMap:
    """x -> k x mod 1."""
    return PWLMap(tuple(
        Branch(RationalInterval.open(Fraction(i, k), Fraction(i + 1, k)), Fraction(k), Fraction(-i))
        for i in range(k)
    ))


def doubling() -> PWLMap:
    return mod_one_map(2)


def tripling() -> PWLMap:
    return mod_one_map(3)


@dataclass(frozen=True)
class IntervalPartition:
    """Open intervals, pairwise disjoint, whose closures cover [0, 1]."""

    cells: tuple[RationalInterval, ...]

    def __post_init__(self):
        cells = tuple(sorted(self.cells, key=lambda c: c.lo))
        if not cells or cells[0].lo != 0 or cells[-1].hi != 1:
            raise ValueError("partition must cover [0, 1]")
        for c in cells:
            if c.lo_closed or c.hi_closed or c.width <= 0:
                raise ValueError(f"partition cells must be nonempty open intervals, got {c}")
        for a, b in zip(cells, cells[1:]):
            if a.hi != b.lo:
                raise ValueError("partition cells must be disjoint with closures covering [0, 1]")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_cuts(cls, cuts: Iterable) -> "IntervalPartition":
        pts = sorted({as_fraction(c) for c in cuts} | {ZERO, ONE})
        if pts[0] < 0 or pts[-1] > 1:
            raise ValueError("cut points must lie in [0, 1]")
        return cls(tuple(RationalInterval.open(a, b) for a, b in zip(pts, pts[1:])))

    @classmethod
    def uniform(cls, n: int) -> "IntervalPartition":
        return cls.from_cuts(Fraction(i, n) for i in range(n + 1))

    @property
    def cuts(self) -> tuple[Fraction, ...]:
        return (self.cells[0].lo,) + tuple(c.hi for c in self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def cell_index(self, x) -> int | None:
        """Index of the open cell containing x; None on a cut point."""
        x = as_fraction(x)
        for i, c in enumerate(self.cells):
            if c.contains(x):
                return i
        return None

    def max_diameter(self) -> Fraction:
        return max(c.width for c in self.cells)

    def refines(self, other: "IntervalPartition") -> bool:
        return all(any(o.contains_interval(c) for o in other.cells) for c in self.cells)

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.cells]


BUILTIN_REFINEMENTS = {
    "whole": lambda: IntervalPartition.uniform(1),
    "halves": lambda: IntervalPartition.uniform(2),
    "thirds": lambda: IntervalPartition.uniform(3),
    "quarters": lambda: IntervalPartition.uniform(4),
}


# -- partition builders -----------------------------------------------------

def principal_domains(f: PWLMap) -> IntervalPartition:
    """The branch domains; each must be mapped onto all of (0, 1)."""
    for b in f.branches:
        img = b.image()
        if img.lo != 0 or img.hi != 1:
            raise NotFullBranch(f"branch on {b.domain} has image {img}, not (0, 1)")
    return IntervalPartition(tuple(b.domain for b in f.branches))


def refine(alpha: IntervalPartition, beta: IntervalPartition) -> IntervalPartition:
    """Common refinement: all nonempty pairwise intersections of cells."""
    return IntervalPartition.from_cuts(alpha.cuts + beta.cuts)


def build_dtp(f: PWLMap, extra: IntervalPartition | None = None) -> IntervalPartition:
    dom = principal_domains(f)
    return dom if extra is None else refine(dom, extra)


def build_itp(f: PWLMap, dtp: IntervalPartition) -> IntervalPartition:
    """Refinement generated by the branch images of the DTP cells."""
    cuts = []
    for cell in dtp.cells:
        i = f.branch_containing(cell)
        if i is None:
            raise ValueError(f"DTP cell {cell} straddles a branch boundary")
        img = f.branches[i].image(cell)
        cuts += [img.lo, img.hi]
    return IntervalPartition.from_cuts(cuts)


def pullback_cuts(f: PWLMap, cuts: Iterable[Fraction]) -> set[Fraction]:
    """Branch endpoints plus every branch preimage of the given cut points."""
    out = set()
    cuts = list(cuts)
    for b in f.branches:
        out.add(b.domain.lo)
        out.add(b.domain.hi)
        for c in cuts:
            out.add(b.inverse(c))
    return out


def build_etp(f: PWLMap, itp: IntervalPartition) -> IntervalPartition:
    """Preimage of the ITP inside each branch domain."""
    principal_domains(f)
    return IntervalPartition.from_cuts(pullback_cuts(f, itp.cuts))


@dataclass(frozen=True)
class CodingScheme:
    map: PWLMap
    dtp: IntervalPartition | None
    itp: IntervalPartition
    etp: IntervalPartition
    tm: TransitionMap
    tau_hat: tuple[int, ...]
    cell_branch: tuple[int, ...]

    @property
    def s_alphabet(self):
        return self.tm.s_alphabet

    @property
    def z_alphabet(self):
        return self.tm.z_alphabet

    def etp_cell(self, s) -> RationalInterval:
        return self.etp.cells[self.tm.s_alphabet.index(s)]

    def itp_cell(self, z) -> RationalInterval:
        return self.itp.cells[self.tm.z_alphabet.index(z)]

    def to_json(self) -> dict:
        return {
            "map": self.map.to_json(),
            "dtp": None if self.dtp is None else self.dtp.to_json(),
            "itp": self.itp.to_json(),
            "etp": self.etp.to_json(),
            "tm": self.tm.to_json(),
        }


def derive_zip_alphabets(f: PWLMap, etp: IntervalPartition, itp: IntervalPartition,
                         dtp: IntervalPartition | None = None) -> CodingScheme:
    """Label ETP cells 0, 1, ... and ITP cells a, b, ...; tau sends a cell to its image cell."""
    tau_hat, branch_of = [], []
    for k, cell in enumerate(etp.cells):
        i = f.branch_containing(cell)
        if i is None:
            raise ImageMismatch(f"ETP cell {cell} is not inside one branch domain")
        img = f.branches[i].image(cell)
        match = [j for j, q in enumerate(itp.cells) if q.lo == img.lo and q.hi == img.hi]
        if not match:
            raise ImageMismatch(f"image {img} of ETP cell {cell} is not an ITP cell")
        tau_hat.append(match[0])
        branch_of.append(i)
    s_names = [str(k) for k in range(len(etp))]
    z_names = [_z_name(j) for j in range(len(itp))]
    tm = new_transition_map(s_names, z_names, [(s_names[k], z_names[j]) for k, j in enumerate(tau_hat)])
    return CodingScheme(f, dtp, itp, etp, tm, tuple(tau_hat), tuple(branch_of))


def build_scheme(f: PWLMap, extra: IntervalPartition | None = None) -> CodingScheme:
    dtp = build_dtp(f, extra)
    itp = build_itp(f, dtp)
    etp = build_etp(f, itp)
    return derive_zip_alphabets(f, etp, itp, dtp)


BUILTIN_MAPS = {"doubling": doubling, "tripling": tripling}
DEFAULT_REFINEMENT = {"doubling": "quarters", "tripling": "thirds"}


def builtin_scheme(name: str, refinement: str | None = None) -> CodingScheme:
    f = BUILTIN_MAPS[name]()
    extra = BUILTIN_REFINEMENTS[refinement or DEFAULT_REFINEMENT[name]]()
    return build_scheme(f, extra)


# -- generators, Lebesgue numbers, Eilenberg decomposition ------------------

# cut points are plain integers, so the join may hold more of them than other enumerations
JOIN_CAP_FACTOR = 4

def forward_image(f: PWLMap, pieces: Sequence[RationalInterval]) -> list[RationalInterval]:
    """f(union of pieces) as sorted open intervals, touching pieces merged.

    Merging drops finitely many isolated points, which changes no diameter.
    """
    out = []
    for piece in pieces:
        for b in f.branches:
            part = piece.intersect(b.domain)
            if part is not None and part.width > 0:
                out.append(b.image(part.interior()))
    out.sort(key=lambda c: c.lo)
    merged: list[RationalInterval] = []
    for c in out:
        if merged and c.lo <= merged[-1].hi:
            last = merged[-1]
            merged[-1] = RationalInterval.open(last.lo, max(last.hi, c.hi))
        else:
            merged.append(c)
    return merged


def _join_numerators(f: PWLMap, partition: IntervalPartition, depth: int,
                     cap: int | None) -> tuple[list[int], int]:
    """Cut points of the preimage join as sorted integers over one denominator.

    A cut c/D pulls back under x -> slope*x + offset to (c - offset*D)/(slope*D);
    every branch's numerator is rescaled onto the common denominator D*L.
    Branch preimages outside the branch domain are dropped.
    """
    cap = JOIN_CAP_FACTOR * _env_cap() if cap is None else cap
    den = 1
    ends = [e for b in f.branches for e in (b.domain.lo, b.domain.hi)]
    for c in list(partition.cuts) + ends:
        den = den * c.denominator // gcd(den, c.denominator)
    base = [c.numerator * (den // c.denominator) for c in partition.cuts]
    cuts = set(base)
    for _ in range(depth):
        lcm = 1
        for b in f.branches:
            m = b.slope.numerator * b.offset.denominator * b.slope.denominator
            lcm = lcm * abs(m) // gcd(lcm, abs(m))
        new_den = den * lcm
        out = {v * lcm for v in base}
        for b in f.branches:
            p, q = b.slope.numerator, b.slope.denominator
            r, s = b.offset.numerator, b.offset.denominator
            # (c/den - r/s) * q/p = (c*s - r*den) * q / (den*s*p)
            scale = new_den // (den * s * p)
            lo = int(b.domain.lo * new_den)
            hi = int(b.domain.hi * new_den)
            rd = r * den
            for c in cuts:
                x = (c * s - rd) * q * scale
                if lo <= x <= hi:
                    out.add(x)
            out.add(lo)
            out.add(hi)
        base = [v * lcm for v in base]
        cuts, den = out, new_den
        if len(cuts) > cap:
            raise CapExceeded(f"join has {len(cuts)} cut points, above cap {cap}")
    return sorted(cuts), den


def join_partition(f: PWLMap, partition: IntervalPartition, depth: int,
                   cap: int | None = None) -> IntervalPartition:
    """The common refinement of f^{-n}(partition) for n = 0..depth (preimages only)."""
    nums, den = _join_numerators(f, partition, depth, cap)
    return IntervalPartition.from_cuts(Fraction(c, den) for c in nums)


def generator_diameter(f: PWLMap, partition: IntervalPartition, depth: int,
                       cap: int | None = None) -> Fraction:
    """Largest cell of the two-sided join of the partition to the given depth.

    Forward images f^n(A), n = 1..depth, are computed as interval unions; for
    full-branch maps their endpoints already are cut points of the preimage
    join, so they refine nothing.  That is checked here and, should it fail
    for a custom map, the extra endpoints are added as cuts.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    nums, den = _join_numerators(f, partition, depth, cap)
    present = set(nums)
    extra = set()
    for cell in partition.cells:
        pieces = [cell]
        for _ in range(depth):
            pieces = forward_image(f, pieces)
            for c in pieces:
                for e in (c.lo, c.hi):
                    v = e * den
                    if v.denominator != 1 or int(v) not in present:
                        extra.add(e)
    if extra:
        cuts = {Fraction(c, den) for c in nums} | extra
        return IntervalPartition.from_cuts(cuts).max_diameter()
    return Fraction(max(b - a for a, b in zip(nums, nums[1:])), den)


def forward_terms_refine_nothing(f: PWLMap, partition: IntervalPartition, depth: int) -> bool:
    cuts = set(join_partition(f, partition, depth).cuts)
    for cell in partition.cells:
        pieces = [cell]
        for _ in range(depth):
            pieces = forward_image(f, pieces)
            if any(c.lo not in cuts or c.hi not in cuts for c in pieces):
                return False
    return True


def _clip(c: RationalInterval) -> RationalInterval:
    lo_c = c.lo < 0 or (c.lo == 0 and c.lo_closed)
    hi_c = c.hi > 1 or (c.hi == 1 and c.hi_closed)
    lo, hi = max(c.lo, ZERO), min(c.hi, ONE)
    if lo > hi:
        return RationalInterval(ONE, ONE) if c.lo >= 1 else RationalInterval(ZERO, ZERO)
    return RationalInterval(lo, hi, lo_c, hi_c)


def lebesgue_number(cover: Sequence[RationalInterval]) -> Fraction:
    """Largest delta such that every subset of [0, 1] of diameter < delta lies in one element.

    Cover elements are open intervals of the line, clipped to [0, 1]; the
    result is capped at 1, the diameter of [0, 1].
    """
    for c in cover:
        if (c.lo_closed and 0 < c.lo <= 1) or (c.hi_closed and 0 <= c.hi < 1):
            raise NotACover(f"{c} is not open in [0, 1]")
    els = [e for e in (_clip(c) for c in cover) if not e.is_empty]
    crit = sorted({ZERO, ONE} | {e.lo for e in els} | {e.hi for e in els})
    probes = crit + [(a + b) / 2 for a, b in zip(crit, crit[1:])]
    for x in probes:
        if not any(e.contains(x) for e in els):
            raise NotACover(f"{x} is not covered")

    def reach(e, x):
        return None if e.hi_closed and e.hi == 1 else e.hi - x

    def best(cands, x):
        vals = [reach(e, x) for e in cands]
        return ONE if None in vals else min(ONE, max(vals))

    delta = ONE
    for c in crit:
        delta = min(delta, best([e for e in els if e.contains(c)], c))
        if c > 0:
            left = [e for e in els if e.lo < c <= e.hi]
            delta = min(delta, best(left, c))
    if delta <= 0:
        raise NotACover("cover has Lebesgue number 0")
    for c in crit:
        for w in (RationalInterval.closed(c, min(ONE, c + delta / 2)),
                  RationalInterval.closed(max(ZERO, c - delta / 2), c)):
            if not any(e.contains_interval(w) for e in els):
                raise AssertionError(f"Lebesgue certificate fails on {w}")
    return delta


@dataclass(frozen=True)
class EilenbergConstants:
    lambda_star: Fraction
    mu: Fraction


EILENBERG_DIAMETER = Fraction(1, 2)


def eilenberg_constants(f: PWLMap, lambda_star=EILENBERG_DIAMETER) -> EilenbergConstants:
    """Separation radius mu valid for every interval D of diameter < lambda_star.

    The gap between two branch preimages of D = [a, b] is affine in (a, b), so
    its infimum over {0 <= a <= b <= 1, b - a <= lambda_star} is attained at a
    vertex of that polygon.
    """
    principal_domains(f)
    ls = as_fraction(lambda_star)
    if not 0 < ls < 1:
        raise ValueError("lambda_star must lie in (0, 1)")
    verts = [(ZERO, ZERO), (ZERO, ls), (ONE - ls, ONE), (ONE, ONE)]
    gap = None
    for bi, bj in itertools.combinations(f.branches, 2):
        for a, b in verts:
            d = RationalInterval.closed(a, b)
            g = bi.preimage(d).distance_to(bj.preimage(d))
            gap = g if gap is None else min(gap, g)
    if gap is None:
        gap = 2 * ONE  # one branch: nothing to separate, use the diameter bound
    return EilenbergConstants(ls, gap / 2)


def decompose_preimage(f: PWLMap, d: RationalInterval,
                       constants: EilenbergConstants | None = None
                       ) -> tuple[list[RationalInterval], EilenbergConstants]:
    """f^{-1}(D) split into one component per branch, each mapped affinely onto D."""
    constants = constants or eilenberg_constants(f)
    if not UNIT.contains_interval(d):
        raise ValueError(f"{d} is not inside [0, 1]")
    if d.width >= constants.lambda_star:
        raise DiameterTooLarge(f"diam {d.width} >= lambda_star {constants.lambda_star}")
    return [b.preimage(d) for b in f.branches], constants


# -- itineraries and the factor map -----------------------------------------

def itinerary(scheme: CodingScheme, x, past: Sequence[int], fwd: int, back: int) -> Window:
    """Symbolic window of x on [-back, fwd-1].

    Index n >= 0 holds the ETP cell of f^n(x).  Index -k holds the ITP cell of
    p_{k-1}, where p_0 = x and p_{j+1} = g_{past[j]}(p_j) follows the inverse
    branches named in ``past`` (so ``back - 1`` choices are used).
    """
    x = as_fraction(x)
    f = scheme.map
    sa, za = scheme.s_alphabet, scheme.z_alphabet
    if not 0 < x < 1:
        raise BoundaryHit(x)
    fwd_syms = []
    y = x
    for n in range(fwd):
        c = scheme.etp.cell_index(y)
        if c is None:
            raise BoundaryHit(y, n)
        fwd_syms.append(sa[c])
        y = f(y)
    need = max(back - 1, 0)
    if len(past) < need:
        raise InvalidPastBranch(f"{back} backward symbols need {need} branch choices, got {len(past)}")
    back_syms = []
    p = x
    for k in range(1, back + 1):
        c = scheme.itp.cell_index(p)
        if c is None:
            raise BoundaryHit(p, -k)
        back_syms.append(za[c])
        if k < back:
            b = past[k - 1]
            if not 0 <= b < len(f):
                raise InvalidPastBranch(f"branch index {b} out of range")
            p = f.branches[b].inverse(p)
    return Window(-back, tuple(reversed(back_syms)) + tuple(fwd_syms))


def shift_window(tm: TransitionMap, w: Window) -> Window:
    """The zip shift applied to a finite window: indices move down by one, index 0 passes tau."""
    syms = list(w.symbols)
    if w.lo <= 0 <= w.hi:
        syms[-w.lo] = tm.tau(syms[-w.lo])
    return Window(w.lo - 1, tuple(syms))


def factor_pi_window(scheme: CodingScheme, w: Window | Sequence[str]) -> RationalInterval:
    """Closure of the set of points whose forward itinerary starts with the word.

    Computed from the last cell backward through the unique branch inverse of
    each cell.  Inadmissible words raise EmptyIntersection.
    """
    word = w.forward() if isinstance(w, Window) else tuple(str(s) for s in w)
    if not word:
        return UNIT
    sa = scheme.s_alphabet
    cells = [sa.index(s) for s in word]
    cur = scheme.etp.cells[cells[-1]]
    for n in range(len(cells) - 2, -1, -1):
        s = cells[n]
        pulled = scheme.map.branches[scheme.cell_branch[s]].preimage(cur)
        cur = pulled.intersect(scheme.etp.cells[s])
        if cur is None or cur.width == 0:
            raise EmptyIntersection(f"word {list(word)} is not admissible at position {n}")
    return cur.closure()


def predicted_diameter(scheme: CodingScheme, word: Sequence[str]) -> Fraction:
    """width(last cell) times the reciprocal slopes of the branches used before it."""
    if not word:
        return ONE
    sa = scheme.s_alphabet
    cells = [sa.index(s) for s in word]
    d = scheme.etp.cells[cells[-1]].width
    for s in cells[:-1]:
        d /= abs(scheme.map.branches[scheme.cell_branch[s]].slope)
    return d


def backward_consistent(scheme: CodingScheme, w: Window, target: RationalInterval,
                        cap: int = DEFAULT_CAP) -> bool:
    """Is there a pre-orbit p_0 in target, p_{k-1} in closure(Q_{w_{-k}}) for every k?"""
    back = w.backward()
    depth = -min(back, default=0)
    if depth == 0:
        return True
    for k in range(1, depth + 1):
        if -k not in back:
            raise ValueError("backward part of the window must be contiguous up to -1")
    f = scheme.map
    if len(f) ** (depth - 1) > cap:
        raise CapExceeded(f"{len(f)}^{depth - 1} branch paths exceed cap {cap}")
    za = scheme.z_alphabet

    def q(k):
        return scheme.itp.cells[za.index(back[-k])].closure()

    start = target.closure().intersect(q(1))
    if start is None:
        return False
    stack = [(start, 1)]
    while stack:
        cur, k = stack.pop()
        if k == depth:
            return True
        for b in f.branches:
            nxt = b.preimage(cur).intersect(q(k + 1))
            if nxt is not None:
                stack.append((nxt, k + 1))
    return False


@dataclass(frozen=True)
class SemiconjugacyReport:
    depth: int
    cylinder: RationalInterval       # pi of the word to depth
    image: RationalInterval          # f applied to it
    shifted: RationalInterval        # pi of the shifted word to depth - 1
    holds: bool
    exact: bool

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "cylinder": self.cylinder.to_json(),
            "image": self.image.to_json(),
            "shifted": self.shifted.to_json(),
            "holds": self.holds,
            "exact": self.exact,
        }


def check_semiconjugacy(scheme: CodingScheme, w: Window | Sequence[str], depth: int) -> SemiconjugacyReport:
    """Interval form of pi o shift = f o pi: f(pi[w_0..w_{d-1}]) contains pi[w_1..w_{d-1}]."""
    word = w.forward() if isinstance(w, Window) else tuple(str(s) for s in w)
    if len(word) < depth:
        raise ValueError(f"word of length {len(word)} is shorter than depth {depth}")
    word = word[:depth]
    a = factor_pi_window(scheme, word)
    if word:
        br = scheme.map.branches[scheme.cell_branch[scheme.s_alphabet.index(word[0])]]
        fa = br.image(a)
    else:
        fa = UNIT
    b = factor_pi_window(scheme, word[1:])
    return SemiconjugacyReport(depth, a, fa, b, fa.contains_interval(b), fa == b)


def random_admissible_word(scheme: CodingScheme, length: int, rng: random.Random) -> tuple[str, ...]:
    """A uniformly chosen continuation at each step among cells the word can still reach.

    ``reach`` is f^n of the set of points whose itinerary starts with the word
    so far; the next symbol must meet it in an interval of positive width.
    """
    sa = scheme.s_alphabet
    reach = UNIT
    out = []
    for _ in range(length):
        options = []
        for t, cell in enumerate(scheme.etp.cells):
            part = reach.intersect(cell)
            if part is not None and part.width > 0:
                options.append((t, part))
        t, part = rng.choice(options)
        out.append(sa[t])
        reach = scheme.map.branches[scheme.cell_branch[t]].image(part)
    return tuple(out)


def random_interval(rng: random.Random, max_width: Fraction, denominator: int = 997) -> RationalInterval:
    """Random open subinterval of (0, 1) with rational endpoints and width < max_width."""
    while True:
        lo = Fraction(rng.randrange(denominator), denominator)
        w = Fraction(rng.randrange(1, denominator), denominator) * max_width
        if 0 < w < max_width and lo + w <= 1:
            return RationalInterval.open(lo, lo + w)
