"""Pseudo-orbits of the zip shift and the splice construction of a tracing orbit."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AlphabetMismatch, DeltaTooLarge, InconsistentSplice, NotPseudoOrbit
from .point import ZipPoint, from_indices, tail_prefix
from .space import ZipShiftSystem, distance, shift


@dataclass(frozen=True)
class PseudoOrbit:
    """Points z^{j0}, ..., z^{j0+L-1} with d(shift(z^j), z^{j+1}) < delta."""

    start_index: int
    points: tuple[ZipPoint, ...]
    delta: Fraction

    def __len__(self) -> int:
        return len(self.points)

    @property
    def end_index(self) -> int:
        return self.start_index + len(self.points) - 1

    def gaps(self, sys: ZipShiftSystem) -> list[Fraction]:
        return [distance(sys, shift(sys, a), b) for a, b in zip(self.points, self.points[1:])]


@dataclass(frozen=True)
class TraceReport:
    tracer: ZipPoint
    max_error: Fraction
    epsilon: Fraction
    per_step_errors: tuple[Fraction, ...]

    @property
    def accepted(self) -> bool:
        return self.max_error < self.epsilon

    def to_json(self) -> dict:
        return {
            "tracer": self.tracer.to_json(),
            "max_error": _frac(self.max_error),
            "epsilon": _frac(self.epsilon),
            "accepted": self.accepted,
            "per_step_errors": [_frac(e) for e in self.per_step_errors],
        }


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def validate_pseudo_orbit(sys: ZipShiftSystem, points: Sequence[ZipPoint], delta,
                          start_index: int = 0) -> PseudoOrbit:
    delta = Fraction(delta)
    pts = tuple(points)
    if len(pts) < 2:
        raise ValueError("a pseudo-orbit needs at least two points")
    for p in pts:
        if p.tm != sys.tm:
            raise AlphabetMismatch("pseudo-orbit point over a different transition map")
    for j, (a, b) in enumerate(zip(pts, pts[1:])):
        gap = distance(sys, shift(sys, a), b)
        if gap >= delta:
            raise NotPseudoOrbit(start_index + j, gap, delta)
    return PseudoOrbit(start_index, pts, delta)


def perturbed_orbit(sys: ZipShiftSystem, p: ZipPoint, length: int, m: int, seed: int,
                    rewrite_prob: float = 0.5, max_word: int = 4) -> PseudoOrbit:
    """A true orbit segment whose far coordinates are independently rewritten.

    Each point keeps the indices -(m+1)..m+2 of the true orbit point; with
    probability ``rewrite_prob`` per side, everything to the left of -(m+1)
    (resp. right of m+2) is replaced by a random eventually periodic tail.
    Consecutive points then agree after shifting on [-(m+1), m+1], so the
    result is a lambda**-(m+1) pseudo-orbit.
    """
    if m < 1 or length < 2:
        raise ValueError("need m >= 1 and length >= 2")
    rng = random.Random(seed)
    tm = sys.tm
    keep_left, keep_right = m + 1, m + 3
    pts = []
    q = p
    for _ in range(length):
        out_t, out_p = q._out_t, q._out_p
        if rng.random() < rewrite_prob:
            out_t = q.left_prefix(keep_left) + tuple(
                rng.randrange(tm.n_z) for _ in range(rng.randint(0, max_word)))
            out_p = tuple(rng.randrange(tm.n_z) for _ in range(rng.randint(1, max_word)))
        rt, rp = q.right_transient, q.right_period
        if rng.random() < rewrite_prob:
            rt = q.right_prefix(keep_right) + tuple(
                rng.randrange(tm.n_s) for _ in range(rng.randint(0, max_word)))
            rp = tuple(rng.randrange(tm.n_s) for _ in range(rng.randint(1, max_word)))
        pts.append(from_indices(tm, out_p[::-1], out_t[::-1], rt, rp))
        q = shift(sys, q)
    return validate_pseudo_orbit(sys, pts, Fraction(1, sys.lam ** (m + 1)))


def _orbit_symbol(x_right: Sequence[int], x_left_out: Sequence[int], tau, n: int, k: int) -> int:
    """(shift^n x)_k for 0 <= n, read off the tracer's coordinate lists.

    ``x_right[i]`` is x_i for i >= 0, ``x_left_out[i]`` is x_{-i-1}.
    """
    j = n + k
    if j < 0:
        return x_left_out[-j - 1]
    if k < 0:
        return tau[x_right[j]]
    return x_right[j]


def trace(sys: ZipShiftSystem, po: PseudoOrbit, m: int) -> TraceReport:
    """Splice the pseudo-orbit into one point x with x_n = z^{j0+n}_0.

    The left tail of x is the left side of the first point and the right tail
    continues with the right side of the last point.  Every overlap
    x_{n+k} = z^{j0+n}_k, |k| <= m, is checked before the report is built.
    """
    lam_m = Fraction(1, sys.lam ** m)
    if po.delta > Fraction(1, sys.lam ** (m + 1)):
        raise DeltaTooLarge(f"delta {po.delta} exceeds lambda^-(m+1) = {lam_m / sys.lam}")
    pts = po.points
    L = len(pts)
    tm = sys.tm
    first, last = pts[0], pts[-1]
    head = [z.index_at(0) for z in pts[:-1]]
    right_transient = tuple(head) + last.right_transient
    tracer = from_indices(tm, first.left_period, first.left_transient, right_transient,
                          last.right_period)

    reach = L + m + 1
    x_right = tail_prefix(tracer.right_transient, tracer.right_period, reach)
    x_left = tracer.left_prefix(m + 1)
    for n, z in enumerate(pts):
        for k in range(-m, m + 1):
            got = _orbit_symbol(x_right, x_left, tm.assignment, n, k)
            if got != z.index_at(k):
                raise InconsistentSplice(
                    f"step {po.start_index + n}, offset {k}: tracer has {got}, "
                    f"pseudo-orbit point has {z.index_at(k)}"
                )
    errors = []
    cur = tracer
    for z in pts:
        errors.append(distance(sys, cur, z))
        cur = shift(sys, cur)
    return TraceReport(tracer, max(errors), lam_m, tuple(errors))


def verify_tracing(sys: ZipShiftSystem, tracer: ZipPoint, po: PseudoOrbit, epsilon) -> TraceReport:
    """Recompute d(shift^j(tracer), z^{j0+j}) from scratch and judge against epsilon."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if tracer.tm != sys.tm:
        raise AlphabetMismatch("tracer over a different transition map")
    errors = []
    cur = tracer
    for z in po.points:
        errors.append(distance(sys, cur, z))
        cur = shift(sys, cur)
    errors = tuple(errors)
    return TraceReport(tracer, max(errors), epsilon, errors)
