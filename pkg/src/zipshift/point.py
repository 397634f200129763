"""Points of the zip shift space as eventually periodic bi-infinite words.

A point is stored as four index words::

    ... LP LP LP  LT  .  RT  RP RP RP ...

``left_period`` (LP) and ``left_transient`` (LT) are written left to right as
they appear on the page, so the last symbol of LT sits at index -1.  Index 0 is
the first symbol of RT (or of RP when RT is empty).  Negative indices carry
Z-symbols, nonnegative ones S-symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .alphabet import SymbolSet, TransitionMap
from .errors import AlphabetMismatch, AlphabetViolation, EmptyPeriod, UnknownSymbol

Word = tuple[int, ...]


def primitive_root(word: Sequence[int]) -> Word:
    word = tuple(word)
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def normalize_tail(transient: Sequence[int], period: Sequence[int]) -> tuple[Word, Word]:
    """Shortest (transient, period) describing ``transient + period^inf``.

    Both words are read outward, i.e. in the direction the sequence extends.
    """
    if not period:
        raise EmptyPeriod("period must be nonempty")
    t = list(transient)
    p = primitive_root(period)
    while t and t[-1] == p[-1]:
        t.pop()
        p = p[-1:] + p[:-1]
    return tuple(t), p


def tail_prefix(transient: Word, period: Word, n: int) -> Word:
    """First n symbols of ``transient + period^inf``."""
    if n <= len(transient):
        return transient[:n]
    rest = n - len(transient)
    reps = -(-rest // len(period))
    return transient + (period * reps)[:rest]


def tail_at(transient: Word, period: Word, k: int) -> int:
    if k < len(transient):
        return transient[k]
    return period[(k - len(transient)) % len(period)]


@dataclass(frozen=True)
class Window:
    """Symbols at the consecutive indices lo, lo+1, ..., lo+len-1."""

    lo: int
    symbols: tuple[str, ...]

    @property
    def hi(self) -> int:
        return self.lo + len(self.symbols) - 1

    def __len__(self) -> int:
        return len(self.symbols)

    def at(self, i: int) -> str:
        if not self.lo <= i <= self.hi:
            raise IndexError(f"index {i} outside window [{self.lo}, {self.hi}]")
        return self.symbols[i - self.lo]

    def items(self):
        return [(self.lo + k, s) for k, s in enumerate(self.symbols)]

    def forward(self) -> tuple[str, ...]:
        """Symbols at indices 0..hi (empty when the window lies left of 0)."""
        return tuple(s for i, s in self.items() if i >= 0)

    def backward(self) -> dict[int, str]:
        return {i: s for i, s in self.items() if i < 0}

    def check(self, tm: TransitionMap) -> "Window":
        for i, s in self.items():
            alpha = tm.z_alphabet if i < 0 else tm.s_alphabet
            if s not in alpha:
                raise AlphabetViolation(f"symbol {s!r} not allowed at index {i}")
        return self

    def to_json(self) -> dict:
        return {"lo": self.lo, "symbols": list(self.symbols)}

    @classmethod
    def from_json(cls, obj: dict) -> "Window":
        return cls(int(obj["lo"]), tuple(str(s) for s in obj["symbols"]))


@dataclass(frozen=True)
class ZipPoint:
    """A normal-form point.  Construct through :func:`make_point` or the helpers below.

    Structural equality (``==``) coincides with equality of the underlying
    bi-infinite words because the constructor always normalizes.
    """

    tm: TransitionMap
    left_period: Word
    left_transient: Word
    right_transient: Word
    right_period: Word

    # outward views of the left side: index -1, -2, -3, ...
    @property
    def _out_t(self) -> Word:
        return self.left_transient[::-1]

    @property
    def _out_p(self) -> Word:
        return self.left_period[::-1]

    def index_at(self, i: int) -> int:
        """Symbol index at position i (a Z-index when i < 0)."""
        if i >= 0:
            return tail_at(self.right_transient, self.right_period, i)
        return tail_at(self._out_t, self._out_p, -i - 1)

    def symbol_at(self, i: int) -> str:
        alpha = self.tm.z_alphabet if i < 0 else self.tm.s_alphabet
        return alpha[self.index_at(i)]

    def right_prefix(self, n: int) -> Word:
        return tail_prefix(self.right_transient, self.right_period, n)

    def left_prefix(self, n: int) -> Word:
        """Indices -1, -2, ..., -n."""
        return tail_prefix(self._out_t, self._out_p, n)

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> dict:
        sa, za = self.tm.s_alphabet, self.tm.z_alphabet
        return {
            "left_period": _join(self.left_period, za),
            "left_transient": _join(self.left_transient, za),
            "right_transient": _join(self.right_transient, sa),
            "right_period": _join(self.right_period, sa),
        }


def _join(word: Word, alpha: SymbolSet) -> str:
    sep = "," if alpha.multichar else ""
    return sep.join(alpha[i] for i in word)


def parse_word(word, alpha: SymbolSet) -> Word:
    """Accept a list of symbols, a comma-separated string, or a string of 1-char symbols."""
    if isinstance(word, str):
        if word == "":
            items = []
        elif "," in word or alpha.multichar:
            items = [w.strip() for w in word.split(",")]
        else:
            items = list(word)
    else:
        items = [str(w) for w in word]
    try:
        return tuple(alpha.index(s) for s in items)
    except UnknownSymbol as exc:
        raise AlphabetViolation(str(exc)) from None


def from_indices(tm: TransitionMap, left_period, left_transient, right_transient, right_period) -> ZipPoint:
    """Normalizing constructor on index words (no symbol parsing)."""
    if not left_period or not right_period:
        raise EmptyPeriod("both periods must be nonempty")
    ot, op = normalize_tail(tuple(left_transient)[::-1], tuple(left_period)[::-1])
    rt, rp = normalize_tail(right_transient, right_period)
    return ZipPoint(tm, op[::-1], ot[::-1], rt, rp)


def make_point(tm: TransitionMap, left_period, left_transient, right_transient, right_period) -> ZipPoint:
    """Build the point ``...LP LP LT . RT RP RP...`` in normal form."""
    lp = parse_word(left_period, tm.z_alphabet)
    lt = parse_word(left_transient, tm.z_alphabet)
    rt = parse_word(right_transient, tm.s_alphabet)
    rp = parse_word(right_period, tm.s_alphabet)
    return from_indices(tm, lp, lt, rt, rp)


def project_full_sequence(tm: TransitionMap, s_left_period, s_left_transient,
                          s_right_transient, s_right_period) -> ZipPoint:
    """The point x with x_i = t_i for i >= 0 and x_i = tau(t_i) for i < 0."""
    lp = parse_word(s_left_period, tm.s_alphabet)
    lt = parse_word(s_left_transient, tm.s_alphabet)
    rt = parse_word(s_right_transient, tm.s_alphabet)
    rp = parse_word(s_right_period, tm.s_alphabet)
    tau = tm.assignment
    return from_indices(tm, [tau[s] for s in lp], [tau[s] for s in lt], rt, rp)


def point_from_json(tm: TransitionMap, obj: dict) -> ZipPoint:
    return make_point(tm, obj["left_period"], obj.get("left_transient", ""),
                      obj.get("right_transient", ""), obj["right_period"])


def symbol_at(p: ZipPoint, i: int) -> str:
    return p.symbol_at(i)


def window_of(p: ZipPoint, lo: int, hi: int) -> Window:
    if lo > hi:
        raise ValueError("window needs lo <= hi")
    return Window(lo, tuple(p.symbol_at(i) for i in range(lo, hi + 1)))


def equals(p: ZipPoint, q: ZipPoint) -> bool:
    if p.tm != q.tm:
        raise AlphabetMismatch("points live over different transition maps")
    return p == q


def with_symbols(p: ZipPoint, changes: dict[int, int]) -> ZipPoint:
    """Copy of p with the symbol indices at the given positions replaced."""
    if not changes:
        return p
    hi = max([i for i in changes if i >= 0], default=-1)
    lo = min([i for i in changes if i < 0], default=0)
    right = list(p.right_prefix(max(hi + 1, len(p.right_transient))))
    left = list(p.left_prefix(max(-lo, len(p.left_transient))))
    # the periodic tails restart where the prefixes end
    r_period = _rotate(p.right_period, len(right) - len(p.right_transient))
    l_period = _rotate(p._out_p, len(left) - len(p.left_transient))
    for i, s in changes.items():
        if i >= 0:
            right[i] = s
        else:
            left[-i - 1] = s
    return from_indices(p.tm, l_period[::-1], left[::-1], right, r_period)


def _rotate(period: Word, k: int) -> Word:
    k %= len(period)
    return period[k:] + period[:k]


def render(p: ZipPoint, reps: int = 2) -> str:
    """Human-readable form, e.g. ``...abab b . 1 0 3 1 1 (2)...``."""
    za, sa = p.tm.z_alphabet, p.tm.s_alphabet
    lp = " ".join(za[i] for i in p.left_period)
    lt = " ".join(za[i] for i in p.left_transient)
    rt = " ".join(sa[i] for i in p.right_transient)
    rp = " ".join(sa[i] for i in p.right_period)
    left = f"...({lp})" + (f" {lt}" if lt else "")
    right = (f"{rt} " if rt else "") + f"({rp})..."
    return f"{left} . {right}"
