"""Finite symbol sets and the surjective transition map tau: S -> Z."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DuplicateSymbol, NotSurjective, NotTotal, UnknownSymbol

PAIR_SEP = "|"


@dataclass(frozen=True)
class SymbolSet:
    """An ordered set of symbol names; position in ``symbols`` is the canonical index."""

    symbols: tuple[str, ...]

    def __post_init__(self):
        syms = tuple(str(s) for s in self.symbols)
        if not syms:
            raise ValueError("a symbol set must be nonempty")
        seen = set()
        for s in syms:
            if s in seen:
                raise DuplicateSymbol(f"duplicate symbol {s!r}")
            seen.add(s)
        object.__setattr__(self, "symbols", syms)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, sym) -> bool:
        return str(sym) in self._positions

    @property
    def _positions(self) -> dict[str, int]:
        # cached lazily; dataclass is frozen so bypass __setattr__
        try:
            return self.__dict__["_pos"]
        except KeyError:
            pos = {s: i for i, s in enumerate(self.symbols)}
            object.__setattr__(self, "_pos", pos)
            return pos

    def index(self, sym) -> int:
        try:
            return self._positions[str(sym)]
        except KeyError:
            raise UnknownSymbol(f"symbol {sym!r} not in {list(self.symbols)}") from None

    def __getitem__(self, i: int) -> str:
        return self.symbols[i]

    @property
    def multichar(self) -> bool:
        return any(len(s) != 1 for s in self.symbols)


@dataclass(frozen=True)
class TransitionMap:
    """The pair of alphabets and a surjection tau from S onto Z.

    ``assignment[i]`` is the Z-index of the image of the S-symbol with index i.
    """

    s_alphabet: SymbolSet
    z_alphabet: SymbolSet
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != len(self.s_alphabet):
            raise NotTotal("assignment length differs from #S")
        hit = set(self.assignment)
        if not all(0 <= z < len(self.z_alphabet) for z in hit):
            raise UnknownSymbol("assignment refers to a Z-index out of range")
        missing = [self.z_alphabet[z] for z in range(len(self.z_alphabet)) if z not in hit]
        if missing:
            raise NotSurjective(f"Z-symbols with empty fiber: {missing}")

    @property
    def n_s(self) -> int:
        return len(self.s_alphabet)

    @property
    def n_z(self) -> int:
        return len(self.z_alphabet)

    def tau(self, s) -> str:
        return self.z_alphabet[self.assignment[self.s_alphabet.index(s)]]

    def tau_index(self, s_index: int) -> int:
        return self.assignment[s_index]

    def fiber_indices(self, z_index: int) -> tuple[int, ...]:
        try:
            return self.__dict__["_fibers"][z_index]
        except KeyError:
            fibers = [[] for _ in range(self.n_z)]
            for s, z in enumerate(self.assignment):
                fibers[z].append(s)
            object.__setattr__(self, "_fibers", tuple(tuple(f) for f in fibers))
            return self.__dict__["_fibers"][z_index]

    def fiber(self, z) -> frozenset[str]:
        return fiber(self, z)

    def to_json(self) -> dict:
        return {
            "s": list(self.s_alphabet.symbols),
            "z": list(self.z_alphabet.symbols),
            "tau": {s: self.z_alphabet[z] for s, z in zip(self.s_alphabet, self.assignment)},
        }

    @classmethod
    def from_json(cls, obj: dict) -> "TransitionMap":
        return new_transition_map(obj["s"], obj["z"], list(obj["tau"].items()))


def new_transition_map(s_symbols: Iterable, z_symbols: Iterable, pairs: Iterable) -> TransitionMap:
    """Build and validate tau from explicit (S-symbol, Z-symbol) pairs."""
    s_set = SymbolSet(tuple(s_symbols))
    z_set = SymbolSet(tuple(z_symbols))
    assignment: dict[int, int] = {}
    for s, z in pairs:
        si = s_set.index(s)
        zi = z_set.index(z)
        if si in assignment:
            raise DuplicateSymbol(f"S-symbol {s!r} assigned twice")
        assignment[si] = zi
    unassigned = [s_set[i] for i in range(len(s_set)) if i not in assignment]
    if unassigned:
        raise NotTotal(f"S-symbols without image: {unassigned}")
    return TransitionMap(s_set, z_set, tuple(assignment[i] for i in range(len(s_set))))


def fiber(tm: TransitionMap, z) -> frozenset[str]:
    """tau^{-1}(z) as a set of S-symbol names."""
    zi = tm.z_alphabet.index(z)
    return frozenset(tm.s_alphabet[s] for s in tm.fiber_indices(zi))


def pair_symbol(a: str, b: str) -> str:
    return f"{a}{PAIR_SEP}{b}"


def split_pair_symbol(sym: str, left: SymbolSet) -> tuple[str, str]:
    # leftmost split that names a left-factor symbol; symbols may themselves contain "|"
    parts = sym.split(PAIR_SEP)
    for k in range(1, len(parts)):
        a = PAIR_SEP.join(parts[:k])
        if a in left:
            return a, PAIR_SEP.join(parts[k:])
    raise UnknownSymbol(f"{sym!r} is not a pair symbol over {list(left.symbols)}")


def product_transition(tm1: TransitionMap, tm2: TransitionMap) -> TransitionMap:
    """tau1 x tau2 on S1 x S2, with pair symbols "s1|s2" in row-major index order."""
    s = tuple(pair_symbol(a, b) for a in tm1.s_alphabet for b in tm2.s_alphabet)
    z = tuple(pair_symbol(a, b) for a in tm1.z_alphabet for b in tm2.z_alphabet)
    n2 = tm2.n_z
    assignment = tuple(
        tm1.assignment[i] * n2 + tm2.assignment[j]
        for i in range(tm1.n_s)
        for j in range(tm2.n_s)
    )
    return TransitionMap(SymbolSet(s), SymbolSet(z), assignment)


def relabel(tm: TransitionMap, s_names: Iterable, z_names: Iterable) -> TransitionMap:
    """Rename symbols positionally; the result is isomorphic to ``tm``."""
    return TransitionMap(SymbolSet(tuple(s_names)), SymbolSet(tuple(z_names)), tm.assignment)


def canonical_form(tm: TransitionMap) -> tuple[int, ...]:
    """A relabeling-invariant fingerprint: sorted fiber sizes.

    Two maps with equal canonical form are isomorphic as surjections of finite sets.
    """
    return tuple(sorted(len(tm.fiber_indices(z)) for z in range(tm.n_z)))


# The two transition maps worked out by hand in the literature on zip shifts.

def example1() -> TransitionMap:
    """S = {0,1,2,3}, Z = {a,b}, tau(0)=tau(2)=a, tau(1)=tau(3)=b."""
    return new_transition_map("0123", "ab", [("0", "a"), ("1", "b"), ("2", "a"), ("3", "b")])


def example2() -> TransitionMap:
    """S = {0,1,2}, Z = {a}; the coding of x -> 3x mod 1."""
    return new_transition_map("012", "a", [("0", "a"), ("1", "a"), ("2", "a")])


def full_shift(n: int) -> TransitionMap:
    """n symbols with tau a bijection, i.e. the ordinary two-sided full shift."""
    s = [str(i) for i in range(n)]
    z = [_z_name(i) for i in range(n)]
    return new_transition_map(s, z, zip(s, z))


def cyclic(n_s: int, n_z: int) -> TransitionMap:
    """tau(i) = i mod n_z."""
    s = [str(i) for i in range(n_s)]
    z = [_z_name(i) for i in range(n_z)]
    return new_transition_map(s, z, [(s[i], z[i % n_z]) for i in range(n_s)])


def _z_name(i: int) -> str:
    return chr(ord("a") + i) if i < 26 else f"q{i}"
