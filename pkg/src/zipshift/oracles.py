"""Brute-force cross-checks that do not go through the point/space machinery."""

from __future__ import annotations

import itertools

from .alphabet import TransitionMap


def periodic_words_oracle(tm: TransitionMap, k: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All (left block, right block) pairs whose two-sided k-periodic word is shift^k-fixed.

    Candidates are x_i = left[i mod k] for i < 0 and x_i = right[i mod k] for
    i >= 0, over every left block in Z^k and right block in S^k.  Fixedness is
    tested symbol by symbol on [-2k, 2k) with the closed form

        (shift^k x)_i = tau(x_{i+k})  if -k <= i < 0,   x_{i+k}  otherwise.
    """
    tau = tm.assignment
    found = []
    lefts = list(itertools.product(range(tm.n_z), repeat=k))
    for right in itertools.product(range(tm.n_s), repeat=k):
        for left in lefts:

            def x(i):
                return left[i % k] if i < 0 else right[i % k]

            ok = True
            for i in range(-2 * k, 2 * k):
                j = i + k
                want = tau[x(j)] if -k <= i < 0 else x(j)
                if x(i) != want:
                    ok = False
                    break
            if ok:
                found.append((left, right))
    return found


def periodic_count_oracle(tm: TransitionMap, k: int) -> int:
    return len(periodic_words_oracle(tm, k))


def join_cuts_oracle(f, partition, depth: int) -> list:
    """Preimage join cut points by direct Fraction arithmetic, for small depths.

    A cut y pulls back under the branch x -> slope*x + offset to
    (y - offset) / slope whenever that lands in the branch's closed domain.
    """
    base = set(partition.cuts)
    cuts = set(base)
    for _ in range(depth):
        nxt = set(base)
        for b in f.branches:
            nxt |= {b.domain.lo, b.domain.hi}
            for y in cuts:
                x = (y - b.offset) / b.slope
                if b.domain.lo <= x <= b.domain.hi:
                    nxt.add(x)
        cuts = nxt
    return sorted(cuts)
