"""A first look at a zip shift: points, the shift, its inverse branches and the metric.

Run with ``python demos/basics.py``.
"""

from zipshift import builtin_system, distance, first_disagreement, make_point, preimages, shift, window_of

# Four S-symbols fold onto two Z-symbols: 0, 2 -> a and 1, 3 -> b.
sys = builtin_system("example1")
tm = sys.tm
print("tau:", {s: tm.tau(s) for s in tm.s_alphabet})

# Eventually periodic points are given by four words: the left period and
# transient (Z-symbols, read as displayed) and the right transient and period.
p = make_point(tm, "ab", "b", "103112", "2")
print("p         =", p)
print("window    =", window_of(p, -5, 6).symbols)

# Shifting moves every symbol one step left; the symbol leaving index 0
# passes through tau on its way into the negative half.
q = shift(sys, p)
print("shift(p)  =", q)

# The shift is not invertible: each point has one preimage per element of
# the fiber over its symbol at index -1.
for r in preimages(sys, q):
    print("preimage  =", r, "| maps back:", shift(sys, r) == q)

# Distance is lambda^-M, where M is the nearest index at which two points differ.
print("M(p, shift(p)) =", first_disagreement(sys, p, q), " d =", distance(sys, p, q))
