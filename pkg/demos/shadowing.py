"""Trace a perturbed orbit by splicing the centre symbols of the pseudo-orbit.

Run with ``python demos/shadowing.py``.
"""

import random
from fractions import Fraction

from zipshift import builtin_system, perturbed_orbit, trace, verify_tracing, window_of
from zipshift.space import random_point

sys = builtin_system(4)
rng = random.Random(7)
p = random_point(sys.tm, rng)

for m in range(1, 6):
    po = perturbed_orbit(sys, p, 100, m, seed=m)
    gaps = po.gaps(sys)
    rep = trace(sys, po, m)
    check = verify_tracing(sys, rep.tracer, po, Fraction(1, sys.lam ** m))
    print(f"m={m}: delta={po.delta}, largest gap={max(gaps)}, "
          f"max tracing error={check.max_error} < {check.epsilon}: {check.accepted}")

print("tracer for m=5 on [-4, 8]:", " ".join(window_of(rep.tracer, -4, 8).symbols))
