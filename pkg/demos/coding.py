"""Code the doubling and tripling maps by zip shifts and watch the factor map commute.

Run with ``python demos/coding.py``.
"""

import random
from fractions import Fraction

from zipshift import coding

for name in ("doubling", "tripling"):
    scheme = coding.builtin_scheme(name)
    tm = scheme.tm
    print(f"{name}: S={list(tm.s_alphabet)}, Z={list(tm.z_alphabet)}, "
          f"tau={ {s: tm.tau(s) for s in tm.s_alphabet} }")
    diams = [coding.generator_diameter(scheme.map, scheme.etp, n) for n in range(8)]
    print("  join diameters:", [str(d) for d in diams])

scheme = coding.builtin_scheme("tripling")
w = coding.itinerary(scheme, Fraction(1, 4), [], 8, 0)
print("itinerary of 1/4 under tripling:", w.forward())
print("pi of that word:", coding.factor_pi_window(scheme, w))

rng = random.Random(1)
scheme = coding.builtin_scheme("doubling")
word = coding.random_admissible_word(scheme, 10, rng)
rep = coding.check_semiconjugacy(scheme, word, 10)
print("word", "".join(word), ": f(pi[w]) =", rep.image, "contains pi[shift w] =", rep.shifted, "->", rep.holds)

comps, consts = coding.decompose_preimage(scheme.map, coding.RationalInterval.open(Fraction(1, 4), Fraction(1, 3)))
print("preimage of (1/4, 1/3):", [str(c) for c in comps], "mu =", consts.mu)
