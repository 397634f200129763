"""The brute-force oracles agree with the library and with hand counts."""

import pytest

from zipshift import suite
from zipshift.alphabet import cyclic, example1, example2, new_transition_map
from zipshift.oracles import periodic_count_oracle, periodic_words_oracle
from zipshift.space import ZipShiftSystem, builtin_system, iterate, periodic_points


def test_oracle_hand_counts():
    assert periodic_count_oracle(example2(), 1) == 3
    assert periodic_count_oracle(example1(), 2) == 16


@pytest.mark.parametrize("tm", [
    cyclic(6, 3),
    new_transition_map("012", "ab", [("0", "a"), ("1", "a"), ("2", "b")]),
])
def test_oracle_matches_library_uneven_fibers(tm):
    sys = ZipShiftSystem(tm)
    for k in range(1, 4):
        pts = periodic_points(sys, k)
        assert all(iterate(sys, p, k) == p for p in pts)
        assert {tuple(p.index_at(i) for i in range(-k, k)) for p in pts} == \
            {a + b for a, b in periodic_words_oracle(tm, k)}


@pytest.mark.parametrize("battery", suite.BATTERIES)
def test_batteries_pass(battery):
    checks = suite.run(battery, lam=3, trials=20, seed=2, m=2, k=3, length=30, depth=1)
    assert checks and all(c.passed for c in checks), [c for c in checks if not c.passed][:3]


def test_density_battery_radius2():
    assert all(c.passed for c in suite.density(builtin_system("example1"), 2))
