import pytest

from zipshift.alphabet import (
    SymbolSet,
    TransitionMap,
    canonical_form,
    cyclic,
    example1,
    example2,
    fiber,
    full_shift,
    new_transition_map,
    product_transition,
    relabel,
    split_pair_symbol,
)
from zipshift.errors import DuplicateSymbol, NotSurjective, NotTotal, UnknownSymbol


def test_example1_map():
    tm = new_transition_map("0123", "ab", [("0", "a"), ("1", "b"), ("2", "a"), ("3", "b")])
    assert tm == example1()
    assert tm.tau("2") == "a" and tm.tau("3") == "b"


def test_example2_map():
    tm = example2()
    assert len(tm.s_alphabet) == 3 and len(tm.z_alphabet) == 1
    assert {tm.tau(s) for s in "012"} == {"a"}


def test_not_surjective():
    with pytest.raises(NotSurjective):
        new_transition_map("01", "ab", [("0", "a"), ("1", "a")])


def test_not_total():
    with pytest.raises(NotTotal):
        new_transition_map("012", "a", [("0", "a"), ("1", "a")])


def test_duplicate_symbol():
    with pytest.raises(DuplicateSymbol):
        SymbolSet(("0", "0"))


def test_unknown_symbol():
    with pytest.raises(UnknownSymbol):
        example1().tau("7")


def test_fibers():
    assert fiber(example1(), "a") == frozenset("02")
    assert fiber(example2(), "a") == frozenset("012")


@pytest.mark.parametrize("tm", [example1(), example2(), full_shift(3), cyclic(6, 3)])
def test_fibers_partition_s(tm):
    fibers = [tm.fiber(z) for z in tm.z_alphabet]
    assert set().union(*fibers) == set(tm.s_alphabet)
    assert sum(len(f) for f in fibers) == len(tm.s_alphabet)


def test_product_of_example2_with_itself():
    tm = product_transition(example2(), example2())
    assert len(tm.s_alphabet) == 9 and len(tm.z_alphabet) == 1


def test_product_example1_example2():
    tm = product_transition(example1(), example2())
    assert len(tm.s_alphabet) == 12 and len(tm.z_alphabet) == 2
    za = tm.z_alphabet[0]
    assert split_pair_symbol(za, example1().z_alphabet) == ("a", "a")
    pairs = {split_pair_symbol(s, example1().s_alphabet) for s in tm.fiber(za)}
    assert pairs == {(a, b) for a in "02" for b in "012"}


def test_product_fiber_sizes_multiply():
    t1, t2 = example1(), cyclic(3, 2)
    tm = product_transition(t1, t2)
    for z in tm.z_alphabet:
        z1, z2 = split_pair_symbol(z, t1.z_alphabet)
        assert len(tm.fiber(z)) == len(t1.fiber(z1)) * len(t2.fiber(z2))


def test_relabel_keeps_canonical_form():
    tm = relabel(example1(), "wxyz", "pq")
    assert canonical_form(tm) == canonical_form(example1())
    assert tm.fiber("p") == frozenset("wy")


def test_json_round_trip():
    tm = cyclic(6, 3)
    assert TransitionMap.from_json(tm.to_json()) == tm
