import random
from fractions import Fraction as F

import pytest

from zipshift import coding
from zipshift.coding import (
    UNIT,
    Branch,
    IntervalPartition,
    PWLMap,
    RationalInterval,
    backward_consistent,
    build_dtp,
    build_etp,
    build_itp,
    build_scheme,
    builtin_scheme,
    check_semiconjugacy,
    decompose_preimage,
    doubling,
    eilenberg_constants,
    factor_pi_window,
    generator_diameter,
    itinerary,
    join_partition,
    lebesgue_number,
    predicted_diameter,
    principal_domains,
    refine,
    shift_window,
    tripling,
)
from zipshift.errors import (
    BoundaryHit,
    DiameterTooLarge,
    EmptyIntersection,
    InvalidMap,
    InvalidPastBranch,
    NotACover,
    NotFullBranch,
)
from zipshift.oracles import join_cuts_oracle
from zipshift.point import Window

DOUBLING = builtin_scheme("doubling")
TRIPLING = builtin_scheme("tripling")


def cuts(*xs):
    return tuple(F(x) for x in xs)


def test_principal_domains():
    assert principal_domains(doubling()).cuts == cuts(0, "1/2", 1)
    assert principal_domains(tripling()) == IntervalPartition.uniform(3)


def test_not_full_branch():
    half = PWLMap((Branch(RationalInterval.open(0, 1), F(1, 2), 0),))
    with pytest.raises(NotFullBranch):
        principal_domains(half)
    ident = PWLMap((Branch(RationalInterval.open(0, 1), 1, 0),))
    assert len(principal_domains(ident)) == 1


def test_invalid_maps():
    with pytest.raises(InvalidMap):
        PWLMap((Branch(RationalInterval.open(0, F(1, 2)), 2, 0),))
    with pytest.raises(InvalidMap):
        PWLMap((Branch(RationalInterval.open(0, 1), 0, F(1, 2)),))
    with pytest.raises(InvalidMap):
        PWLMap((Branch(RationalInterval.open(0, 1), 2, 0),))


def test_json_round_trip():
    f = tripling()
    assert PWLMap.from_json(f.to_json()) == f
    obj = {"branches": [{"domain": ["0", "1/2"], "slope": "2", "offset": "0"},
                        {"domain": ["1/2", "1"], "slope": "-2", "offset": "2"}]}
    tent = PWLMap.from_json(obj)
    assert tent(F(3, 4)) == F(1, 2)


def test_refine():
    h, t = IntervalPartition.uniform(2), IntervalPartition.uniform(3)
    assert refine(h, h) == h
    j = refine(h, t)
    assert j.cuts == cuts(0, "1/3", "1/2", "2/3", 1)
    assert len(j) <= len(h) + len(t) - 1
    assert j.refines(h) and j.refines(t)


def test_partition_builders_doubling():
    q = IntervalPartition.uniform(4)
    dtp = build_dtp(doubling(), q)
    assert dtp == q
    itp = build_itp(doubling(), dtp)
    assert itp == IntervalPartition.uniform(2)
    etp = build_etp(doubling(), IntervalPartition.uniform(2))
    assert etp == q
    assert build_dtp(doubling(), IntervalPartition.uniform(1)) == principal_domains(doubling())


def test_partition_builders_tripling():
    t = IntervalPartition.uniform(3)
    assert build_dtp(tripling(), t) == t
    assert build_itp(tripling(), t) == IntervalPartition.uniform(1)
    etp = build_etp(tripling(), IntervalPartition.uniform(1))
    assert etp == t and etp.refines(principal_domains(tripling()))


def test_scheme_alphabets():
    tm = DOUBLING.tm
    assert len(tm.s_alphabet) == 4 and len(tm.z_alphabet) == 2
    assert {frozenset(tm.fiber(z)) for z in tm.z_alphabet} == {frozenset("02"), frozenset("13")}
    assert len(TRIPLING.tm.z_alphabet) == 1
    assert TRIPLING.tm.fiber("a") == frozenset("012")


def test_generator_diameters():
    assert generator_diameter(doubling(), DOUBLING.etp, 0) == F(1, 4)
    for n in range(8):
        assert generator_diameter(doubling(), DOUBLING.etp, n) == F(1, 2 ** (n + 2))
        assert generator_diameter(tripling(), TRIPLING.etp, n) == F(1, 3 ** (n + 1))


@pytest.mark.parametrize("name,part", [("doubling", 3), ("tripling", 2), ("doubling", 5)])
def test_join_against_oracle(name, part):
    f = coding.BUILTIN_MAPS[name]()
    p = IntervalPartition.uniform(part)
    for depth in range(5):
        assert list(join_partition(f, p, depth).cuts) == join_cuts_oracle(f, p, depth)


def test_join_of_tent_map_against_oracle():
    obj = {"branches": [{"domain": ["0", "1/2"], "slope": "2", "offset": "0"},
                        {"domain": ["1/2", "1"], "slope": "-2", "offset": "2"}]}
    tent = PWLMap.from_json(obj)
    p = IntervalPartition.from_cuts(cuts(0, "1/5", 1))
    for depth in range(5):
        assert list(join_partition(tent, p, depth).cuts) == join_cuts_oracle(tent, p, depth)


def test_forward_terms_refine_nothing():
    assert coding.forward_terms_refine_nothing(doubling(), DOUBLING.etp, 4)
    assert coding.forward_terms_refine_nothing(tripling(), TRIPLING.etp, 4)


def test_lebesgue_number():
    eps = F(1, 100)
    cover = [RationalInterval.open(-eps, F(2, 3)), RationalInterval.open(F(1, 3), 1 + eps)]
    assert lebesgue_number(cover) == F(1, 3)
    assert lebesgue_number([RationalInterval.open(-1, 2)]) == 1
    with pytest.raises(NotACover):
        lebesgue_number([RationalInterval.open(-1, F(1, 2)), RationalInterval.open(F(1, 2), 2)])


def test_decompose_doubling():
    d = RationalInterval.open(F(1, 4), F(1, 3))
    comps, consts = decompose_preimage(doubling(), d)
    assert comps == [RationalInterval.open(F(1, 8), F(1, 6)), RationalInterval.open(F(5, 8), F(2, 3))]
    assert comps[0].distance_to(comps[1]) == F(11, 24) >= 2 * consts.mu
    assert consts.lambda_star == F(1, 2) and consts.mu == F(1, 8)


def test_decompose_tripling():
    comps, _ = decompose_preimage(tripling(), RationalInterval.open(0, F(1, 10)))
    assert len(comps) == 3 and all(c.width == F(1, 30) for c in comps)


def test_decompose_too_large():
    with pytest.raises(DiameterTooLarge):
        decompose_preimage(doubling(), RationalInterval.open(0, F(3, 4)))


def test_eilenberg_mu_is_attained():
    """mu is the exact infimum: some admissible interval realizes the gap 2 mu."""
    f = doubling()
    c = eilenberg_constants(f)
    d = RationalInterval.closed(F(1, 2), 1)
    gap = f.branches[0].preimage(d).distance_to(f.branches[1].preimage(d))
    assert gap == 2 * c.mu


def test_itinerary_tripling():
    w = itinerary(TRIPLING, F(1, 4), [], 4, 0)
    assert w.forward() == ("0", "2", "0", "2")


def test_itinerary_doubling():
    w = itinerary(DOUBLING, F(1, 3), [], 2, 0)
    assert w.forward() == ("1", "2")


def test_itinerary_boundary():
    with pytest.raises(BoundaryHit):
        itinerary(DOUBLING, F(1, 2), [], 2, 0)
    with pytest.raises(BoundaryHit):
        itinerary(DOUBLING, F(1, 8), [], 4, 0)  # 1/8 -> 1/4 lands on a cut


def test_itinerary_needs_past():
    with pytest.raises(InvalidPastBranch):
        itinerary(DOUBLING, F(1, 3), [], 2, 3)


def test_itinerary_shift_equivariance():
    rng = random.Random(17)
    f = DOUBLING.map
    checked = 0
    while checked < 1000:
        x = F(rng.randrange(1, 10 ** 6), 10 ** 6 + 1)
        past = [rng.randrange(2) for _ in range(4)]
        try:
            w = itinerary(DOUBLING, x, past, 6, 5)
            b = f.branch_index(x)
            v = itinerary(DOUBLING, f(x), [b] + past, 5, 6)
        except BoundaryHit:
            continue
        s = shift_window(DOUBLING.tm, w)
        assert s.lo == v.lo and s.symbols == v.symbols
        checked += 1


def test_factor_pi_window():
    a = factor_pi_window(DOUBLING, ["0", "1"])
    assert a.width == F(1, 8) and RationalInterval.closed(0, F(1, 4)).contains_interval(a)
    with pytest.raises(EmptyIntersection):
        factor_pi_window(DOUBLING, ["0", "2"])
    t = factor_pi_window(TRIPLING, ["0", "2"] * 4)
    assert t.width == F(1, 3 ** 8) and t.contains(F(1, 4))
    assert factor_pi_window(DOUBLING, []) == UNIT


def test_factor_pi_matches_itinerary():
    rng = random.Random(23)
    for _ in range(200):
        x = F(rng.randrange(1, 9973), 9973)
        try:
            w = itinerary(DOUBLING, x, [], 8, 0)
        except BoundaryHit:
            continue
        a = factor_pi_window(DOUBLING, w)
        assert a.contains(x)
        assert a.width == predicted_diameter(DOUBLING, w.forward())


def test_backward_consistent():
    target = factor_pi_window(DOUBLING, ["0"])
    assert backward_consistent(DOUBLING, Window(-1, ("a", "0")), target)
    assert backward_consistent(DOUBLING, Window(0, ("0",)), target)
    assert not backward_consistent(DOUBLING, Window(-1, ("b", "0")), target)
    for back in range(1, 6):
        syms = tuple("ab"[k % 2] for k in range(back))[::-1] + ("0",)
        assert backward_consistent(DOUBLING, Window(-back, syms), target)


def test_backward_consistent_matches_itinerary():
    rng = random.Random(29)
    for _ in range(100):
        x = F(rng.randrange(1, 9973), 9973)
        past = [rng.randrange(2) for _ in range(3)]
        try:
            w = itinerary(DOUBLING, x, past, 5, 4)
        except BoundaryHit:
            continue
        assert backward_consistent(DOUBLING, w, factor_pi_window(DOUBLING, w))


def test_semiconjugacy_tripling():
    rep = check_semiconjugacy(TRIPLING, ["0", "2"] * 4, 8)
    assert rep.holds and rep.cylinder.contains(F(1, 4)) and rep.shifted.contains(F(3, 4))


def test_semiconjugacy_empty():
    assert check_semiconjugacy(DOUBLING, [], 0).holds


def test_semiconjugacy_sweep():
    rng = random.Random(31)
    for _ in range(200):
        word = coding.random_admissible_word(DOUBLING, 10, rng)
        assert check_semiconjugacy(DOUBLING, word, 10).holds


def test_custom_refinement():
    scheme = build_scheme(doubling(), IntervalPartition.uniform(8))
    assert len(scheme.tm.s_alphabet) == 8 and len(scheme.tm.z_alphabet) == 4


def test_random_words_admissible_when_etp_does_not_refine_itp():
    obj = {"branches": [{"domain": ["0", "1/2"], "slope": "2", "offset": "0"},
                        {"domain": ["1/2", "1"], "slope": "-2", "offset": "2"}]}
    scheme = build_scheme(PWLMap.from_json(obj), IntervalPartition.from_cuts(cuts(0, "1/5", 1)))
    assert not scheme.etp.refines(scheme.itp)
    rng = random.Random(37)
    for _ in range(200):
        word = coding.random_admissible_word(scheme, 8, rng)
        assert factor_pi_window(scheme, word).width > 0
        assert check_semiconjugacy(scheme, word, 8).holds
