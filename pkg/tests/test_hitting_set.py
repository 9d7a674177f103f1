import random
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ktkernel.graph import Graph, enumerate_t_cliques
from ktkernel.hitting_set import (
    HittingSetInstance,
    SetFamily,
    Sunflower,
    brute_force_hitting_set,
    find_sunflower,
    is_hitting_set,
    sunflower_threshold,
)
from oracles import hits, min_hitting_set_size, pairs, subsets_upto


def random_family(rng, size, d, universe):
    pool = [s for r in range(1, d + 1) for s in combinations(range(universe), r)]
    return rng.sample(pool, size)


def universe_for(size, d):
    m = d
    while sum(comb(m, r) for r in range(1, d + 1)) < 2 * size:
        m += 1
    return m


def test_disjoint_singletons():
    sf = find_sunflower([(1,), (2,), (3,)], d=1, p=3)
    assert sf == Sunflower(((1,), (2,), (3,)), ())


def test_common_core():
    sf = find_sunflower([(0, 1), (0, 2), (0, 3)], d=2, p=3)
    assert sf.core == (0,)
    assert sorted(sf.petals) == [(0, 1), (0, 2), (0, 3)]
    assert sf.is_valid()


def test_fifty_pairs_over_twelve():
    rng = random.Random(50)
    family = rng.sample(list(combinations(range(12), 2)), 50)
    assert sunflower_threshold(2, 3) == 16
    sf = find_sunflower(family, d=2, p=3)
    assert sf is not None and len(sf.petals) == 3 and sf.is_valid()
    assert all(p in family for p in sf.petals)


def test_threshold_values():
    assert sunflower_threshold(1, 3) == 4
    assert sunflower_threshold(3, 4) == 2 * 6 * 27


def test_empty_set_rejected():
    with pytest.raises(ValueError):
        find_sunflower([(), (1,)], d=1, p=2)


def test_oversized_and_duplicate_rejected():
    with pytest.raises(ValueError):
        find_sunflower([(1, 2, 3)], d=2, p=1)
    with pytest.raises(ValueError):
        find_sunflower([(1, 2), (2, 1)], d=2, p=2)


def test_none_below_threshold_when_absent():
    # a chain has no two-petal sunflower
    assert find_sunflower([(1,), (1, 2), (1, 2, 3)], d=3, p=2) is None


def test_single_petal():
    sf = find_sunflower([(4, 5), (1, 2)], d=2, p=1)
    assert sf.petals == ((1, 2),) and sf.is_valid()


def test_sunflower_validity_checker():
    assert not Sunflower(((1, 2), (1, 3), (2, 3)), (1,)).is_valid()
    assert not Sunflower(((1,), (1, 2)), (1,)).is_valid()
    assert Sunflower(((1, 2), (1, 3), (1, 4)), (1,)).is_valid()


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("p", [2, 3, 4])
def test_lemma_bound_guarantees_sunflower(d, p):
    size = sunflower_threshold(d, p) + 1
    m = universe_for(size, d)
    rng = random.Random(1000 * d + p)
    for _ in range(25):
        family = random_family(rng, size, d, m)
        sf = find_sunflower(family, d, p)
        assert sf is not None and len(sf.petals) == p and sf.is_valid()


@settings(max_examples=200)
@given(st.lists(st.frozensets(st.integers(0, 6), min_size=1, max_size=3), unique=True, max_size=30),
       st.integers(1, 5))
def test_returned_sunflowers_always_valid(family, p):
    family = [tuple(sorted(s)) for s in family]
    sf = find_sunflower(family, 3, p)
    if sf is not None:
        assert len(sf.petals) == p and sf.is_valid()
        assert set(sf.petals) <= set(family)


def test_family_is_canonical_set():
    f = SetFamily(((2, 1, 0), (0, 1, 2), (0, 3)))
    assert f.members == ((0, 1, 2), (0, 3))
    with pytest.raises(ValueError):
        SetFamily(((1,),))


def test_hit_single_triangle():
    inst = HittingSetInstance(SetFamily(((0, 1, 2),)), 1)
    s = brute_force_hitting_set(inst)
    assert s is not None and len(s) == 1 and s[0] in pairs((0, 1, 2))


def test_k4_triangles_need_two():
    members = enumerate_t_cliques(Graph.complete(4), 3)
    # frozen from the subset-enumeration oracle
    assert min_hitting_set_size(members, 6) == 2
    family = SetFamily(tuple(members))
    assert brute_force_hitting_set(HittingSetInstance(family, 1)) is None
    s = brute_force_hitting_set(HittingSetInstance(family, 2))
    assert s is not None and is_hitting_set(s, family)


def test_budget_zero():
    assert brute_force_hitting_set(HittingSetInstance(SetFamily(), 0)) == ()
    assert brute_force_hitting_set(HittingSetInstance(SetFamily(((0, 1),)), 0)) is None


def test_negative_budget():
    with pytest.raises(ValueError):
        HittingSetInstance(SetFamily(), -1)


def test_is_hitting_set_trivial():
    assert is_hitting_set((), SetFamily())
    assert not is_hitting_set((), SetFamily(((0, 1),)))


@st.composite
def families(draw):
    members = draw(st.lists(st.frozensets(st.integers(0, 5), min_size=2, max_size=4), max_size=6))
    return SetFamily(tuple(tuple(sorted(x)) for x in members))


@given(families(), st.sets(st.tuples(st.integers(0, 5), st.integers(0, 5)).filter(lambda e: e[0] < e[1])))
def test_is_hitting_set_matches_definition(family, s):
    assert is_hitting_set(s, family) == hits(s, family.members)


def test_branching_agrees_with_subset_enumeration():
    rng = random.Random(12)
    checked = 0
    while checked < 150:
        members = [tuple(sorted(rng.sample(range(6), rng.randint(2, 3)))) for _ in range(rng.randint(0, 6))]
        family = SetFamily(tuple(members))
        if len(family.universe()) > 12:
            continue
        for k in range(4):
            exhaustive = any(hits(s, family.members) for s in subsets_upto(family.universe(), k))
            found = brute_force_hitting_set(HittingSetInstance(family, k))
            assert (found is not None) == exhaustive
            if found is not None:
                assert len(found) <= k and is_hitting_set(found, family)
        checked += 1
