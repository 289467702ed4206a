import itertools
from math import factorial, prod
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from goodsym.partition import (BoxChain, Comparison, Partition, check_chain, contains,
                               containment_interval, dominance_compare, dominates, generate_chain,
                               partitions_of, sm_orbit, sort_decreasing, subchain)

from conftest import S310I_CHAIN


def test_partition_validation():
    assert Partition([3, 1, 0]) == (3, 1, 0)
    assert Partition([3, 1, 0]).size == 4
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([1, -1])


@pytest.mark.parametrize("beta, alpha, expected", [
    ((3, 2, 0), (3, 1, 1), True),
    ((3, 1, 0), (3, 1, 0), True),
    ((2, 2, 0), (3, 1, 0), False),
])
def test_dominates(beta, alpha, expected):
    assert dominates(beta, alpha) is expected


def test_dominates_size_mismatch():
    with pytest.raises(ValueError):
        dominates((3, 0), (2, 0))


def test_incomparable():
    assert dominance_compare((4, 1, 1), (3, 3, 0)) is Comparison.INCOMPARABLE


@pytest.mark.parametrize("beta, alpha, expected", [
    ((3, 3, 3), (3, 1, 0), True),
    ((3, 1, 0), (3, 1, 0), True),
    ((3, 2, 0), (3, 1, 1), False),
])
def test_contains(beta, alpha, expected):
    assert contains(beta, alpha) is expected


def test_contains_length_mismatch():
    with pytest.raises(ValueError):
        contains((1, 0), (1, 0, 0))


def test_generate_chain_examples():
    assert list(generate_chain((3, 1, 0), (3, 3, 3))) == S310I_CHAIN
    assert list(generate_chain((2, 1), (2, 1))) == [(2, 1)]
    assert list(generate_chain((1, 0), (2, 1))) == [(1, 0), (2, 0), (2, 1)]
    with pytest.raises(ValueError):
        generate_chain((2, 0), (1, 1))


def test_check_chain_examples():
    assert check_chain(BoxChain(tuple(S310I_CHAIN)), (3, 1, 0), (3, 3, 3))
    bad = check_chain([(3, 1, 0), (3, 1, 1), (3, 2, 1)], (3, 1, 0), (3, 2, 1))
    assert not bad and bad.index == 1
    assert check_chain([(2, 1)], (2, 1), (2, 1))
    assert not check_chain([(3, 1, 0), (3, 2, 0)], (3, 1, 0), (3, 3, 3))


def test_subchain_examples():
    assert subchain((3, 1, 0), (3, 3, 3)) == [(3, 1, 0), (3, 1, 0), (3, 3, 0), (3, 3, 3)]
    assert subchain((2, 2), (2, 2)) == [(2, 2), (2, 2), (2, 2)]
    assert subchain((1, 0, 0), (2, 2, 0)) == [(1, 0, 0), (2, 0, 0), (2, 2, 0), (2, 2, 0)]


def test_sort_decreasing():
    assert sort_decreasing((0, 3, 1)) == (3, 1, 0)
    assert sort_decreasing((2, 2, 2)) == (2, 2, 2)
    assert sort_decreasing((1, 0, 3)) == (3, 1, 0)
    with pytest.raises(ValueError):
        sort_decreasing((1, -1))


def test_sm_orbit():
    assert len(sm_orbit((3, 1, 0))) == 6
    assert sm_orbit((2, 2, 2)) == {(2, 2, 2)}
    assert sm_orbit((2, 2, 0)) == {(2, 2, 0), (2, 0, 2), (0, 2, 2)}


def test_partitions_of_counts():
    # p(n) for n = 0..8, no length bound needed when m >= n
    assert [sum(1 for _ in partitions_of(n, n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def _parts(max_size=8, max_m=4):
    for m in range(1, max_m + 1):
        for n in range(max_size + 1):
            yield m, n, list(partitions_of(n, m))


def test_dominance_is_partial_order():
    for m, n, ps in _parts():
        for a in ps:
            assert dominates(a, a)
            for b in ps:
                if dominates(a, b) and dominates(b, a):
                    assert a == b
                for c in ps:
                    if dominates(a, b) and dominates(b, c):
                        assert dominates(a, c)


def test_containment_with_equal_size_is_equality():
    for m, n, ps in _parts():
        for a, b in itertools.product(ps, repeat=2):
            if contains(a, b):
                assert a == b


def test_chain_properties_exhaustive():
    for m in range(1, 4):
        ps = [p for n in range(7) for p in partitions_of(n, m)]
        for a, b in itertools.product(ps, repeat=2):
            if not contains(b, a):
                continue
            chain = generate_chain(a, b)
            assert check_chain(chain, a, b)
            assert len(chain) == b.size - a.size + 1
            assert all(isinstance(s, Partition) for s in chain)
            # subchain entries appear in the chain, in order
            it = iter(chain)
            assert all(any(s == c for c in it) for s in dict.fromkeys(subchain(a, b)))


def test_containment_interval_matches_filter():
    lo, hi = (3, 1, 0), (3, 3, 3)
    brute = [p for n in range(13) for p in partitions_of(n, 3) if contains(p, lo) and contains(hi, p)]
    assert sorted(containment_interval(lo, hi)) == sorted(brute)
    assert len(brute) == 9


@given(st.lists(st.integers(0, 4), min_size=1, max_size=5))
def test_orbit_size_is_multinomial(v):
    mult = Counter(v).values()
    assert len(sm_orbit(v)) == factorial(len(v)) // prod(factorial(k) for k in mult)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=5), st.randoms())
def test_sort_decreasing_permutation_invariant(v, rnd):
    w = list(v)
    rnd.shuffle(w)
    assert sort_decreasing(w) == sort_decreasing(v)
