from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from ccp import (SizeGuardError, all_outcomes, builtin, ccp_to_json, full_cycles,
                 ordered_partitions, outcomes, partitions, random_ccp, subsets,
                 validate_outcome)
from conftest import small_instances


def test_subsets_order():
    assert list(subsets((1, 2))) == [(1,), (2,), (1, 2)]
    assert list(subsets((5,))) == [(5,)]
    assert len(list(subsets((1, 2, 3)))) == 7


@pytest.mark.parametrize("n", range(1, 9))
def test_partition_counts_match_bell(n):
    parts = list(partitions(range(n)))
    assert len(parts) == oracle.bell(n)
    assert len(set(parts)) == len(parts)


def test_partitions_are_partitions():
    for p in partitions((1, 2, 3, 4)):
        flat = sorted(a for b in p for a in b)
        assert flat == [1, 2, 3, 4]


def test_partition_size_guard():
    with pytest.raises(SizeGuardError):
        list(partitions(range(9)))


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 3), (3, 13), (4, 75)])
def test_ordered_partition_counts(n, expected):
    # expected values come from oracle.ordered_partition_count
    assert oracle.ordered_partition_count(n) == expected
    assert len(list(ordered_partitions(tuple(range(n))))) == expected


def test_ordered_partitions_of_pair():
    assert sorted(ordered_partitions(("a", "b"))) == sorted(
        [(("a", "b"),), (("a",), ("b",)), (("b",), ("a",))])


@pytest.mark.parametrize("n", range(1, 7))
def test_full_cycle_counts(n):
    cycles = list(full_cycles(tuple(range(n))))
    assert len(cycles) == factorial(n - 1)


def test_full_cycles_are_single_cycles():
    for s in [(1,), (1, 2), (1, 2, 3), (1, 2, 3, 4)]:
        for mu in full_cycles(s):
            assert sorted(mu.values()) == list(s)
            for t in subsets(s):
                if len(t) < len(s):
                    assert {mu[a] for a in t} != set(t)


def test_pair_cycle_is_swap():
    assert list(full_cycles((1, 2))) == [{1: 2, 2: 1}]
    assert list(full_cycles((7,))) == [{7: 7}]


def test_example_outcome_counts(example1, example2, single):
    # Example 1: singletons, 6 one-pair and 3 two-pair structures.
    assert len(list(outcomes(example1))) == 10
    # Example 2 has 4 outcomes: {1,2,3} only carries -e, so the grand
    # coalition never forms (the oracle agrees).
    assert len(list(outcomes(example2))) == 4
    assert len(oracle.outcomes(ccp_to_json(example2))) == 4
    assert len(list(outcomes(single))) == 1


def test_streams_are_deterministic(gstar):
    assert list(outcomes(gstar)) == list(outcomes(gstar))
    assert list(partitions(range(5))) == list(partitions(range(5)))


@pytest.mark.parametrize("g", small_instances(45), ids=lambda g: repr(g))
def test_outcomes_match_generate_and_filter_oracle(g):
    mine = list(outcomes(g))
    assert len(set(mine)) == len(mine)
    for o in mine:
        validate_outcome(g, o.structure, o.payoff)
    assert {oracle.as_oracle(o) for o in mine} == oracle.outcomes(ccp_to_json(g))


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(1, 4))
def test_streamed_outcomes_are_valid(seed, n):
    g = random_ccp(seed, n, 2, (-1, 3), sentinel=True)
    for o in all_outcomes(g):
        assert validate_outcome(g, o.structure, o.payoff) == o


def test_outcome_size_guard():
    g = builtin("example1")
    with pytest.raises(SizeGuardError):
        list(outcomes(g, max_agents=3))
