from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from pointed_mobius.config import override_bounds
from pointed_mobius.errors import BoundExceeded, MalformedComposition, ParseError, SumMismatch
from pointed_mobius.perms import (
    beta,
    beta_by_inclusion_exclusion,
    beta_fixed_last,
    beta_witnesses,
    composition_from_descent_set,
    count_with_descent_set,
    descent_composition,
    descent_set,
    enumerate_by_descent_composition,
    multinomial,
    parse_permutation,
)
from pointed_mobius.pointed import PointedComposition, compositions


def naive_beta(c):
    """Oracle straight from the definition, by scanning all of S_n."""
    if not c.interior:
        return 1
    if c.pointed == 0:
        return 0
    want, acc = set(), 0
    for x in c.interior:
        acc += x
        want.add(acc)
    return sum(
        1
        for t in permutations(range(1, c.n + 1))
        if {i + 1 for i in range(c.n - 1) if t[i] > t[i + 1]} == want
    )


def pc(text):
    return PointedComposition.parse(text)


def test_descent_set_examples():
    assert descent_set((1, 2, 3, 4)) == frozenset()
    assert descent_set((4, 3, 2, 1)) == {1, 2, 3}
    assert descent_set((1, 3, 2)) == {2}


def test_descent_composition_examples():
    assert descent_composition((1, 2, 3, 4)) == (4,)
    assert descent_composition((1, 3, 2)) == (2, 1)
    assert descent_composition((2, 1, 4, 3)) == (1, 2, 1)
    assert composition_from_descent_set({1, 3}, 4) == (1, 2, 1)


def test_permutation_parsing():
    assert parse_permutation("2 1 3") == (2, 1, 3)
    with pytest.raises(ParseError):
        parse_permutation("1 1 3")
    with pytest.raises(ParseError):
        parse_permutation("1 x")


def test_beta_rules():
    assert beta(pc("|0")) == 1
    assert beta(pc("1|0")) == 0
    assert beta(pc("2|1")) == 2
    assert beta(pc("1,1,1|0")) == 0
    assert beta_by_inclusion_exclusion(pc("1,1,1|0")) == 0
    assert beta_fixed_last(pc("|0")) == 1
    assert beta_fixed_last(pc("2|1")) == 2
    assert beta_fixed_last(pc("1,1|0")) == 0


def test_beta_witnesses():
    assert beta_witnesses(pc("2|1")) == [(1, 3, 2), (2, 3, 1)]
    assert beta_witnesses(pc("|3")) == [(1, 2, 3)]
    assert beta_witnesses(pc("2|0")) == []


def test_multinomial():
    assert multinomial(5, (5,)) == 1
    assert multinomial(3, (2, 1)) == 3
    assert multinomial(4, (1, 2, 1)) == 12
    with pytest.raises(SumMismatch):
        multinomial(4, (1, 1))
    with pytest.raises(MalformedComposition):
        multinomial(0, (1, -1))


def test_enumeration_tables():
    assert enumerate_by_descent_composition(1) == {(1,): 1}
    assert enumerate_by_descent_composition(3) == {(3,): 1, (2, 1): 2, (1, 2): 2, (1, 1, 1): 1}
    assert enumerate_by_descent_composition(4)[(2, 2)] == 5
    for n in range(7):
        assert sum(enumerate_by_descent_composition(n).values()) == factorial(n)


def test_enumeration_respects_bound():
    with override_bounds(perm=5):
        with pytest.raises(BoundExceeded):
            enumerate_by_descent_composition(6)


def all_pointed_compositions(n):
    for m in range(n + 1):
        if m == n:
            yield PointedComposition((), n)
        else:
            for c in compositions(n - m):
                yield PointedComposition(c, m)


@pytest.mark.parametrize("n", range(6))
def test_three_routes_agree_with_definition(n):
    for c in all_pointed_compositions(n):
        want = naive_beta(c)
        assert beta(c) == beta_by_inclusion_exclusion(c) == beta_fixed_last(c) == want, c


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=4), st.integers(1, 3))
def test_inclusion_exclusion_matches_enumeration(interior, m):
    c = PointedComposition(tuple(interior), m)
    if c.n <= 9:
        assert beta_by_inclusion_exclusion(c) == beta_fixed_last(c)


def test_beta_beyond_enumeration_uses_inclusion_exclusion():
    c = PointedComposition((3, 3, 3), 2)
    assert c.n > 8
    assert beta(c) == beta_by_inclusion_exclusion(c) > 0


def test_tangent_count():
    assert count_with_descent_set(8, {2, 4, 6}, fix_last=True) == 272
    assert count_with_descent_set(3, {2}) == 2
