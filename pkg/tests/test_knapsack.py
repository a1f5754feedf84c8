from itertools import product

import pytest
from hypothesis import given, strategies as st

from pointed_mobius.config import override_bounds
from pointed_mobius.errors import (
    BoundExceeded,
    ConditionViolated,
    ConstructionMismatch,
    NotKnapsackInput,
    NotPrime,
    SumTooLarge,
)
from pointed_mobius.knapsack import (
    build_V,
    census,
    decompose,
    family_modular,
    family_weighted,
    in_V,
    is_knapsack,
    subset_sums,
)
from pointed_mobius.pointed import PointedComposition, compositions, integer_partitions


def injective(lam):
    """Oracle: sum is injective on sub-multisets (as multiplicity vectors)."""
    values = sorted(set(lam))
    mults = [lam.count(v) for v in values]
    sums = [sum(t * v for t, v in zip(pick, values)) for pick in product(*(range(k + 1) for k in mults))]
    return len(sums) == len(set(sums))


def pc(text):
    return PointedComposition.parse(text)


def test_examples():
    cert = is_knapsack((1, 1, 1, 4))
    assert cert.is_knapsack and (cert.distinct_sums, cert.capacity) == (8, 8)
    assert subset_sums((1, 1, 1, 4)) == list(range(8))
    cert = is_knapsack((1, 1, 2))
    assert not cert.is_knapsack and (cert.distinct_sums, cert.capacity) == (5, 6)
    assert is_knapsack(()).is_knapsack


@pytest.mark.parametrize("n", range(13))
def test_recognition_matches_injectivity(n):
    for lam in integer_partitions(n):
        assert is_knapsack(lam).is_knapsack == injective(list(lam))


@given(st.lists(st.integers(1, 30), max_size=7))
def test_recognition_random(lam):
    assert is_knapsack(lam).is_knapsack == injective(lam)


def test_family_weighted():
    assert family_weighted((1, 4), (3, 1)) == (4, 1, 1, 1)
    assert family_weighted((1,), (5,)) == (1,) * 5
    with pytest.raises(ConstructionMismatch) as info:
        family_weighted((1, 2), (2, 1))
    assert info.value.certificate.distinct_sums == 5
    with pytest.raises(ConditionViolated):
        family_weighted((2, 3), (2, 1))


def test_family_modular():
    assert family_modular((1, 2), 5, 1) == (2, 1)
    assert family_modular((1, 2), 5, 3) == (3, 1)
    assert family_modular((1, 1, 1, 4), 11, 2) == (8, 2, 2, 2)
    with pytest.raises(NotPrime):
        family_modular((1, 2), 9, 1)
    with pytest.raises(SumTooLarge):
        family_modular((1, 2), 3, 1)
    with pytest.raises(NotKnapsackInput):
        family_modular((1, 1, 2), 7, 1)


LISTED_V = {(1, 1, 1, 4), (1, 1, 5), (1, 1, 4, 1), (1, 5, 1), (1, 4, 1, 1), (5, 1, 1), (4, 1, 1, 1)}


@pytest.mark.parametrize("m", range(4))
def test_build_V_fixture(m):
    V = build_V((1, 1, 1, 4), m)
    assert V == {PointedComposition(c, m) for c in LISTED_V}
    assert PointedComposition((2, 1, 4), m) not in V


def test_build_V_other_examples():
    assert build_V((3, 3, 3), 1) == {pc("3,3,3|1")}
    assert build_V((1, 2), 0) == {pc("1,2|0"), pc("2,1|0"), pc("3|0")}
    with pytest.raises(NotKnapsackInput):
        build_V((1, 1, 2), 0)


def test_in_V_agrees_with_build_V():
    for lam in [(1, 1, 1, 4), (1, 2), (2, 2), (1, 2, 4), (3, 1, 1)]:
        V = build_V(lam, 1)
        for c in compositions(sum(lam)):
            assert in_V(PointedComposition(c, 1), lam, 1) == (PointedComposition(c, 1) in V)


def test_decompose_unique():
    assert decompose(5, (1, 1, 1, 4)) == (4, 1)
    assert decompose(8, (1, 1, 1, 4)) is None


def test_census():
    assert [c.parts for c in census(1)] == [(1,)]
    assert [c.parts for c in census(2)] == [(2,), (1, 1)]
    four = {c.parts for c in census(4)}
    assert four == {(4,), (3, 1), (2, 2), (1, 1, 1, 1)}
    assert len(census(4, include_all=True)) == 5
    with override_bounds(census=3):
        with pytest.raises(BoundExceeded):
            census(4)
