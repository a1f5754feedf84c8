import json
import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from pointed_mobius.errors import (
    CycleDetected,
    NotComparable,
    NotGraded,
    RedundantCoverWarning,
    UnknownElement,
)
from pointed_mobius.pointed import PointedComposition, PointedIntegerPartition, build_C, build_I
from pointed_mobius.poset import BOTTOM, from_cover_relations
from pointed_mobius.theorems import restricted_compositions


def chain(k):
    return from_cover_relations(range(k), [(i, i + 1) for i in range(k - 1)])


def mobius_by_inversion(P):
    """Oracle: the Möbius matrix is the inverse of the zeta matrix."""
    Z = P.zeta_matrix().astype(float)
    return np.rint(np.linalg.inv(Z)).astype(int)


@st.composite
def random_dags(draw):
    n = draw(st.integers(1, 9))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=20))
    return n, sorted({(a, b) for a, b in edges if a < b})


@settings(max_examples=80, deadline=None)
@given(random_dags())
def test_mobius_matches_zeta_inverse(dag):
    n, edges = dag
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RedundantCoverWarning)
        P = from_cover_relations(range(n), edges)
    M = mobius_by_inversion(P)
    for x in P:
        for y in P:
            want = M[P.index(x), P.index(y)]
            if P.leq(x, y):
                assert P.mobius(x, y) == want
            else:
                assert want == 0


def test_singleton_and_chain():
    P = from_cover_relations(["a"], [])
    assert len(P) == 1 and P.mobius("a", "a") == 1
    C = from_cover_relations("abc", [("a", "b"), ("b", "c")])
    assert C.leq("a", "c")
    assert C.mobius("a", "c") == 0
    assert C.mobius("a", "b") == -1


def test_cycle_detected():
    with pytest.raises(CycleDetected):
        from_cover_relations("abc", [("a", "b"), ("b", "c"), ("c", "a")])


def test_unknown_and_duplicate_elements():
    with pytest.raises(UnknownElement):
        from_cover_relations("ab", [("a", "z")])
    with pytest.raises(ValueError):
        from_cover_relations("aa", [])
    with pytest.raises(UnknownElement):
        chain(2).leq(0, 7)


def test_redundant_cover_pruned_with_warning():
    with pytest.warns(RedundantCoverWarning):
        P = from_cover_relations("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert sorted(P.covers()) == [("a", "b"), ("b", "c")]


def test_antichain_and_reflexivity():
    P = from_cover_relations("ab", [])
    assert not P.leq("a", "b")
    assert P.leq("a", "a")
    with pytest.raises(NotComparable):
        P.mobius("a", "b")


def test_boolean_algebra_b3():
    B3 = build_C(3)
    assert len(B3) == 8
    assert B3.mobius(B3.bottom(), B3.top()) == -1
    assert B3.is_lattice()


def test_adjoin_bottom():
    V = from_cover_relations("ab", []).adjoin_bottom()
    assert sorted(map(str, V.upper_covers(BOTTOM))) == ["a", "b"]
    two = from_cover_relations("a", []).adjoin_bottom()
    assert two.mobius(BOTTOM, "a") == -1
    CF = restricted_compositions(4, ["2,2|0"])
    assert CF.atoms() == [PointedComposition((2, 2), 0)]
    assert CF.is_lattice()


def test_filter_generated():
    I4 = build_I(4)
    top = I4.maximal_elements()
    assert set(I4.filter_generated(top).members) == set(top)
    assert len(I4.filter_generated(I4.minimal_elements())) == len(I4)
    g = PointedIntegerPartition.parse("2,1,1|0")
    F = I4.filter_generated([g])
    assert F.generators() == [g]
    assert all(I4.leq(g, x) for x in F)
    assert {str(x) for x in F} == {
        "2,1,1|0", "2,2|0", "3,1|0", "2,1|1", "1,1|2", "4|0", "3|1", "2|2", "1|3", "|4",
    }


def test_rank_and_grading():
    C = chain(4)
    assert C.rank(3) == 3 and C.rank(0) == 0
    C5 = build_C(5)
    top = PointedComposition((), 5)
    for c in C5:
        assert C5.rank(top) - C5.rank(c) == c.num_parts - 1
    P = from_cover_relations("abcde", [("a", "b"), ("b", "e"), ("a", "c"), ("c", "d"), ("d", "e")])
    assert not P.is_graded()
    with pytest.raises(NotGraded):
        P.rank("e")


def test_lattice_queries():
    assert not build_I(3).is_lattice()
    P = restricted_compositions(3, ["1,1|1"])
    assert P.has_top()
    B = build_C(3)
    a, b = PointedComposition.parse("2,1|0"), PointedComposition.parse("1,2|0")
    assert B.join(a, b) == PointedComposition.parse("3|0")
    assert B.meet(a, b) == PointedComposition.parse("1,1,1|0")


def test_json_and_dot():
    P = chain(3)
    d = json.loads(P.to_json())
    assert d["elements"] == ["0", "1", "2"]
    assert sorted(map(tuple, d["covers"])) == [(0, 1), (1, 2)]
    dot = P.to_dot("X")
    assert dot.startswith("digraph X {") and "rankdir=BT" in dot
    assert dot.count("->") == 2


def test_induced_subposet_keeps_order():
    B = build_C(3)
    members = [c for c in B if c.num_parts != 2]
    sub = B.induced(members)
    assert len(sub) == len(members)
    for x in sub:
        for y in sub:
            assert sub.leq(x, y) == B.leq(x, y)
