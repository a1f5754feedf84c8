import pytest

from pointed_mobius.errors import BoundExceeded, NotInIdeal, NotKnapsackInput, SizeMismatch
from pointed_mobius.knapsack import build_V, is_knapsack
from pointed_mobius.permutahedron import (
    OrderedSetPartition,
    build_Q,
    build_R,
    in_R,
    is_boundary,
    iso_f,
    mu_via_gamma,
    preimage,
    q_rank,
    r_poset,
    r_to_dot,
    verify_eulerian,
)
from pointed_mobius.pointed import PointedComposition, integer_partitions
from pointed_mobius.poset import BOTTOM
from pointed_mobius.theorems import restricted_compositions


def osp(text):
    return OrderedSetPartition.parse(text)


def fubini(p):
    """Ordered Bell numbers by a(n) = sum_k C(n, k) a(n - k)."""
    from math import comb

    a = [1]
    for n in range(1, p + 1):
        a.append(sum(comb(n, k) * a[n - k] for k in range(1, n + 1)))
    return a[p]


@pytest.mark.parametrize("p", range(1, 7))
def test_Q_size(p):
    assert len(build_Q(p)) - 1 == fubini(p)


def test_Q_small():
    assert len(build_Q(1)) == 2
    Q2 = build_Q(2)
    assert {str(w) for w in Q2.atoms()} == {"1|2", "2|1"}
    assert str(Q2.top()) == "1,2"
    assert Q2.is_lattice()


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_Q_is_eulerian(p):
    assert verify_eulerian(p)


def test_verify_eulerian_bound():
    with pytest.raises(BoundExceeded):
        verify_eulerian(6)


def test_q_rank():
    assert q_rank(osp("1|2|3")) == 1
    assert q_rank(osp("1,2,3")) == 3
    Q = build_Q(3)
    for w in Q:
        if w is not BOTTOM:
            assert Q.rank(w) == q_rank(w)


def test_R_rules():
    assert set(build_R((1, 2, 3)).members) == set(build_Q(3)) - {BOTTOM}
    assert {str(w) for w in build_R((1, 1))} == {"1,2", "1|2"}
    singles = [w for w in build_R((1, 1, 1, 4)) if len(w.blocks) == 4]
    assert len(singles) == 4
    four_part = [c for c in build_V((1, 1, 1, 4), 0) if len(c.interior) == 4]
    assert len(singles) == len(four_part)
    with pytest.raises(SizeMismatch):
        in_R(osp("1|2"), (1, 1, 1))


def test_iso_f_examples():
    lam = (1, 1, 1, 4)
    assert iso_f(osp("1,2,3,4"), lam, 2) == PointedComposition((7,), 2)
    assert iso_f(osp("4|1|2|3"), lam, 2) == PointedComposition((4, 1, 1, 1), 2)
    assert iso_f(osp("1,2|3,4"), lam, 2) == PointedComposition((2, 5), 2)
    assert is_boundary(osp("1,2|3|4"), lam)
    assert not is_boundary(osp("1,4|2|3"), lam)
    assert iso_f(osp("1,4|2|3"), lam, 0) in build_V(lam, 0)
    assert not any(is_boundary(w, (1, 2, 3)) for w in build_R((1, 2, 3)))


def knapsack_partitions(s_max):
    for s in range(1, s_max + 1):
        for lam in integer_partitions(s):
            if is_knapsack(lam).is_knapsack:
                yield lam


@pytest.mark.parametrize("lam", list(knapsack_partitions(8)), ids=str)
def test_iso_f_is_isomorphism(lam):
    m = 1
    R = r_poset(lam)
    CF = restricted_compositions(sum(lam) + m, [PointedComposition(lam, m).type])
    ideal = [c for c in CF if c is not BOTTOM and c.pointed == m]
    image = {w: iso_f(w, lam, m) for w in R}
    assert sorted(map(str, image.values())) == sorted(map(str, ideal))
    for w in R:
        assert preimage(image[w], lam, m) == w
        for v in R:
            assert R.leq(w, v) == CF.leq(image[w], image[v])
    V = build_V(lam, m)
    for w in R:
        assert (not is_boundary(w, lam)) == (image[w] in V)


@pytest.mark.parametrize("lam", [(2, 1), (1, 1), (2, 2, 1), (3, 1, 1)])
def test_r_poset_matches_filter_of_Q(lam):
    direct = r_poset(lam)
    via_q = build_R(lam)
    assert set(direct) == set(via_q.members)
    sub = via_q.as_poset()
    for w in direct:
        for v in direct:
            assert direct.leq(w, v) == sub.leq(w, v)


def test_mu_via_gamma_examples():
    lam = (1, 1, 1, 4)
    for m in range(3):
        # a four-block interior face is an atom of C_n(F) + 0, hence -1
        CF = restricted_compositions(7 + m, [PointedComposition(lam, m).type])
        atom = PointedComposition((1, 4, 1, 1), m)
        assert atom in CF.atoms()
        assert mu_via_gamma(lam, m, atom) == CF.mobius(BOTTOM, atom) == -1
        assert mu_via_gamma(lam, m, PointedComposition((5, 1, 1), m)) == 1
        assert mu_via_gamma(lam, m, PointedComposition((2, 1, 4), m)) == 0
        c = PointedComposition((7,), m)
        assert mu_via_gamma(lam, m, c) == CF.mobius(BOTTOM, c) == 0
    with pytest.raises(NotKnapsackInput):
        mu_via_gamma((1, 1, 2), 0, PointedComposition((4,), 0))
    with pytest.raises(NotInIdeal):
        mu_via_gamma((1, 2), 0, PointedComposition((1, 1, 1), 0))


def test_r_to_dot_marks_boundary():
    dot = r_to_dot((1, 1, 2))
    assert 'fontcolor="gray"' in dot and 'fontcolor="black"' in dot
