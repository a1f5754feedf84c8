"""The ordered partition lattice Q_p and the composition ideal it parametrises.

Ordered set partitions of ``{1, ..., p}`` ordered by merging adjacent blocks,
with a bottom adjoined, form the face lattice of the permutahedron. For a
knapsack multiset ``lam = (lam_1, ..., lam_p)`` (indexed in the order given)
the subposet R of ordered partitions in which equal parts keep their index
order maps isomorphically, by taking block sums, onto the pointed
compositions of type ``>= {lam | m}`` whose last entry is ``m``. This module
builds that correspondence explicitly and reads off Möbius values from it.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Sequence

from .config import bounds
from .errors import BoundExceeded, NotInIdeal, NotKnapsackInput, SizeMismatch
from .knapsack import decompose, is_knapsack
from .pointed import PointedComposition, PointedIntegerPartition, set_partitions, type_filter
from .poset import BOTTOM, FinitePoset, PosetFilter


@dataclass(frozen=True)
class OrderedSetPartition:
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        if any(not b for b in blocks):
            raise ValueError("blocks must be non-empty")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def parse(cls, text: str) -> OrderedSetPartition:
        return cls(tuple(tuple(int(x) for x in b.split(",")) for b in text.split("|")))

    @property
    def size(self) -> int:
        return sum(map(len, self.blocks))

    def __str__(self):
        return "|".join(",".join(map(str, b)) for b in self.blocks)


def ordered_set_partitions(p: int) -> Iterator[OrderedSetPartition]:
    for blocks in set_partitions(range(1, p + 1)):
        for order in permutations(blocks):
            yield OrderedSetPartition(order)


def _merges(w: OrderedSetPartition) -> Iterator[OrderedSetPartition]:
    b = w.blocks
    for i in range(len(b) - 1):
        yield OrderedSetPartition(b[:i] + (b[i] + b[i + 1],) + b[i + 2 :])


def _poset_of(elements: list[OrderedSetPartition]) -> FinitePoset:
    index = {w: i for i, w in enumerate(elements)}
    pairs = [(index[w], index[v]) for w in elements for v in _merges(w)]
    return FinitePoset._build(elements, pairs, prune=False)


def build_Q(p: int) -> FinitePoset:
    """Ordered partitions of ``{1, ..., p}`` plus a bottom, covers merging adjacent blocks."""
    bounds.check("Q", p)
    return _build_Q(p)


@lru_cache(maxsize=None)
def _build_Q(p: int) -> FinitePoset:
    if p < 1:
        raise ValueError("p must be at least 1")
    return _poset_of(list(ordered_set_partitions(p))).adjoin_bottom()


def q_rank(w: OrderedSetPartition) -> int:
    """Rank of ``w`` in ``Q_p``: the singleton orderings are the atoms."""
    return w.size - len(w.blocks) + 1


def verify_eulerian(p: int) -> bool:
    """Check ``mu(x, y) == (-1)**rho(x, y)`` on every interval of ``Q_p``."""
    if p > 5:
        raise BoundExceeded(f"exhaustive Eulerian check is limited to p <= 5, got {p}")
    Q = build_Q(p)
    for x in Q:
        for y, mu in Q.mobius_from(x).items():
            if mu != (-1) ** Q.rank_difference(x, y):
                return False
    return True


def _check_size(w: OrderedSetPartition, lam: Sequence[int]) -> None:
    if sorted(x for b in w.blocks for x in b) != list(range(1, len(lam) + 1)):
        raise SizeMismatch(f"{w} is not an ordered partition of 1..{len(lam)}")


def in_R(w: OrderedSetPartition, lam: Sequence[int]) -> bool:
    """Equal parts ``lam_i == lam_j`` (i < j) sit in the same block or i's block comes first."""
    _check_size(w, lam)
    where = {x: k for k, b in enumerate(w.blocks) for x in b}
    p = len(lam)
    return all(
        where[i] <= where[j]
        for i in range(1, p + 1)
        for j in range(i + 1, p + 1)
        if lam[i - 1] == lam[j - 1]
    )


def build_R(lam: Sequence[int]) -> PosetFilter:
    """The filter R of ``build_Q(len(lam))``."""
    lam = tuple(lam)
    Q = build_Q(len(lam))
    R = PosetFilter(Q, frozenset(w for w in Q if w is not BOTTOM and in_R(w, lam)))
    if not R.is_upward_closed():
        raise AssertionError("R is not upward closed")
    return R


def _r_members(lam: Sequence[int]) -> Iterator[OrderedSetPartition]:
    classes = defaultdict(list)
    for i, v in enumerate(lam, start=1):
        classes[v].append(i)
    classes = list(classes.values())

    def rec(remaining, prefix):
        if not any(remaining):
            yield OrderedSetPartition(tuple(prefix))
            return
        # each value class contributes a prefix of its remaining indices
        for take in product(*(range(len(r) + 1) for r in remaining)):
            if not any(take):
                continue
            block = tuple(sorted(x for r, t in zip(remaining, take) for x in r[:t]))
            rest = [r[t:] for r, t in zip(remaining, take)]
            prefix.append(block)
            yield from rec(rest, prefix)
            prefix.pop()

    yield from rec(classes, [])


def r_poset(lam: Sequence[int]) -> FinitePoset:
    """R as a poset in its own right, enumerated directly (no bound on p)."""
    return _poset_of(list(_r_members(tuple(lam))))


def iso_f(w: OrderedSetPartition, lam: Sequence[int], m: int) -> PointedComposition:
    """Block sums of ``w`` weighted by ``lam``, with pointed entry ``m``."""
    _check_size(w, lam)
    return PointedComposition(tuple(sum(lam[i - 1] for i in b) for b in w.blocks), m)


def is_boundary(w: OrderedSetPartition, lam: Sequence[int]) -> bool:
    """True iff some block holds two indices with equal parts."""
    _check_size(w, lam)
    return any(len({lam[i - 1] for i in b}) < len(b) for b in w.blocks)


def preimage(c: PointedComposition, lam: Sequence[int], m: int) -> OrderedSetPartition:
    """The unique member of R mapped to ``c`` by :func:`iso_f`."""
    if c.pointed != m:
        raise NotInIdeal(f"{c} does not have pointed entry {m}")
    free = defaultdict(list)
    for i, v in enumerate(lam, start=1):
        free[v].append(i)
    blocks = []
    for entry in c.interior:
        d = decompose(entry, [v for v, ids in free.items() for _ in ids])
        if d is None:
            raise NotInIdeal(f"{c} is not a coarsening of {tuple(lam)}|{m}")
        blocks.append(tuple(free[v].pop(0) for v in d))
    if any(free.values()):
        raise NotInIdeal(f"{c} does not use every part of {tuple(lam)}")
    return OrderedSetPartition(tuple(blocks))


@lru_cache(maxsize=256)
def _filter_members(generator: PointedIntegerPartition) -> frozenset:
    return type_filter(generator.n, [generator]).members


def mu_via_gamma(lam: Sequence[int], m: int, c: PointedComposition) -> int:
    """``mu(0, c)`` in the lattice of compositions of type ``>= {lam | m}``,
    read off the face poset of the complex Gamma.

    Compositions with pointed entry above ``m`` sit over no atom join and get
    0. Otherwise ``c`` is the image of a face G of Gamma: a boundary face gets
    0, an interior face gets ``(-1)**rank`` of its ordered partition in Q_p.
    """
    lam = tuple(lam)
    if not is_knapsack(lam).is_knapsack:
        raise NotKnapsackInput(f"{list(lam)} is not a knapsack partition")
    n = sum(lam) + m
    if c.n != n or c.type not in _filter_members(PointedIntegerPartition(lam, m)):
        raise NotInIdeal(f"{c} is not in the composition filter of {list(lam)}|{m}")
    if c.pointed > m:
        return 0
    w = preimage(c, lam, m)
    if is_boundary(w, lam):
        return 0
    return (-1) ** q_rank(w)


def r_to_dot(lam: Sequence[int]) -> str:
    """DOT of R (built directly) with boundary faces in grey and interior faces in black."""
    R = r_poset(lam)
    attrs = {w: {"fontcolor": "gray" if is_boundary(w, lam) else "black"} for w in R}
    return R.to_dot("R", attrs)
