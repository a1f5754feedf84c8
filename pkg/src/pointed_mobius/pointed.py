"""Pointed integer partitions, pointed set partitions and pointed compositions.

Canonical text forms (also the CLI literal grammar):

* pointed integer partition: parts in non-increasing order, then ``|m``,
  e.g. ``4,1,1|2``; ``|4`` has no ordinary parts.
* pointed composition: entries in order, the last one after ``|``,
  e.g. ``2,1|0``; the composition of 0 is ``|0``.
* pointed set partition: blocks sorted by their least element and separated
  by ``/``, then ``|`` and the zero block, e.g. ``1,3/2|4,5`` or ``1/2|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .config import bounds
from .errors import MalformedComposition, MismatchedN, ParseError
from .poset import FinitePoset, PosetFilter


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _split_pointed(text: str) -> tuple[tuple[int, ...], int]:
    if text.count("|") != 1:
        raise ParseError(f"expected exactly one '|' in {text!r}")
    left, right = text.split("|")
    last = _parse_int_list(right)
    if len(last) != 1:
        raise ParseError(f"expected a single pointed entry after '|' in {text!r}")
    return _parse_int_list(left), last[0]


@dataclass(frozen=True)
class PointedIntegerPartition:
    """A multiset of positive parts together with a pointed part ``m >= 0``."""

    parts: tuple[int, ...]
    pointed: int

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p <= 0 for p in parts) or self.pointed < 0:
            raise ValueError(f"invalid pointed partition {parts}|{self.pointed}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> PointedIntegerPartition:
        parts, m = _split_pointed(text)
        try:
            return cls(parts, m)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @property
    def n(self) -> int:
        return sum(self.parts) + self.pointed

    @property
    def num_parts(self) -> int:
        """Number of parts, the pointed part included."""
        return len(self.parts) + 1

    def __str__(self):
        return ",".join(map(str, self.parts)) + f"|{self.pointed}"


@dataclass(frozen=True)
class PointedComposition:
    """``(c_1, ..., c_{k-1}, c_k)`` with positive interior entries and ``c_k >= 0``."""

    interior: tuple[int, ...]
    pointed: int

    def __post_init__(self):
        interior = tuple(int(c) for c in self.interior)
        if any(c <= 0 for c in interior):
            raise MalformedComposition(f"interior entries must be positive: {interior}")
        if self.pointed < 0:
            raise MalformedComposition(f"pointed entry must be non-negative: {self.pointed}")
        object.__setattr__(self, "interior", interior)

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> PointedComposition:
        """The last entry becomes the pointed one; the empty list is rejected."""
        parts = list(parts)
        if not parts:
            raise MalformedComposition("a pointed composition has at least one entry")
        return cls(tuple(parts[:-1]), parts[-1])

    @classmethod
    def parse(cls, text: str) -> PointedComposition:
        interior, last = _split_pointed(text)
        try:
            return cls(interior, last)
        except MalformedComposition as exc:
            raise ParseError(str(exc)) from None

    @property
    def parts(self) -> tuple[int, ...]:
        return self.interior + (self.pointed,)

    @property
    def n(self) -> int:
        return sum(self.interior) + self.pointed

    @property
    def num_parts(self) -> int:
        return len(self.interior) + 1

    @cached_property
    def type(self) -> PointedIntegerPartition:
        return PointedIntegerPartition(self.interior, self.pointed)

    def __str__(self):
        return ",".join(map(str, self.interior)) + f"|{self.pointed}"


@dataclass(frozen=True)
class PointedSetPartition:
    """Blocks partitioning ``S - Z`` plus the (possibly empty) zero block ``Z``."""

    blocks: tuple[tuple[int, ...], ...]
    zero: tuple[int, ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        zero = tuple(sorted(self.zero))
        seen = [x for b in blocks for x in b] + list(zero)
        if any(not b for b in blocks) or len(seen) != len(set(seen)):
            raise ValueError(f"blocks must be non-empty and disjoint: {blocks} | {zero}")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "zero", zero)

    @classmethod
    def parse(cls, text: str) -> PointedSetPartition:
        if text.count("|") != 1:
            raise ParseError(f"expected exactly one '|' in {text!r}")
        left, right = text.split("|")
        blocks = [_parse_int_list(b) for b in left.split("/")] if left.strip() else []
        try:
            return cls(tuple(blocks), _parse_int_list(right))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @property
    def n(self) -> int:
        return sum(map(len, self.blocks)) + len(self.zero)

    @property
    def num_blocks(self) -> int:
        """``|pi|``: the ordinary blocks plus the zero block."""
        return len(self.blocks) + 1

    @cached_property
    def type(self) -> PointedIntegerPartition:
        return PointedIntegerPartition(tuple(map(len, self.blocks)), len(self.zero))

    def to_partition(self) -> tuple[tuple[int, ...], ...]:
        """Image in the partition lattice of ``{1, ..., n+1}``: n+1 joins the zero block."""
        n = self.n
        return tuple(sorted(self.blocks + (self.zero + (n + 1,),)))

    @classmethod
    def from_partition(cls, blocks, n: int) -> PointedSetPartition:
        """Inverse of :meth:`to_partition` for a set partition of ``{1, ..., n+1}``."""
        ordinary, zero = [], ()
        for b in blocks:
            if n + 1 in b:
                zero = tuple(x for x in b if x != n + 1)
            else:
                ordinary.append(b)
        return cls(tuple(ordinary), zero)

    def __str__(self):
        left = "/".join(",".join(map(str, b)) for b in self.blocks)
        return left + "|" + ",".join(map(str, self.zero))


def type_of_set_partition(pi: PointedSetPartition) -> PointedIntegerPartition:
    return pi.type


def type_of_composition(c: PointedComposition) -> PointedIntegerPartition:
    return c.type


# -- enumerators --------------------------------------------------------------


def integer_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as non-increasing tuples, in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def set_partitions(ground: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Set partitions of ``ground`` (sorted), blocks ordered by least element."""
    ground = list(ground)
    blocks: list[list[int]] = []

    def grow(i):
        if i == len(ground):
            yield tuple(tuple(b) for b in blocks)
            return
        x = ground[i]
        for b in blocks:
            b.append(x)
            yield from grow(i + 1)
            b.pop()
        blocks.append([x])
        yield from grow(i + 1)
        blocks.pop()

    yield from grow(0)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``n`` into positive parts."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


# -- the three posets ---------------------------------------------------------


def build_I(n: int) -> FinitePoset:
    """Pointed integer partitions of ``n`` ordered by merging two parts."""
    bounds.check("I", n)
    return _build_I(n)


@lru_cache(maxsize=None)
def _build_I(n: int) -> FinitePoset:
    if n < 0:
        raise ValueError("n must be non-negative")
    elements = [
        PointedIntegerPartition(lam, m) for m in range(n + 1) for lam in integer_partitions(n - m)
    ]
    index = {e: i for i, e in enumerate(elements)}
    pairs = set()
    for x in elements:
        parts = x.parts
        for a in range(len(parts)):
            rest = parts[:a] + parts[a + 1 :]
            y = PointedIntegerPartition(rest, x.pointed + parts[a])
            pairs.add((index[x], index[y]))
            for b in range(a + 1, len(parts)):
                merged = rest[: b - 1] + rest[b:] + (parts[a] + parts[b],)
                pairs.add((index[x], index[PointedIntegerPartition(merged, x.pointed)]))
    return FinitePoset._build(elements, pairs, prune=False)


def build_Pi(n: int) -> FinitePoset:
    """Pointed set partitions of ``{1, ..., n}`` under refinement.

    Built from the set partitions of ``{1, ..., n+1}``, the block holding
    ``n+1`` becoming the zero block; covers merge two blocks.
    """
    bounds.check("Pi", n)
    return _build_Pi(n)


@lru_cache(maxsize=None)
def _build_Pi(n: int) -> FinitePoset:
    if n < 0:
        raise ValueError("n must be non-negative")
    raw = list(set_partitions(range(1, n + 2)))
    index = {p: i for i, p in enumerate(raw)}
    pairs = []
    for i, p in enumerate(raw):
        k = len(p)
        for a in range(k):
            for b in range(a + 1, k):
                merged = tuple(sorted(p[a] + p[b]))
                q = tuple(sorted(p[:a] + p[a + 1 : b] + p[b + 1 :] + (merged,)))
                pairs.append((i, index[q]))
    elements = [PointedSetPartition.from_partition(p, n) for p in raw]
    return FinitePoset._build(elements, pairs, prune=False)


def build_C(n: int) -> FinitePoset:
    """Pointed compositions of ``n`` ordered by adding adjacent entries."""
    bounds.check("C", n)
    return _build_C(n)


@lru_cache(maxsize=None)
def _build_C(n: int) -> FinitePoset:
    if n < 0:
        raise ValueError("n must be non-negative")
    elements = [
        PointedComposition(interior, n - s)
        for s in range(n, -1, -1)
        for interior in compositions(s)
    ]
    index = {e: i for i, e in enumerate(elements)}
    pairs = []
    for x in elements:
        parts = x.parts
        for a in range(len(parts) - 1):
            merged = parts[:a] + (parts[a] + parts[a + 1],) + parts[a + 2 :]
            pairs.append((index[x], index[PointedComposition.from_parts(merged)]))
    return FinitePoset._build(elements, pairs, prune=False)


# -- type filters -------------------------------------------------------------


def _as_pip(g) -> PointedIntegerPartition:
    if isinstance(g, PointedIntegerPartition):
        return g
    if isinstance(g, str):
        return PointedIntegerPartition.parse(g)
    raise TypeError(f"expected a pointed integer partition, got {g!r}")


def type_filter(n: int, generators) -> PosetFilter:
    """The filter of ``I_n`` generated by the given pointed partitions (or literals)."""
    gens = [_as_pip(g) for g in generators]
    for g in gens:
        if g.n != n:
            raise MismatchedN(f"generator {g} is a pointed partition of {g.n}, not {n}")
    return build_I(n).filter_generated(gens)


def filter_by_max_parts(n: int, k: int) -> PosetFilter:
    """Pointed partitions of ``n`` with at most ``k`` parts, the pointed part included."""
    if not 1 <= k <= n + 1:
        raise ValueError(f"k must lie in 1..{n + 1}")
    poset = build_I(n)
    return PosetFilter(poset, frozenset(x for x in poset if x.num_parts <= k))


def restrict_by_type(poset: FinitePoset, F: PosetFilter) -> FinitePoset:
    """Induced subposet of ``build_Pi(n)`` or ``build_C(n)`` on elements typed in ``F``."""
    members = [x for x in poset if x.type in F.members]
    n_poset = next(iter(poset)).n
    n_filter = next(iter(F.parent)).n
    if n_poset != n_filter:
        raise MismatchedN(f"poset is over n={n_poset} but the filter lives in I_{n_filter}")
    return poset.induced(members)
