"""Finite posets built from cover relations.

Elements are arbitrary hashable labels; the domain modules use frozen
dataclasses whose ``str`` is a canonical key. Internally each element gets an
index, and the principal down-set of every element is stored as a Python int
used as a bitset. Möbius values are computed row by row with the standard
recursion ``mu(x, y) = -sum(mu(x, z) for x <= z < y)``; a row is the vector
``mu(x, .)`` and is memoised per source element.

A built poset is never mutated. The lazily filled caches only ever gain
entries, so concurrent queries at worst repeat some work.
"""

from __future__ import annotations

import json
import warnings
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator

import numpy as np

from .errors import (
    ArithmeticOverflow,
    CycleDetected,
    NotComparable,
    NotGraded,
    RedundantCoverWarning,
    UnknownElement,
)

# int64 sums are exact while (max |term|) * (number of terms) stays below this
_SAFE_SUM = 1 << 62


class _Bottom:
    """Label of an adjoined minimal element. There is exactly one instance."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "BOTTOM"

    def __str__(self):
        return "0^"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()


def _bits_to_indices(bits: int, size: int) -> np.ndarray:
    raw = np.frombuffer(bits.to_bytes((size + 7) // 8 or 1, "little"), dtype=np.uint8)
    return np.flatnonzero(np.unpackbits(raw, bitorder="little")).astype(np.int32)


class FinitePoset:
    """An immutable finite poset.

    Use :func:`from_cover_relations` (or the builders in the domain modules)
    rather than calling the constructor directly.
    """

    def __init__(self, elements, lower, upper, order, down):
        self._elements = list(elements)
        self._index = {e: i for i, e in enumerate(self._elements)}
        self._lower = lower
        self._upper = upper
        self._order = order  # a linear extension, bottom first
        self._down = down
        self._down_idx: list | None = None
        self._up_bits: list | None = None
        self._rows: dict[int, np.ndarray] = {}
        self._ranks: tuple[list[int], list[int]] | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def _build(cls, elements, cover_pairs, prune=True):
        n = len(elements)
        lower = [[] for _ in range(n)]
        upper = [[] for _ in range(n)]
        for i, j in sorted(set(cover_pairs)):
            lower[j].append(i)
            upper[i].append(j)

        indeg = [len(l) for l in lower]
        queue = deque(i for i in range(n) if indeg[i] == 0)
        order = []
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in upper[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(order) != n:
            stuck = [elements[i] for i in range(n) if indeg[i] > 0]
            raise CycleDetected(f"cover relation has a directed cycle through {stuck[:5]}")

        down = [0] * n
        for j in order:
            bits = 1 << j
            for i in lower[j]:
                bits |= down[i]
            down[j] = bits

        if prune:
            redundant = []
            for j in range(n):
                if len(lower[j]) < 2:
                    continue
                for i in lower[j]:
                    if any(k != i and (down[k] >> i) & 1 for k in lower[j]):
                        redundant.append((i, j))
            if redundant:
                warnings.warn(
                    f"pruned {len(redundant)} redundant cover(s), e.g. "
                    f"{elements[redundant[0][0]]!r} < {elements[redundant[0][1]]!r}",
                    RedundantCoverWarning,
                    stacklevel=3,
                )
                for i, j in redundant:
                    lower[j].remove(i)
                    upper[i].remove(j)
        return cls(elements, lower, upper, order, down)

    # -- basic access -----------------------------------------------------

    @property
    def elements(self) -> tuple:
        return tuple(self._elements)

    def __len__(self):
        return len(self._elements)

    def __iter__(self) -> Iterator:
        return iter(self._elements)

    def __contains__(self, x):
        try:
            return x in self._index
        except TypeError:
            return False

    def __repr__(self):
        return f"<FinitePoset with {len(self)} elements>"

    def index(self, x) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise UnknownElement(x) from None

    def covers(self) -> list[tuple]:
        """All cover pairs ``(x, y)`` with ``x`` covered by ``y``."""
        e = self._elements
        return [(e[i], e[j]) for j in range(len(e)) for i in self._lower[j]]

    def cover_indices(self) -> list[tuple[int, int]]:
        return sorted((i, j) for j in range(len(self)) for i in self._lower[j])

    def upper_covers(self, x) -> list:
        return [self._elements[j] for j in self._upper[self.index(x)]]

    def lower_covers(self, x) -> list:
        return [self._elements[i] for i in self._lower[self.index(x)]]

    def linear_extension(self) -> list:
        return [self._elements[i] for i in self._order]

    # -- order queries ----------------------------------------------------

    def leq(self, x, y) -> bool:
        return bool((self._down[self.index(y)] >> self.index(x)) & 1)

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def _up_mark(self, i: int) -> bytearray:
        mark = bytearray(len(self))
        mark[i] = 1
        stack = [i]
        while stack:
            for j in self._upper[stack.pop()]:
                if not mark[j]:
                    mark[j] = 1
                    stack.append(j)
        return mark

    def up_set(self, x) -> list:
        mark = self._up_mark(self.index(x))
        return [self._elements[j] for j in self._order if mark[j]]

    def down_set(self, x) -> list:
        idx = self._down_indices(self.index(x))
        return [self._elements[i] for i in idx]

    def interval(self, x, y) -> list:
        if not self.leq(x, y):
            raise NotComparable(f"{x!r} is not below {y!r}")
        iy = self.index(y)
        return [e for e in self.up_set(x) if (self._down[iy] >> self._index[e]) & 1]

    def minimal_elements(self) -> list:
        return [self._elements[i] for i in self._order if not self._lower[i]]

    def maximal_elements(self) -> list:
        return [self._elements[i] for i in self._order if not self._upper[i]]

    def bottom(self):
        """The least element, or None."""
        m = self.minimal_elements()
        return m[0] if len(m) == 1 else None

    def top(self):
        """The greatest element, or None."""
        m = self.maximal_elements()
        return m[0] if len(m) == 1 else None

    def has_top(self) -> bool:
        return self.top() is not None

    def atoms(self) -> list:
        """Elements covering the least element; the minimal elements if there is none."""
        b = self.bottom()
        if b is None:
            return self.minimal_elements()
        return self.upper_covers(b)

    # -- Möbius function --------------------------------------------------

    def _down_indices(self, i: int) -> np.ndarray:
        if self._down_idx is None:
            self._down_idx = [None] * len(self)
        idx = self._down_idx[i]
        if idx is None:
            idx = _bits_to_indices(self._down[i], len(self))
            self._down_idx[i] = idx
        return idx

    def _mobius_row(self, i: int) -> np.ndarray:
        row = self._rows.get(i)
        if row is not None:
            return row
        mark = self._up_mark(i)
        mu = np.zeros(len(self), dtype=np.int64)
        mu[i] = 1
        largest = 1
        for j in self._order:
            if j == i or not mark[j]:
                continue
            # entries outside [i, j] are zero, and mu[j] itself is still zero
            idx = self._down_indices(j)
            if largest * len(idx) >= _SAFE_SUM:
                raise ArithmeticOverflow(
                    f"Möbius sum below {self._elements[j]!r} may overflow 64 bits"
                )
            v = -int(mu[idx].sum())
            mu[j] = v
            largest = max(largest, abs(v))
        self._rows[i] = mu
        return mu

    def mobius(self, x, y) -> int:
        """The Möbius function ``mu(x, y)``; requires ``x <= y``."""
        i, j = self.index(x), self.index(y)
        if not (self._down[j] >> i) & 1:
            raise NotComparable(f"{x!r} is not below {y!r}")
        return int(self._mobius_row(i)[j])

    def mobius_from(self, x) -> dict:
        """``{y: mu(x, y)}`` for every ``y >= x``."""
        i = self.index(x)
        row = self._mobius_row(i)
        mark = self._up_mark(i)
        return {self._elements[j]: int(row[j]) for j in self._order if mark[j]}

    def zeta_matrix(self) -> np.ndarray:
        """Dense 0/1 matrix with ``Z[i, j] = 1`` iff element i <= element j."""
        n = len(self)
        z = np.zeros((n, n), dtype=np.int64)
        for j in range(n):
            z[self._down_indices(j), j] = 1
        return z

    # -- ranks ------------------------------------------------------------

    def _rank_bounds(self):
        if self._ranks is None:
            n = len(self)
            lo, hi = [0] * n, [0] * n
            for j in self._order:
                if self._lower[j]:
                    lo[j] = 1 + min(lo[i] for i in self._lower[j])
                    hi[j] = 1 + max(hi[i] for i in self._lower[j])
            self._ranks = (lo, hi)
        return self._ranks

    def rank(self, x) -> int:
        """Length of every saturated chain from a minimal element up to ``x``."""
        i = self.index(x)
        lo, hi = self._rank_bounds()
        if lo[i] != hi[i]:
            raise NotGraded(f"chains below {x!r} have lengths {lo[i]}..{hi[i]}")
        return hi[i]

    def _locally_ranked(self) -> bool:
        lo, hi = self._rank_bounds()
        return lo == hi

    def is_graded(self) -> bool:
        """True iff all maximal chains have the same length."""
        if not self._locally_ranked():
            return False
        return len({self.rank(m) for m in self.maximal_elements()}) <= 1

    def rank_difference(self, x, y) -> int:
        """``rho(x, y)``, the common length of the maximal chains of ``[x, y]``."""
        i, j = self.index(x), self.index(y)
        if not (self._down[j] >> i) & 1:
            raise NotComparable(f"{x!r} is not below {y!r}")
        if self._locally_ranked():
            _, hi = self._rank_bounds()
            return hi[j] - hi[i]
        mark = self._up_mark(i)
        lo, hi = {i: 0}, {i: 0}
        for k in self._order:
            if k == i or not mark[k] or not (self._down[j] >> k) & 1:
                continue
            below = [l for l in self._lower[k] if l in lo]
            lo[k] = 1 + min(lo[l] for l in below)
            hi[k] = 1 + max(hi[l] for l in below)
        if lo[j] != hi[j]:
            raise NotGraded(f"interval [{x!r}, {y!r}] has chains of lengths {lo[j]}..{hi[j]}")
        return hi[j]

    # -- lattice structure -------------------------------------------------

    def _ups(self) -> list[int]:
        if self._up_bits is None:
            up = [0] * len(self)
            for i in reversed(self._order):
                bits = 1 << i
                for j in self._upper[i]:
                    bits |= up[j]
                up[i] = bits
            self._up_bits = up
        return self._up_bits

    def _least(self, bits: int, sets: list[int]):
        if not bits:
            return None
        for k in _bits_to_indices(bits, len(self)):
            if sets[k] == bits:
                return int(k)
        return None

    def join(self, x, y):
        """Least upper bound, or None if it does not exist."""
        up = self._ups()
        k = self._least(up[self.index(x)] & up[self.index(y)], up)
        return None if k is None else self._elements[k]

    def meet(self, x, y):
        """Greatest lower bound, or None if it does not exist."""
        k = self._least(self._down[self.index(x)] & self._down[self.index(y)], self._down)
        return None if k is None else self._elements[k]

    def is_lattice(self) -> bool:
        n = len(self)
        if n == 0:
            return False
        up = self._ups()
        for i in range(n):
            for j in range(i + 1, n):
                if self._least(up[i] & up[j], up) is None:
                    return False
                if self._least(self._down[i] & self._down[j], self._down) is None:
                    return False
        return True

    # -- derived posets ----------------------------------------------------

    def filter_generated(self, generators: Iterable) -> PosetFilter:
        """The filter ``{y : x <= y for some generator x}``."""
        mark = bytearray(len(self))
        for g in generators:
            m = self._up_mark(self.index(g))
            for j, v in enumerate(m):
                if v:
                    mark[j] = 1
        members = frozenset(self._elements[j] for j in range(len(self)) if mark[j])
        return PosetFilter(self, members)

    def is_upward_closed(self, members) -> bool:
        keep = {self.index(x) for x in members}
        return all(j in keep for i in keep for j in self._upper[i])

    def induced(self, members: Iterable) -> FinitePoset:
        """The induced subposet on ``members`` (parent element order kept)."""
        keep = sorted({self.index(x) for x in members})
        new = {old: k for k, old in enumerate(keep)}
        elements = [self._elements[i] for i in keep]
        if all(j in new for i in keep for j in self._upper[i]):
            # upward closed: covers of the parent restrict to covers
            pairs = [(new[i], new[j]) for j in keep for i in self._lower[j] if i in new]
            return FinitePoset._build(elements, pairs, prune=False)
        mask = 0
        for i in keep:
            mask |= 1 << i
        pairs = []
        for j in keep:
            strict = self._down[j] & mask & ~(1 << j)
            covered = 0
            for k in _bits_to_indices(strict, len(self)):
                covered |= self._down[int(k)] & ~(1 << int(k))
            for i in _bits_to_indices(strict & ~covered, len(self)):
                pairs.append((new[int(i)], new[j]))
        return FinitePoset._build(elements, pairs, prune=False)

    def adjoin_bottom(self, label=BOTTOM) -> FinitePoset:
        """A copy with a new least element covered by the minimal elements."""
        if label in self:
            raise ValueError(f"{label!r} is already an element")
        n = len(self)
        bit = 1 << n
        lower = [list(l) for l in self._lower] + [[]]
        upper = [list(u) for u in self._upper] + [[]]
        for i in range(n):
            if not self._lower[i]:
                lower[i].append(n)
                upper[n].append(i)
        down = [d | bit for d in self._down] + [bit]
        return FinitePoset(self._elements + [label], lower, upper, [n] + self._order, down)

    # -- export -----------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {
                "elements": [str(e) for e in self._elements],
                "covers": [list(p) for p in self.cover_indices()],
            }
        )

    def to_dot(self, name: str = "P", node_attrs: dict | None = None) -> str:
        """Hasse diagram in DOT, bottom-up, one ``rank=same`` group per level."""
        _, level = self._rank_bounds()
        node_attrs = node_attrs or {}
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=plaintext];"]
        for i, e in enumerate(self._elements):
            attrs = {"label": str(e), **node_attrs.get(e, {})}
            body = ", ".join(f'{k}="{v}"' for k, v in attrs.items())
            lines.append(f"  n{i} [{body}];")
        for lv in sorted(set(level)):
            same = " ".join(f"n{i};" for i in range(len(self)) if level[i] == lv)
            lines.append(f"  {{ rank=same; {same} }}")
        for i, j in self.cover_indices():
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def from_cover_relations(elements: Iterable[Hashable], covers: Iterable[tuple]) -> FinitePoset:
    """Build a poset from its elements and cover pairs ``(x, y)``, x below y.

    Transitive pairs are tolerated: they are pruned with a
    :class:`RedundantCoverWarning`. A directed cycle raises CycleDetected.
    """
    elements = list(elements)
    index = {}
    for e in elements:
        if e in index:
            raise ValueError(f"duplicate element {e!r}")
        index[e] = len(index)
    pairs = []
    for x, y in covers:
        if x not in index:
            raise UnknownElement(x)
        if y not in index:
            raise UnknownElement(y)
        if x == y:
            raise CycleDetected(f"self-cover on {x!r}")
        pairs.append((index[x], index[y]))
    return FinitePoset._build(elements, pairs)


@dataclass(frozen=True)
class PosetFilter:
    """An upward-closed subset of ``parent``."""

    parent: FinitePoset
    members: frozenset

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return (e for e in self.parent if e in self.members)

    def __len__(self):
        return len(self.members)

    def is_upward_closed(self) -> bool:
        return self.parent.is_upward_closed(self.members)

    def generators(self) -> list:
        """Minimal members, which generate the filter."""
        p = self.parent
        return [x for x in self if not any(y in self.members for y in p.lower_covers(x))]

    def as_poset(self) -> FinitePoset:
        return self.parent.induced(self.members)
