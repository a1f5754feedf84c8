"""Knapsack partitions: multisets whose sub-multisets all have distinct sums."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

from .config import bounds
from .errors import (
    ConditionViolated,
    ConstructionMismatch,
    NotKnapsackInput,
    NotPrime,
    SumTooLarge,
)
from .pointed import PointedComposition, PointedIntegerPartition, integer_partitions, set_partitions


@dataclass(frozen=True)
class KnapsackCertificate:
    parts: tuple[int, ...]
    distinct_sums: int
    capacity: int
    pointed: int | None = None

    @property
    def is_knapsack(self) -> bool:
        return self.distinct_sums == self.capacity

    def as_dict(self) -> dict:
        return {
            "partition": ",".join(map(str, self.parts))
            + ("" if self.pointed is None else f"|{self.pointed}"),
            "distinct_sums": self.distinct_sums,
            "capacity": self.capacity,
            "is_knapsack": self.is_knapsack,
        }


def _normalise(lam) -> tuple[tuple[int, ...], int | None]:
    if isinstance(lam, PointedIntegerPartition):
        return lam.parts, lam.pointed
    parts = tuple(sorted((int(x) for x in lam), reverse=True))
    if any(x <= 0 for x in parts):
        raise ValueError(f"parts must be positive: {parts}")
    return parts, None


def _sumset(parts: Sequence[int]) -> int:
    """Bitset with bit s set iff some sub-multiset of ``parts`` sums to s."""
    reach = 1
    for value, mult in Counter(parts).items():
        acc = reach
        for t in range(1, mult + 1):
            acc |= reach << (t * value)
        reach = acc
    return reach


def subset_sums(lam: Iterable[int]) -> list[int]:
    """Sorted list of the distinct sums of sub-multisets of ``lam``."""
    bits = _sumset(_normalise(lam)[0])
    return [s for s in range(bits.bit_length()) if (bits >> s) & 1]


def is_knapsack(lam) -> KnapsackCertificate:
    """Compare the number of distinct sub-multiset sums with ``prod(m_i + 1)``."""
    parts, pointed = _normalise(lam)
    capacity = prod(m + 1 for m in Counter(parts).values())
    return KnapsackCertificate(parts, _sumset(parts).bit_count(), capacity, pointed)


def _require_knapsack(parts) -> None:
    cert = is_knapsack(parts)
    if not cert.is_knapsack:
        raise NotKnapsackInput(
            f"{list(cert.parts)} is not a knapsack partition "
            f"({cert.distinct_sums} distinct sums, capacity {cert.capacity})"
        )


def family_weighted(e_list: Sequence[int], m_list: Sequence[int]) -> tuple[int, ...]:
    """The multiset ``{e_1^m_1, ..., e_q^m_q}`` when ``sum_{i<j} m_i e_i <= e_j``.

    The weak inequality is checked first (ConditionViolated); the result is
    then run through :func:`is_knapsack`, and ConstructionMismatch is raised
    if it fails. That happens exactly when some bound is attained with
    equality, e.g. ``e=(1, 2), m=(2, 1)`` where ``1 + 1 = 2``.
    """
    if len(e_list) != len(m_list) or not e_list:
        raise ValueError("e_list and m_list must be non-empty and of equal length")
    if any(x <= 0 for x in (*e_list, *m_list)):
        raise ValueError("values and multiplicities must be positive")
    if len(set(e_list)) != len(e_list):
        raise ValueError("values must be distinct")
    total = 0
    for j in range(1, len(e_list)):
        total += m_list[j - 1] * e_list[j - 1]
        if total > e_list[j]:
            raise ConditionViolated(f"sum of earlier parts {total} exceeds e_{j + 1} = {e_list[j]}")
    parts = tuple(sorted((e for e, m in zip(e_list, m_list) for _ in range(m)), reverse=True))
    cert = is_knapsack(parts)
    if not cert.is_knapsack:
        raise ConstructionMismatch(
            f"{list(parts)} satisfies the weighted condition but is not knapsack "
            f"({cert.distinct_sums} distinct sums < capacity {cert.capacity})",
            cert,
        )
    return parts


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def family_modular(lam: Sequence[int], q: int, j: int) -> tuple[int, ...]:
    """``{j * x mod q : x in lam}`` for a knapsack ``lam`` and a prime ``q > sum(lam)``."""
    parts, _ = _normalise(lam)
    _require_knapsack(parts)
    if not _is_prime(q):
        raise NotPrime(q)
    if q <= sum(parts):
        raise SumTooLarge(f"q={q} must exceed sum(lam)={sum(parts)}")
    if not 1 <= j < q:
        raise ValueError(f"j must lie in 1..{q - 1}")
    out = tuple(sorted(((j * x) % q for x in parts), reverse=True))
    cert = is_knapsack(out)
    if not cert.is_knapsack:
        raise ConstructionMismatch(f"modular image {list(out)} is not knapsack", cert)
    return out


def decompose(value: int, lam: Sequence[int]) -> tuple[int, ...] | None:
    """The sub-multiset of ``lam`` summing to ``value`` (non-increasing), if any.

    For a knapsack partition it is unique; otherwise the first one found is
    returned.
    """
    counts = sorted(Counter(lam).items(), reverse=True)

    def search(i, rest):
        if rest == 0:
            return ()
        if i == len(counts):
            return None
        v, m = counts[i]
        for t in range(min(m, rest // v), -1, -1):
            tail = search(i + 1, rest - t * v)
            if tail is not None:
                return (v,) * t + tail
        return None

    return search(0, value)


def _distinct_orderings(items: list) -> list[tuple]:
    counts = Counter(items)
    keys = sorted(counts)
    out: list = []

    def rec(prefix):
        if len(prefix) == len(items):
            out.append(tuple(prefix))
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                rec(prefix)
                prefix.pop()
                counts[k] += 1

    rec([])
    return out


def build_V(lam, m: int) -> frozenset[PointedComposition]:
    """Compositions ``(c_1, ..., c_{k-1} | m)`` splitting ``lam`` into blocks of
    pairwise distinct part values, in every order."""
    parts, _ = _normalise(lam)
    _require_knapsack(parts)
    if m < 0:
        raise ValueError("m must be non-negative")
    shapes = set()
    for blocks in set_partitions(range(len(parts))):
        values = [tuple(parts[i] for i in b) for b in blocks]
        if all(len(set(v)) == len(v) for v in values):
            shapes.add(tuple(sorted(sum(v) for v in values)))
    return frozenset(
        PointedComposition(order, m) for sums in shapes for order in _distinct_orderings(list(sums))
    )


def in_V(c: PointedComposition, lam, m: int) -> bool:
    """Membership test for ``build_V(lam, m)`` without building the set."""
    parts, _ = _normalise(lam)
    if c.pointed != m:
        return False
    used: Counter = Counter()
    for entry in c.interior:
        d = decompose(entry, parts)
        if d is None or len(set(d)) != len(d):
            return False
        used.update(d)
    return used == Counter(parts)


def census(n: int, include_all: bool = False) -> list[KnapsackCertificate]:
    """Certificates for the partitions of ``n`` in reverse lexicographic order.

    Only the knapsack ones unless ``include_all``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    bounds.check("census", n)
    certs = (is_knapsack(lam) for lam in integer_partitions(n))
    return [c for c in certs if include_all or c.is_knapsack]
