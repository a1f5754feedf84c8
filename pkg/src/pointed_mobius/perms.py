"""Descent sets, descent compositions and the beta statistic.

Permutations are tuples of the values ``tau(1), ..., tau(n)`` (one-indexed
values, as in the usual one-line notation) with text form ``"3 1 2"``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Sequence

from .config import bounds
from .errors import MalformedComposition, ParseError, SumMismatch
from .pointed import PointedComposition


def check_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"not a permutation of 1..{len(perm)}: {perm}")
    return perm


def parse_permutation(text: str) -> tuple[int, ...]:
    try:
        return check_permutation(int(t) for t in text.split())
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_permutation(perm: Sequence[int]) -> str:
    return " ".join(map(str, perm))


def _descents(perm) -> list[int]:
    return [i for i in range(1, len(perm)) if perm[i - 1] > perm[i]]


def descent_set(perm: Sequence[int]) -> frozenset[int]:
    """Positions ``i`` with ``tau(i) > tau(i+1)``."""
    return frozenset(_descents(check_permutation(perm)))


def composition_from_descent_set(descents: Iterable[int], n: int) -> tuple[int, ...]:
    """Gaps between consecutive elements of ``{0} + descents + {n}``."""
    cuts = [0, *sorted(descents), n]
    if n > 0 and not all(0 < c < n for c in cuts[1:-1]):
        raise ValueError(f"descent positions must lie in 1..{n - 1}")
    return tuple(b - a for a, b in zip(cuts, cuts[1:])) if n > 0 else ()


def partial_sums(parts: Sequence[int]) -> tuple[int, ...]:
    """``(c_1, c_1 + c_2, ..., c_1 + ... + c_{k-1})``, the total excluded."""
    out, s = [], 0
    for c in parts[:-1]:
        s += c
        out.append(s)
    return tuple(out)


def _descent_composition(perm) -> tuple[int, ...]:
    n = len(perm)
    out, last = [], 0
    for i in range(1, n):
        if perm[i - 1] > perm[i]:
            out.append(i - last)
            last = i
    if n:
        out.append(n - last)
    return tuple(out)


def descent_composition(perm: Sequence[int]) -> tuple[int, ...]:
    return _descent_composition(check_permutation(perm))


def multinomial(n: int, parts: Sequence[int]) -> int:
    """``n! / (c_1! ... c_k!)``; parts may be zero."""
    if any(c < 0 for c in parts):
        raise MalformedComposition(f"negative part in {tuple(parts)}")
    if sum(parts) != n:
        raise SumMismatch(f"parts {tuple(parts)} do not sum to {n}")
    out = factorial(n)
    for c in parts:
        out //= factorial(c)
    return out


@lru_cache(maxsize=None)
def _descent_table(n: int) -> dict[tuple[int, ...], int]:
    return dict(Counter(_descent_composition(p) for p in permutations(range(1, n + 1))))


def enumerate_by_descent_composition(n: int) -> dict[tuple[int, ...], int]:
    """Counts of permutations of ``S_n`` by descent composition (full enumeration)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    bounds.check("perm", n)
    return dict(_descent_table(n))


@lru_cache(maxsize=None)
def _fixed_last_table(n: int) -> dict[tuple[int, ...], int]:
    # permutations of S_{n+1} with tau(n+1) = n+1
    top = (n + 1,)
    return dict(Counter(_descent_composition(p + top) for p in permutations(range(1, n + 1))))


def beta(c: PointedComposition) -> int:
    """Number of permutations whose descent set is exactly the partial sums of ``c``.

    ``(0|)`` gives 1 and any composition with k >= 2 parts and last part 0
    gives 0. Small n is answered from a full enumeration of ``S_n``, larger n
    by inclusion-exclusion.
    """
    if not c.interior:
        return 1
    if c.pointed == 0:
        return 0
    n = c.n
    if n <= bounds.beta_enum:
        return _descent_table(n).get(c.parts, 0)
    return beta_by_inclusion_exclusion(c)


def beta_by_inclusion_exclusion(c: PointedComposition) -> int:
    """``sum over coarsenings d >= c of (-1)^(rho(c, d)) * multinomial(n, d)``."""
    n = c.n
    cuts = partial_sums(c.parts)
    total = 0
    for size in range(len(cuts) + 1):
        sign = -1 if (len(cuts) - size) % 2 else 1
        for kept in combinations(cuts, size):
            bounds_ = (0, *kept, n)
            total += sign * multinomial(n, [b - a for a, b in zip(bounds_, bounds_[1:])])
    return total


def beta_fixed_last(c: PointedComposition) -> int:
    """Permutations of ``S_{n+1}`` fixing ``n+1`` with descent composition
    ``(c_1, ..., c_{k-1}, c_k + 1)``."""
    n = c.n
    bounds.check("perm", n + 1)
    return _fixed_last_table(n).get(c.interior + (c.pointed + 1,), 0)


def beta_witnesses(c: PointedComposition) -> list[tuple[int, ...]]:
    """The permutations counted by :func:`beta`, in lexicographic order."""
    n = c.n
    bounds.check("perm", n)
    if not c.interior:
        return [tuple(range(1, n + 1))]
    if c.pointed == 0:
        return []
    return [p for p in permutations(range(1, n + 1)) if _descent_composition(p) == c.parts]


def count_with_descent_set(n: int, descents: Iterable[int], fix_last: bool = False) -> int:
    """Brute-force count of ``tau`` in ``S_n`` with the given descent set,
    optionally requiring ``tau(n) = n``."""
    bounds.check("perm", n)
    want = sorted(descents)
    count = 0
    for p in permutations(range(1, n + 1)):
        if fix_last and p[-1] != n:
            continue
        if _descents(p) == want:
            count += 1
    return count
