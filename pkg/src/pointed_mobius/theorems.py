"""Möbius values of type-restricted pointed partition posets, several ways.

Every closed form here comes with a brute-force counterpart that builds the
poset and runs the generic recursion, so the two can be compared.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial

from .config import bounds
from .errors import DivisibilityMismatch, EmptyFilter, MismatchedN, OutOfRange
from .knapsack import build_V, is_knapsack
from .perms import beta
from .pointed import (
    PointedComposition,
    PointedIntegerPartition,
    PointedSetPartition,
    build_C,
    build_Pi,
    restrict_by_type,
    set_partitions,
    type_filter,
)
from .poset import BOTTOM, FinitePoset, PosetFilter


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _as_filter(n: int, F) -> PosetFilter:
    if not isinstance(F, PosetFilter):
        F = type_filter(n, F)
    if not F.members:
        raise EmptyFilter("the filter is empty")
    if next(iter(F.members)).n != n:
        raise MismatchedN(f"filter does not live in I_{n}")
    return F


def mu_bruteforce(n: int, F) -> int:
    """``mu(0, 1)`` of ``Pi_n(F)`` with a bottom adjoined, by direct recursion.

    ``F`` is a filter of ``build_I(n)`` or a list of generators for one.
    """
    F = _as_filter(n, F)
    bounds.check("Pi", n)
    P = restrict_by_type(build_Pi(n), F).adjoin_bottom()
    top = PointedSetPartition((), tuple(range(1, n + 1)))
    return P.mobius(BOTTOM, top)


def restricted_compositions(n: int, F) -> FinitePoset:
    """``C_n(F)`` with a bottom adjoined."""
    F = _as_filter(n, F)
    return restrict_by_type(build_C(n), F).adjoin_bottom()


def descent_sum_terms(n: int, F) -> list[tuple[PointedComposition, int, int]]:
    """Non-vanishing ``(c, mu(0, c), beta(c))`` of the descent-statistic sum."""
    CF = restricted_compositions(n, F)
    terms = []
    for c, mu in CF.mobius_from(BOTTOM).items():
        if c is not BOTTOM and mu:
            terms.append((c, mu, beta(c)))
    return terms


def mu_theorem1(n: int, F) -> int:
    """``sum over c in C_n(F) of (-1)^rho(c, 1) * mu(0, c) * beta(c)``.

    ``rho(c, 1)`` is the number of parts of ``c`` minus one.
    """
    return sum(_sign(c.num_parts - 1) * mu * b for c, mu, b in descent_sum_terms(n, F))


def mu_r_divisible(n: int, r: int, m: int) -> int:
    """Closed form for the poset where the zero block has at least ``m``
    elements and every other block size is a multiple of ``r``."""
    if r < 1 or m < 0 or n - m <= 0 or (n - m) % r:
        raise DivisibilityMismatch(f"n - m = {n - m} is not a positive multiple of r = {r}")
    p = (n - m) // r
    return _sign(p + 1) * beta(PointedComposition((r,) * p, m))


def r_divisible_filter(n: int, r: int, m: int) -> PosetFilter:
    if r < 1 or m < 0 or n - m <= 0 or (n - m) % r:
        raise DivisibilityMismatch(f"n - m = {n - m} is not a positive multiple of r = {r}")
    return type_filter(n, [PointedIntegerPartition((r,) * ((n - m) // r), m)])


def mu_r_divisible_lattice(n: int, r: int) -> int:
    """``mu`` of the lattice of partitions of an n-set into blocks of size
    divisible by ``r``, bottom adjoined, via the pointed form with ``m = r - 1``."""
    if r < 1 or n <= 0 or n % r:
        raise DivisibilityMismatch(f"{n} is not a positive multiple of {r}")
    if n == r:
        # a single block: the poset is a 2-chain
        return -1
    return mu_r_divisible(n - 1, r, r - 1)


def mu_r_divisible_lattice_bruteforce(n: int, r: int) -> int:
    """The same value from the partition lattice of ``{1, ..., n}`` itself."""
    if r < 1 or n <= 0 or n % r:
        raise DivisibilityMismatch(f"{n} is not a positive multiple of {r}")
    bounds.check("Pi", n - 1)
    elements = [p for p in set_partitions(range(1, n + 1)) if all(len(b) % r == 0 for b in p)]
    index = {p: i for i, p in enumerate(elements)}
    pairs = []
    for i, p in enumerate(elements):
        for a in range(len(p)):
            for b in range(a + 1, len(p)):
                merged = tuple(sorted(p[a] + p[b]))
                q = tuple(sorted(p[:a] + p[a + 1 : b] + p[b + 1 :] + (merged,)))
                pairs.append((i, index[q]))
    P = FinitePoset._build(elements, pairs, prune=False).adjoin_bottom()
    return P.mobius(BOTTOM, ((tuple(range(1, n + 1)),)))


def mu_knapsack(lam, m: int | None = None) -> int:
    """``(-1)^(p-1)`` times the number of permutations whose descent
    composition lies in ``build_V(lam, m)``; ``p`` is the number of parts."""
    if isinstance(lam, PointedIntegerPartition):
        lam, m = lam.parts, lam.pointed
    lam = tuple(lam)
    return _sign(len(lam) - 1) * sum(beta(c) for c in build_V(lam, m))


@lru_cache(maxsize=None)
def stirling2(n: int, j: int) -> int:
    """Set partitions of an n-set into exactly j blocks."""
    if n < 0 or not 0 <= j <= n:
        raise OutOfRange(f"stirling2 needs 0 <= j <= n, got n={n}, j={j}")
    if n == 0:
        return 1
    if j == 0:
        return 0
    left = stirling2(n - 1, j - 1) if j - 1 <= n - 1 else 0
    right = j * stirling2(n - 1, j) if j <= n - 1 else 0
    return left + right


@lru_cache(maxsize=None)
def eulerian(n: int, j: int) -> int:
    """Permutations of ``S_n`` with ``j - 1`` descents (``A(0, 0) = 1`` by convention)."""
    if n < 0 or not 0 <= j <= n:
        raise OutOfRange(f"eulerian needs 0 <= j <= n, got n={n}, j={j}")
    if n == 0:
        return 1
    if j == 0:
        return 0
    same = j * eulerian(n - 1, j) if j <= n - 1 else 0
    up = (n - j + 1) * eulerian(n - 1, j - 1) if j - 1 <= n - 1 else 0
    return same + up


def stirling_side(n: int, k: int) -> int:
    """``-sum_{j=1..k} (-1)^(j-1) (j-1)! S(n+1, j)``."""
    return -sum(_sign(j - 1) * factorial(j - 1) * stirling2(n + 1, j) for j in range(1, k + 1))


def eulerian_side(n: int, k: int) -> int:
    """``(-1)^k sum_{j=1..k} C(n-j, n-k) A(n, j)``."""
    return _sign(k) * sum(comb(n - j, n - k) * eulerian(n, j) for j in range(1, k + 1))


def verify_eulerian_stirling(n: int, k: int) -> bool:
    if not 1 <= k <= n:
        raise OutOfRange(f"need 1 <= k <= n, got n={n}, k={k}")
    return stirling_side(n, k) == eulerian_side(n, k)


@dataclass
class MobiusReport:
    n: int
    generators: list[str]
    theorem1: int
    bruteforce: int | None = None
    knapsack: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def values(self) -> list[int]:
        return [v for v in (self.bruteforce, self.theorem1, self.knapsack) if v is not None]

    @property
    def agree(self) -> bool:
        return len(set(self.values)) <= 1

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "generators": self.generators,
            "bruteforce": self.bruteforce,
            "theorem1": self.theorem1,
            "knapsack": self.knapsack,
            "agree": self.agree,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def compare(n: int, generators) -> MobiusReport:
    """Evaluate every applicable method on the filter generated by ``generators``."""
    F = _as_filter(n, generators)
    gens = F.generators()
    report = MobiusReport(n, [str(g) for g in gens], mu_theorem1(n, F))
    if n <= bounds.Pi:
        report.bruteforce = mu_bruteforce(n, F)
    else:
        report.notes.append(f"brute force skipped: n={n} exceeds Pi bound {bounds.Pi}")
    if len(gens) == 1 and is_knapsack(gens[0].parts).is_knapsack:
        report.knapsack = mu_knapsack(gens[0])
    return report
