"""Named verification suites, each pairing a computation with an independent oracle.

``run_suites`` drives them for the ``verify`` command; the acceptance tests
call the suite functions directly.
"""

from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass, field
from itertools import combinations, product
from math import factorial
from typing import Callable

from .config import bounds
from .errors import ConstructionMismatch
from .knapsack import build_V, family_modular, family_weighted, is_knapsack
from .perms import beta, beta_by_inclusion_exclusion, beta_fixed_last, count_with_descent_set
from .permutahedron import verify_eulerian
from .pointed import (
    PointedComposition,
    build_C,
    build_I,
    build_Pi,
    filter_by_max_parts,
    integer_partitions,
)
from .permutahedron import mu_via_gamma
from .poset import BOTTOM
from .theorems import (
    eulerian_side,
    mu_bruteforce,
    mu_knapsack,
    mu_r_divisible,
    mu_r_divisible_lattice,
    mu_r_divisible_lattice_bruteforce,
    mu_theorem1,
    restricted_compositions,
    stirling_side,
    verify_eulerian_stirling,
)


@dataclass
class CheckResult:
    name: str
    claim: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def expect(self, ok: bool, **instance) -> None:
        self.checked += 1
        if not ok:
            self.failures.append({k: str(v) if not isinstance(v, (int, bool)) else v
                                  for k, v in instance.items()})

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.claim} ({self.checked} checks, {self.seconds:.1f}s)"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "passed": self.passed,
            "checked": self.checked,
            "failures": self.failures[:20],
            "notes": self.notes,
        }


def bell_numbers(n_max: int) -> list[int]:
    """Bell numbers by the Bell triangle."""
    row, out = [1], [1]
    for _ in range(n_max):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[0])
    return out


def knapsack_partitions_upto(total: int):
    """Pointed knapsack partitions ``(lam, m)`` with ``sum(lam) + m <= total``."""
    for n in range(total + 1):
        for s in range(n + 1):
            for lam in integer_partitions(s):
                if is_knapsack(lam).is_knapsack:
                    yield lam, n - s


def collision_free(lam) -> bool:
    """Oracle: distinct sub-multisets (as sorted tuples) never share a sum."""
    seen = {}
    for picks in product((0, 1), repeat=len(lam)):
        sub = tuple(sorted(x for x, t in zip(lam, picks) if t))
        s = sum(sub)
        if seen.setdefault(s, sub) != sub:
            return False
    return True


# -- suites -------------------------------------------------------------------


def check_descent_sum(n_max: int = 8) -> CheckResult:
    res = CheckResult("descent-sum", "brute-force mu(Pi_n(F)+0) equals the descent-statistic sum "
                             "over C_n(F), every single-generator filter")
    bell = bell_numbers(n_max + 1)
    res.expect(len(build_Pi(n_max)) == bell[n_max + 1], n=n_max, bell=bell[n_max + 1])
    for n in range(n_max + 1):
        I = build_I(n)
        for g in I:
            F = I.filter_generated([g])
            a, b = mu_bruteforce(n, F), mu_theorem1(n, F)
            res.expect(a == b, n=n, generator=g, bruteforce=a, theorem1=b)
    return res


def check_multi_generator(n_max: int = 6) -> CheckResult:
    res = CheckResult("multi-generator", "descent-statistic sum matches brute force for filters "
                                         "generated by two incomparable pointed partitions")
    for n in range(n_max + 1):
        I = build_I(n)
        for g, h in combinations(I, 2):
            if I.leq(g, h) or I.leq(h, g):
                continue
            F = I.filter_generated([g, h])
            a, b = mu_bruteforce(n, F), mu_theorem1(n, F)
            res.expect(a == b, n=n, generators=f"{g}; {h}", bruteforce=a, theorem1=b)
    return res


def check_knapsack_formula(total: int = 8) -> CheckResult:
    res = CheckResult("knapsack-formula", "(-1)^(p-1) * sum of beta over V equals brute-force mu "
                                  "for pointed knapsack generators")
    for lam, m in knapsack_partitions_upto(total):
        n = sum(lam) + m
        gen = [f"{','.join(map(str, lam))}|{m}"]
        a, b = mu_knapsack(lam, m), mu_bruteforce(n, gen)
        res.expect(a == b, generator=gen[0], knapsack=a, bruteforce=b)
    return res


LISTED_V = [(1, 1, 1, 4), (1, 1, 5), (1, 1, 4, 1), (1, 5, 1), (1, 4, 1, 1), (5, 1, 1), (4, 1, 1, 1)]


def check_vset_example(m_max: int = 4) -> CheckResult:
    res = CheckResult("vset-example", "V({1,1,1,4}, m) is exactly the seven listed compositions")
    for m in range(m_max + 1):
        V = build_V((1, 1, 1, 4), m)
        want = {PointedComposition(c, m) for c in LISTED_V}
        res.expect(V == want, m=m, got=sorted(map(str, V)))
        res.expect(PointedComposition((2, 1, 4), m) not in V, m=m, excluded="2,1,4")
    return res


def check_eulerian_stirling(n_max: int = 10) -> CheckResult:
    res = CheckResult("eulerian-stirling", "Stirling-side sum equals Eulerian-side sum; "
                                           "(-1)^n n! at k = n")
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            res.expect(verify_eulerian_stirling(n, k), n=n, k=k,
                       lhs=stirling_side(n, k), rhs=eulerian_side(n, k))
        want = (-1) ** n * factorial(n)
        res.expect(stirling_side(n, n) == want == eulerian_side(n, n), n=n, k=n)
    return res


def check_full_lattice(n_max: int = 7) -> CheckResult:
    res = CheckResult("full-lattice", "mu = (-1)^n n! when Pi_n(F)+0 is the whole lattice "
                                      "Pi_{n+1} (F = at most n parts)")
    for n in range(1, n_max + 1):
        F = filter_by_max_parts(n, n)
        got = mu_bruteforce(n, F)
        res.expect(got == (-1) ** n * factorial(n), n=n, got=got)
        # F = all of I_n keeps the bottom, so the adjoined 0 sits under it
        every = build_I(n).filter_generated(build_I(n).minimal_elements())
        res.expect(mu_bruteforce(n, every) == 0 == mu_theorem1(n, every), n=n, filter="all")
    res.notes.append("F = I_n itself contains the bottom of Pi_n; its value is 0 for n >= 1")
    return res


def check_tangent() -> CheckResult:
    res = CheckResult("tangent", "#{tau in S_8 : Des = {2,4,6}, tau(8) = 8} = 272 and matches "
                                 "the 2-divisible lattice on 8 elements")
    count = count_with_descent_set(8, {2, 4, 6}, fix_last=True)
    res.expect(count == 272, enumerated=count)
    closed = mu_r_divisible_lattice(8, 2)
    res.expect(closed == (-1) ** 4 * count, closed_form=closed, enumerated=count)
    brute = mu_r_divisible_lattice_bruteforce(8, 2)
    res.expect(brute == closed, bruteforce=brute, closed_form=closed)
    pointed = mu_r_divisible(7, 2, 1)
    res.expect(pointed == mu_bruteforce(7, ["2,2,2|1"]), pointed=pointed)
    return res


def check_q_eulerian(p_max: int = 4) -> CheckResult:
    res = CheckResult("q-eulerian", "mu(x, y) = (-1)^rho(x, y) on every interval of Q_p")
    for p in range(1, p_max + 1):
        res.expect(verify_eulerian(p), p=p)
    return res


def check_gamma_route(total: int = 9) -> CheckResult:
    res = CheckResult("gamma-route", "Möbius values read off Gamma agree with the recursion on "
                                   "C_n(F)+0 for every composition")
    for lam, m in knapsack_partitions_upto(total):
        n = sum(lam) + m
        CF = restricted_compositions(n, [f"{','.join(map(str, lam))}|{m}"])
        for c, mu in CF.mobius_from(BOTTOM).items():
            if c is BOTTOM:
                continue
            g = mu_via_gamma(lam, m, c)
            res.expect(g == mu, lam=lam, m=m, c=c, gamma=g, recursion=mu)
    return res


def check_knapsack_recognition(n_max: int = 14) -> CheckResult:
    res = CheckResult("knapsack-recognition", "is_knapsack agrees with the sub-multiset "
                                              "collision oracle")
    for n in range(n_max + 1):
        for lam in integer_partitions(n):
            a, b = is_knapsack(lam).is_knapsack, collision_free(lam)
            res.expect(a == b, lam=lam, is_knapsack=a, oracle=b)
    return res


def check_structure(pi_max: int = 8, c_max: int = 12, beta_max: int = 8) -> CheckResult:
    res = CheckResult("structure", "|Pi_n| = Bell(n+1), C_n = B_n, beta by three routes")
    bell = bell_numbers(pi_max + 1)
    for n in range(pi_max + 1):
        res.expect(len(build_Pi(n)) == bell[n + 1], n=n, size=len(build_Pi(n)))
    for n in range(c_max + 1):
        C = build_C(n)
        res.expect(len(C) == 2 ** n, n=n, size=len(C))
        # composition -> set of partial sums; covers must be single deletions
        sums = {}
        for c in C:
            acc, s = 0, []
            for x in c.interior:
                acc += x
                s.append(acc)
            sums[c] = frozenset(s)
        res.expect(len(set(sums.values())) == 2 ** n, n=n, bijective=False)
        boolean_covers = {
            (S, S - {x}) for S in sums.values() for x in S
        }
        poset_covers = {(sums[x], sums[y]) for x, y in C.covers()}
        res.expect(poset_covers == boolean_covers, n=n, cover_mismatch=True)
    for n in range(beta_max + 1):
        C = build_C(n)
        for c in C:
            a, b, d = beta(c), beta_by_inclusion_exclusion(c), beta_fixed_last(c)
            res.expect(a == b == d, c=c, enumeration=a, inclusion_exclusion=b, fixed_last=d)
    return res


def check_knapsack_families(seed: int = 0, trials: int = 200) -> CheckResult:
    res = CheckResult("knapsack-families", "weighted and modular constructions yield knapsack "
                                           "partitions (weighted: strict inequality)")
    rng = random.Random(seed)
    for _ in range(trials):
        q = rng.randint(1, 4)
        e, m = [rng.randint(1, 3)], [rng.randint(1, 3)]
        for _ in range(q - 1):
            floor = sum(a * b for a, b in zip(e, m))
            e.append(max(floor, e[-1] + 1) + rng.randint(0, 2))
            m.append(rng.randint(1, 2))
        strict = all(sum(a * b for a, b in zip(e[:j], m[:j])) < e[j] for j in range(1, len(e)))
        try:
            lam = family_weighted(e, m)
            res.expect(strict and is_knapsack(lam).is_knapsack, e=e, m=m)
        except ConstructionMismatch:
            res.expect(not strict, e=e, m=m, mismatch=True)
    for s in range(1, 11):
        for lam in integer_partitions(s):
            if not is_knapsack(lam).is_knapsack:
                continue
            for q in (x for x in range(s + 1, 24) if all(x % d for d in range(2, x))):
                for j in range(1, q):
                    res.expect(is_knapsack(family_modular(lam, q, j)).is_knapsack,
                               lam=lam, q=q, j=j)
    return res


@dataclass
class Suite:
    run: Callable
    default: int | None
    cap: Callable[[], int] | None


SUITES: dict[str, Suite] = {
    "descent-sum": Suite(check_descent_sum, 8, lambda: bounds.Pi),
    "knapsack-formula": Suite(check_knapsack_formula, 8, lambda: bounds.Pi),
    "vset-example": Suite(check_vset_example, 4, lambda: 20),
    "eulerian-stirling": Suite(check_eulerian_stirling, 10, lambda: 60),
    "full-lattice": Suite(check_full_lattice, 7, lambda: bounds.Pi),
    "tangent": Suite(lambda _=None: check_tangent(), None, None),
    "q-eulerian": Suite(check_q_eulerian, 4, lambda: min(5, bounds.Q)),
    "gamma-route": Suite(check_gamma_route, 9, lambda: bounds.C),
    "knapsack-recognition": Suite(check_knapsack_recognition, 14, lambda: 22),
    "structure": Suite(None, None, None),
    "multi-generator": Suite(check_multi_generator, 6, lambda: bounds.Pi),
    "knapsack-families": Suite(None, None, None),
}


def run_suites(names=None, n_max: int | None = None, seed: int = 0, log=None):
    """Run the named suites (all by default) and return their results."""
    log = log or sys.stderr
    names = list(names or SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError(f"unknown suite(s) {unknown}; choose from {sorted(SUITES)}")
    results = []
    for name in names:
        suite = SUITES[name]
        start = time.perf_counter()
        notes = []
        if name == "structure":
            if n_max is None:
                res = check_structure()
            else:
                sizes = (min(n_max, bounds.Pi), min(n_max, bounds.C), min(n_max, bounds.beta_enum))
                if sizes != (n_max,) * 3:
                    notes.append(f"--n-max {n_max} clamped to {sizes} (Pi, C, beta)")
                res = check_structure(*sizes)
        elif name == "knapsack-families":
            res = check_knapsack_families(seed)
        elif suite.default is None:
            res = suite.run()
        else:
            size = suite.default if n_max is None else n_max
            cap = suite.cap()
            if size > cap:
                notes.append(f"--n-max {size} exceeds the bound {cap} for {name}; clamped")
                size = cap
            res = suite.run(size)
        res.notes = notes + res.notes
        for note in notes:
            print(f"warning: {note}", file=log)
        res.seconds = time.perf_counter() - start
        results.append(res)
    return results
