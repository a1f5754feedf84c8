"""Möbius functions of type-restricted pointed partition posets.

The main entry points are :func:`mu_bruteforce` and :func:`mu_theorem1` for a
filter of pointed integer partitions, :func:`mu_knapsack` for the knapsack
case, and the poset builders ``build_I``, ``build_Pi``, ``build_C`` and
``build_Q``.
"""

__version__ = "0.1.0"

from .config import Bounds, bounds, override_bounds
from .errors import BoundExceeded, CombinatoricsError, ParseError
from .knapsack import build_V, census, family_modular, family_weighted, in_V, is_knapsack
from .perms import beta, beta_by_inclusion_exclusion, beta_fixed_last, descent_set
from .permutahedron import OrderedSetPartition, build_Q, build_R, iso_f, mu_via_gamma
from .pointed import (
    PointedComposition,
    PointedIntegerPartition,
    PointedSetPartition,
    build_C,
    build_I,
    build_Pi,
    filter_by_max_parts,
    type_filter,
)
from .poset import BOTTOM, FinitePoset, PosetFilter, from_cover_relations
from .theorems import (
    compare,
    mu_bruteforce,
    mu_knapsack,
    mu_r_divisible,
    mu_r_divisible_lattice,
    mu_theorem1,
    verify_eulerian_stirling,
)

__all__ = [
    "beta",
    "beta_by_inclusion_exclusion",
    "beta_fixed_last",
    "BOTTOM",
    "BoundExceeded",
    "Bounds",
    "bounds",
    "build_C",
    "build_I",
    "build_Pi",
    "build_Q",
    "build_R",
    "build_V",
    "census",
    "CombinatoricsError",
    "compare",
    "descent_set",
    "family_modular",
    "family_weighted",
    "filter_by_max_parts",
    "FinitePoset",
    "from_cover_relations",
    "in_V",
    "is_knapsack",
    "iso_f",
    "mu_bruteforce",
    "mu_knapsack",
    "mu_r_divisible",
    "mu_r_divisible_lattice",
    "mu_theorem1",
    "mu_via_gamma",
    "OrderedSetPartition",
    "override_bounds",
    "ParseError",
    "PointedComposition",
    "PointedIntegerPartition",
    "PointedSetPartition",
    "PosetFilter",
    "type_filter",
    "verify_eulerian_stirling",
]
