"""Enumeration bounds.

The defaults keep every brute-force computation at desk scale. They are
configuration values and may be raised through :func:`override_bounds`, the
``--bounds`` CLI flag, or the ``POINTED_MOBIUS_BOUNDS`` environment variable,
all of which accept the same ``name=value,name=value`` syntax.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from dataclasses import dataclass, fields

from .errors import BoundExceeded, ParseError

ENV_VAR = "POINTED_MOBIUS_BOUNDS"


@dataclass
class Bounds:
    I: int = 20  # pointed integer partitions
    Pi: int = 9  # pointed set partitions, Bell(n+1) elements
    C: int = 16  # pointed compositions, 2**n elements
    Q: int = 7  # ordered partition lattice
    perm: int = 10  # full enumeration of S_n
    beta_enum: int = 8  # beta by enumeration at or below this n
    census: int = 40

    def check(self, name: str, value: int) -> None:
        limit = getattr(self, name)
        if value > limit:
            raise BoundExceeded(
                f"{name}: {value} exceeds the configured bound {limit} "
                f"(raise it with --bounds {name}=... or ${ENV_VAR})"
            )


def parse_bounds(text: str) -> dict[str, int]:
    known = {f.name for f in fields(Bounds)}
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or name not in known:
            raise ParseError(f"bad bound override {item!r}; known names: {sorted(known)}")
        try:
            out[name] = int(value)
        except ValueError:
            raise ParseError(f"bound {name} needs an integer, got {value!r}") from None
    return out


def _from_env() -> Bounds:
    b = Bounds()
    text = os.environ.get(ENV_VAR)
    if text:
        for name, value in parse_bounds(text).items():
            setattr(b, name, value)
    return b


bounds = _from_env()


@contextmanager
def override_bounds(**values):
    """Temporarily change bounds, restoring the old values on exit."""
    old = {k: getattr(bounds, k) for k in values}
    for k, v in values.items():
        if not hasattr(bounds, k):
            raise ParseError(f"unknown bound {k!r}")
        setattr(bounds, k, v)
    try:
        yield bounds
    finally:
        for k, v in old.items():
            setattr(bounds, k, v)
