"""Formal concepts (maximal rectangles) of a relation.

Enumeration uses Ganter's NextClosure over extents, with objects (x-labels)
taken in lexicographic order.  Concepts come out in lectic order of their
extents, which is also the canonical sort order used for output and JSON.
Both the empty-extent and empty-intent boundary concepts are included when
they are closed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import TooLarge, UnknownLabel
from .relation import Relation

__all__ = [
    "FormalConcept",
    "derive_up",
    "derive_down",
    "enumerate_concepts",
    "brute_force_concepts",
    "lattice_leq",
    "lectic_key",
    "concepts_to_json",
]


@dataclass(frozen=True)
class FormalConcept:
    extent: frozenset[str]
    intent: frozenset[str]

    def is_proper(self) -> bool:
        """Both sides non-empty, i.e. a facet of the rectangle complex."""
        return bool(self.extent) and bool(self.intent)

    def to_dict(self) -> dict:
        return {"extent": sorted(self.extent), "intent": sorted(self.intent)}


def derive_up(R: Relation, U: Iterable[str]) -> frozenset[str]:
    """Common y-neighbours of the x-labels in ``U`` (all of Y when U is empty)."""
    U = set(U)
    unknown = U - set(R.x_labels)
    if unknown:
        raise UnknownLabel(f"unknown x-labels {sorted(unknown)}")
    out = set(R.y_labels)
    for x in U:
        out &= R.row(x)
    return frozenset(out)


def derive_down(R: Relation, V: Iterable[str]) -> frozenset[str]:
    """Common x-neighbours of the y-labels in ``V`` (all of X when V is empty)."""
    V = set(V)
    unknown = V - set(R.y_labels)
    if unknown:
        raise UnknownLabel(f"unknown y-labels {sorted(unknown)}")
    out = set(R.x_labels)
    for y in V:
        out &= R.column(y)
    return frozenset(out)


class _BitContext:
    """Relation as bit rows; object i has weight 1 << (n - 1 - i)."""

    def __init__(self, R: Relation):
        self.xs = sorted(R.x_labels)
        self.ys = sorted(R.y_labels)
        self.n = len(self.xs)
        ypos = {y: j for j, y in enumerate(self.ys)}
        self.rows = [0] * self.n
        for i, x in enumerate(self.xs):
            for y in R.row(x):
                self.rows[i] |= 1 << ypos[y]
        self.all_y = (1 << len(self.ys)) - 1

    def bit(self, i: int) -> int:
        return 1 << (self.n - 1 - i)

    def intent(self, ext: int) -> int:
        out = self.all_y
        for i in range(self.n):
            if ext & self.bit(i):
                out &= self.rows[i]
        return out

    def extent(self, intent: int) -> int:
        out = 0
        for i in range(self.n):
            if self.rows[i] & intent == intent:
                out |= self.bit(i)
        return out

    def concept(self, ext: int, intent: int) -> FormalConcept:
        return FormalConcept(
            frozenset(x for i, x in enumerate(self.xs) if ext & self.bit(i)),
            frozenset(y for j, y in enumerate(self.ys) if intent >> j & 1),
        )


def lectic_key(R: Relation, extent: Iterable[str]) -> int:
    """Integer whose natural order is the lectic order of extents."""
    xs = sorted(R.x_labels)
    n = len(xs)
    pos = {x: i for i, x in enumerate(xs)}
    return sum(1 << (n - 1 - pos[x]) for x in extent)


def enumerate_concepts(R: Relation) -> list[FormalConcept]:
    ctx = _BitContext(R)
    n = ctx.n

    def close(ext: int) -> tuple[int, int]:
        intent = ctx.intent(ext)
        return ctx.extent(intent), intent

    ext, intent = close(0)
    out = [ctx.concept(ext, intent)]
    full = (1 << n) - 1
    while ext != full:
        for i in range(n - 1, -1, -1):
            b = ctx.bit(i)
            if ext & b:
                continue
            # objects strictly before i in the order have higher weight
            prefix = ~((b << 1) - 1) & full
            nxt, nxt_int = close((ext & prefix) | b)
            if nxt & prefix == ext & prefix:
                ext, intent = nxt, nxt_int
                break
        else:  # pragma: no cover - NextClosure always reaches the full set
            break
        out.append(ctx.concept(ext, intent))
    return out


def brute_force_concepts(R: Relation, limit: int = 20) -> list[FormalConcept]:
    """Close every subset of X; exponential, for cross-checking only."""
    if len(R.x_labels) > limit:
        raise TooLarge(f"{len(R.x_labels)} objects exceed the brute-force limit {limit}")
    xs = sorted(R.x_labels)
    found = set()
    for mask in range(1 << len(xs)):
        U = [x for i, x in enumerate(xs) if mask >> i & 1]
        V = derive_up(R, U)
        found.add(FormalConcept(derive_down(R, V), V))
    return sorted(found, key=lambda c: lectic_key(R, c.extent))


def lattice_leq(c1: FormalConcept, c2: FormalConcept) -> bool:
    return c1.extent <= c2.extent


def concepts_to_json(concepts: Iterable[FormalConcept]) -> str:
    return json.dumps([c.to_dict() for c in concepts], indent=2) + "\n"
