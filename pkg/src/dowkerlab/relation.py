"""Finite relations R ⊆ X × Y and morphisms between them.

A :class:`Relation` carries its label universes explicitly, so labels that
take part in no pair are still part of the relation.  Labels are plain
strings; everywhere downstream they are ordered lexicographically.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    DuplicateLabel,
    NotAMorphism,
    ParseError,
    SourceTargetMismatch,
    UnknownLabel,
)

__all__ = [
    "Relation",
    "RelationMorphism",
    "make_relation",
    "transpose",
    "validate_morphism",
    "identity_morphism",
    "transpose_morphism",
    "compose_morphisms",
    "random_relation",
    "random_morphism",
    "random_morphism_from",
    "relation_to_json",
    "relation_from_json",
    "relation_from_csv",
    "relation_to_csv",
    "load_relation",
]


@dataclass(frozen=True)
class Relation:
    x_labels: tuple[str, ...]
    y_labels: tuple[str, ...]
    pairs: frozenset[tuple[str, str]]

    def __len__(self):
        return len(self.pairs)

    def sorted_pairs(self) -> list[tuple[str, str]]:
        return sorted(self.pairs)

    def row(self, x: str) -> frozenset[str]:
        """All y related to ``x``."""
        return self._rows.get(x, frozenset())

    def column(self, y: str) -> frozenset[str]:
        """All x related to ``y`` (the witness set of ``y``)."""
        return self._columns.get(y, frozenset())

    @property
    def _rows(self) -> dict[str, frozenset[str]]:
        cache = self.__dict__.get("_row_cache")
        if cache is None:
            acc: dict[str, set[str]] = {}
            for x, y in self.pairs:
                acc.setdefault(x, set()).add(y)
            cache = {x: frozenset(ys) for x, ys in acc.items()}
            object.__setattr__(self, "_row_cache", cache)
        return cache

    @property
    def _columns(self) -> dict[str, frozenset[str]]:
        cache = self.__dict__.get("_col_cache")
        if cache is None:
            acc: dict[str, set[str]] = {}
            for x, y in self.pairs:
                acc.setdefault(y, set()).add(x)
            cache = {y: frozenset(xs) for y, xs in acc.items()}
            object.__setattr__(self, "_col_cache", cache)
        return cache


@dataclass(frozen=True, eq=False)
class RelationMorphism:
    source: Relation
    target: Relation
    f1: Mapping[str, str]
    f2: Mapping[str, str]

    def __eq__(self, other):
        if not isinstance(other, RelationMorphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and dict(self.f1) == dict(other.f1)
            and dict(self.f2) == dict(other.f2)
        )

    __hash__ = None


def _check_labels(labels: Iterable[str], side: str) -> tuple[str, ...]:
    out = tuple(str(lab) for lab in labels)
    seen = set()
    for lab in out:
        if lab in seen:
            raise DuplicateLabel(f"label {lab!r} repeated in {side}")
        seen.add(lab)
    return out


def make_relation(x_labels, y_labels, pairs) -> Relation:
    """Validate and build a relation; duplicate pairs are dropped."""
    xs = _check_labels(x_labels, "x_labels")
    ys = _check_labels(y_labels, "y_labels")
    xset, yset = set(xs), set(ys)
    clean = set()
    for pair in pairs:
        x, y = (str(p) for p in pair)
        if x not in xset:
            raise UnknownLabel(f"pair ({x}, {y}) uses unknown x-label {x!r}")
        if y not in yset:
            raise UnknownLabel(f"pair ({x}, {y}) uses unknown y-label {y!r}")
        clean.add((x, y))
    return Relation(xs, ys, frozenset(clean))


def transpose(R: Relation) -> Relation:
    return Relation(R.y_labels, R.x_labels, frozenset((y, x) for x, y in R.pairs))


def validate_morphism(f1, f2, source: Relation, target: Relation) -> RelationMorphism:
    f1 = {str(k): str(v) for k, v in dict(f1).items()}
    f2 = {str(k): str(v) for k, v in dict(f2).items()}
    tx, ty = set(target.x_labels), set(target.y_labels)
    for labels, fmap, codomain, name in (
        (source.x_labels, f1, tx, "f1"),
        (source.y_labels, f2, ty, "f2"),
    ):
        for lab in labels:
            if lab not in fmap:
                raise UnknownLabel(f"{name} is undefined on source label {lab!r}")
            if fmap[lab] not in codomain:
                raise UnknownLabel(
                    f"{name}({lab!r}) = {fmap[lab]!r} is not a target label"
                )
    for x, y in source.sorted_pairs():
        if (f1[x], f2[y]) not in target.pairs:
            raise NotAMorphism(
                f"({x}, {y}) is related but ({f1[x]}, {f2[y]}) is not", pair=(x, y)
            )
    # restrict to the declared source universes
    f1 = {lab: f1[lab] for lab in source.x_labels}
    f2 = {lab: f2[lab] for lab in source.y_labels}
    return RelationMorphism(source, target, f1, f2)


def identity_morphism(R: Relation) -> RelationMorphism:
    return RelationMorphism(
        R, R, {x: x for x in R.x_labels}, {y: y for y in R.y_labels}
    )


def transpose_morphism(f: RelationMorphism) -> RelationMorphism:
    return RelationMorphism(
        transpose(f.source), transpose(f.target), dict(f.f2), dict(f.f1)
    )


def compose_morphisms(g: RelationMorphism, f: RelationMorphism) -> RelationMorphism:
    """Return ``g ∘ f``; ``f`` is applied first."""
    if f.target != g.source:
        raise SourceTargetMismatch("target of f differs from source of g")
    return RelationMorphism(
        f.source,
        g.target,
        {x: g.f1[f.f1[x]] for x in f.source.x_labels},
        {y: g.f2[f.f2[y]] for y in f.source.y_labels},
    )


def random_relation(nx: int, ny: int, density: float, seed=None) -> Relation:
    """Relation on ``x0..``, ``y0..`` with each pair present independently."""
    if nx < 0 or ny < 0:
        raise ValueError("label counts must be non-negative")
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    xs = [f"x{i}" for i in range(nx)]
    ys = [f"y{j}" for j in range(ny)]
    pairs = [(x, y) for x in xs for y in ys if rng.random() < density]
    return make_relation(xs, ys, pairs)


def random_morphism(
    seed=None,
    max_x: int = 5,
    max_y: int = 5,
    densities: Iterable[float] = (0.3, 0.5, 0.7),
    keep: float = 0.8,
) -> RelationMorphism:
    """A random valid morphism, valid by construction.

    The target relation and the label maps are drawn first; the source
    relation is then a random sub-relation of the pullback
    ``{(x, y) : (f1(x), f2(y)) ∈ target}``, each pullback pair kept with
    probability ``keep``.
    """
    rng = random.Random(seed)
    densities = list(densities)
    tx = [f"u{i}" for i in range(rng.randint(1, max_x))]
    ty = [f"v{j}" for j in range(rng.randint(1, max_y))]
    dens = rng.choice(densities)
    target = make_relation(
        tx, ty, [(u, v) for u in tx for v in ty if rng.random() < dens]
    )
    sx = [f"x{i}" for i in range(rng.randint(1, max_x))]
    sy = [f"y{j}" for j in range(rng.randint(1, max_y))]
    f1 = {x: rng.choice(tx) for x in sx}
    f2 = {y: rng.choice(ty) for y in sy}
    pairs = [
        (x, y)
        for x in sx
        for y in sy
        if (f1[x], f2[y]) in target.pairs and rng.random() < keep
    ]
    source = make_relation(sx, sy, pairs)
    return validate_morphism(f1, f2, source, target)


def random_morphism_from(
    source: Relation, seed=None, max_x: int = 5, max_y: int = 5, noise: float = 0.2
) -> RelationMorphism:
    """A random morphism out of ``source``.

    The target is the image of ``source`` under random label maps, plus each
    remaining target pair with probability ``noise``.
    """
    rng = random.Random(seed)
    tx = [f"p{i}" for i in range(rng.randint(1, max_x))]
    ty = [f"q{j}" for j in range(rng.randint(1, max_y))]
    f1 = {x: rng.choice(tx) for x in source.x_labels}
    f2 = {y: rng.choice(ty) for y in source.y_labels}
    image = {(f1[x], f2[y]) for x, y in source.pairs}
    pairs = [(u, v) for u in tx for v in ty if (u, v) in image or rng.random() < noise]
    return validate_morphism(f1, f2, source, make_relation(tx, ty, pairs))


# -- serialization ---------------------------------------------------------


def relation_to_json(R: Relation) -> str:
    doc = {
        "x": list(R.x_labels),
        "y": list(R.y_labels),
        "pairs": [list(p) for p in R.sorted_pairs()],
    }
    return json.dumps(doc, indent=2) + "\n"


def relation_from_json(text: str) -> Relation:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object with keys x, y, pairs")
    for key in ("x", "y", "pairs"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
        if not isinstance(doc[key], list):
            raise ParseError(f"field {key!r} must be an array")
    for key in ("x", "y"):
        for i, lab in enumerate(doc[key]):
            if not isinstance(lab, str):
                raise ParseError(f"field {key!r}[{i}] must be a string")
    for i, pair in enumerate(doc["pairs"]):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(p, str) for p in pair)
        ):
            raise ParseError(f"field 'pairs'[{i}] must be a 2-element string array")
    try:
        return make_relation(doc["x"], doc["y"], doc["pairs"])
    except (DuplicateLabel, UnknownLabel) as exc:
        raise ParseError(str(exc)) from None


def relation_from_csv(text: str) -> Relation:
    """Parse ``x,y`` lines; label universes follow first appearance."""
    reader = csv.reader(io.StringIO(text))
    xs: dict[str, None] = {}
    ys: dict[str, None] = {}
    pairs = []
    header_seen = False
    for lineno, row in enumerate(reader, start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        cells = [cell.strip() for cell in row]
        if not header_seen:
            if cells != ["x", "y"]:
                raise ParseError(f"line {lineno}: expected header 'x,y'")
            header_seen = True
            continue
        if len(cells) != 2 or not cells[0] or not cells[1]:
            raise ParseError(f"line {lineno}: expected two non-empty fields")
        xs.setdefault(cells[0])
        ys.setdefault(cells[1])
        pairs.append((cells[0], cells[1]))
    if not header_seen:
        raise ParseError("line 1: expected header 'x,y'")
    return make_relation(list(xs), list(ys), pairs)


def relation_to_csv(R: Relation) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["x", "y"])
    writer.writerows(R.sorted_pairs())
    return buf.getvalue()


def load_relation(path, fmt: str | None = None) -> Relation:
    """Read a relation file; ``fmt`` defaults to the file extension."""
    path = str(path)
    if fmt is None:
        fmt = "csv" if path.lower().endswith(".csv") else "json"
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if fmt == "csv":
        return relation_from_csv(text)
    if fmt == "json":
        return relation_from_json(text)
    raise ValueError(f"unknown relation format {fmt!r}")
