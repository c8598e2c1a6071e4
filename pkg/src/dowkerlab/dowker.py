"""Dowker complexes, rectangle complexes and the maps between them.

Vertices of a rectangle complex are the related pairs, rendered by
:func:`pair_label` as ``"(x,y)"``.  Backslash, comma and parentheses inside a
label are backslash-escaped so the rendering stays injective.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .complex import SimplicialComplex, SimplicialMap, from_facets, make_simplicial_map
from .concepts import enumerate_concepts
from .errors import DimensionGuard, NotASimplex
from .relation import (
    Relation,
    RelationMorphism,
    compose_morphisms,
    identity_morphism,
    transpose,
    transpose_morphism,
)

__all__ = [
    "DEFAULT_MAX_DIMENSION",
    "pair_label",
    "parse_pair_label",
    "dowker_complex",
    "rectangle_complex",
    "pi",
    "pi_hat",
    "swap_iso",
    "dowker_map",
    "rectangle_map",
    "witness_y",
    "inverse_image_simplex",
    "NaturalityReport",
    "check_naturality",
    "check_functor_laws",
]

DEFAULT_MAX_DIMENSION = 25

_ESCAPE = str.maketrans({"\\": "\\\\", ",": "\\,", "(": "\\(", ")": "\\)"})


def pair_label(x: str, y: str) -> str:
    return f"({x.translate(_ESCAPE)},{y.translate(_ESCAPE)})"


def parse_pair_label(label: str) -> tuple[str, str]:
    """Inverse of :func:`pair_label`."""
    if not (label.startswith("(") and label.endswith(")")):
        raise ValueError(f"not a pair label: {label!r}")
    parts, cur, i, body = [], [], 0, label[1:-1]
    while i < len(body):
        ch = body[i]
        if ch == "\\":
            cur.append(body[i + 1])
            i += 2
            continue
        if ch == ",":
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
        i += 1
    parts.append("".join(cur))
    if len(parts) != 2:
        raise ValueError(f"not a pair label: {label!r}")
    return parts[0], parts[1]


def dowker_complex(R: Relation) -> SimplicialComplex:
    """D(R): facets are the maximal witness columns X_y = {x : (x, y) ∈ R}."""
    columns = [R.column(y) for y in R.y_labels]
    return from_facets(R.x_labels, [c for c in columns if c])


def rectangle_complex(
    R: Relation, max_dimension: int = DEFAULT_MAX_DIMENSION
) -> SimplicialComplex:
    """E(R): facets are the maximal non-empty rectangles U × V ⊆ R."""
    facets = []
    for c in enumerate_concepts(R):
        if not c.is_proper():
            continue
        size = len(c.extent) * len(c.intent)
        if size > max_dimension + 1:
            raise DimensionGuard(
                f"rectangle {sorted(c.extent)} x {sorted(c.intent)} has {size} "
                f"vertices, above the limit of {max_dimension + 1}"
            )
        facets.append([pair_label(x, y) for x in c.extent for y in c.intent])
    return from_facets([pair_label(x, y) for x, y in R.pairs], facets)


def _checked_map(source, target, vmap) -> SimplicialMap:
    # failures here are internal bugs: the constructions are simplicial by proof
    return make_simplicial_map(source, target, vmap)


def pi(R: Relation, E: SimplicialComplex | None = None) -> SimplicialMap:
    """First projection E(R) → D(R), (x, y) ↦ x."""
    E = rectangle_complex(R) if E is None else E
    vmap = {pair_label(x, y): x for x, y in R.pairs}
    return _checked_map(E, dowker_complex(R), vmap)


def pi_hat(R: Relation, E: SimplicialComplex | None = None) -> SimplicialMap:
    """Second projection E(R) → D(Rᵀ), (x, y) ↦ y."""
    E = rectangle_complex(R) if E is None else E
    vmap = {pair_label(x, y): y for x, y in R.pairs}
    return _checked_map(E, dowker_complex(transpose(R)), vmap)


def swap_iso(
    R: Relation, E: SimplicialComplex | None = None, ET: SimplicialComplex | None = None
) -> SimplicialMap:
    """Isomorphism E(R) → E(Rᵀ), (x, y) ↦ (y, x)."""
    E = rectangle_complex(R) if E is None else E
    ET = rectangle_complex(transpose(R)) if ET is None else ET
    vmap = {pair_label(x, y): pair_label(y, x) for x, y in R.pairs}
    return _checked_map(E, ET, vmap)


def dowker_map(f: RelationMorphism) -> SimplicialMap:
    """D(f): D(R0) → D(R1) with vertex map f1."""
    return _checked_map(dowker_complex(f.source), dowker_complex(f.target), dict(f.f1))


def rectangle_map(
    f: RelationMorphism, max_dimension: int = DEFAULT_MAX_DIMENSION
) -> SimplicialMap:
    """E(f): E(R0) → E(R1) with vertex map (x, y) ↦ (f1(x), f2(y))."""
    vmap = {
        pair_label(x, y): pair_label(f.f1[x], f.f2[y]) for x, y in f.source.pairs
    }
    return _checked_map(
        rectangle_complex(f.source, max_dimension),
        rectangle_complex(f.target, max_dimension),
        vmap,
    )


def witness_y(R: Relation, sigma: Iterable[str]) -> frozenset[str]:
    """Y(σ): every y with σ × {y} ⊆ R."""
    s = set(sigma)
    if not s:
        raise NotASimplex("the empty set is not a simplex")
    ys = frozenset(y for y in R.y_labels if s <= R.column(y))
    if not ys:
        raise NotASimplex(f"{sorted(s)} has no witness")
    return ys


def inverse_image_simplex(R: Relation, sigma: Iterable[str]) -> tuple[str, ...]:
    """Top simplex σ × Y(σ) of the inverse image of σ under the first projection."""
    s = sorted(set(sigma))
    ys = witness_y(R, s)
    return tuple(sorted(pair_label(x, y) for x in s for y in ys))


@dataclass
class NaturalityReport:
    passed: bool
    checked: int = 0
    # (square, vertex, via-top-right, via-bottom-left)
    failures: list[tuple[str, str, str, str]] = field(default_factory=list)


def check_naturality(
    f: RelationMorphism, max_dimension: int = DEFAULT_MAX_DIMENSION
) -> NaturalityReport:
    """Strict commutativity of both squares over E(f).

    Left:  D(f) ∘ π_{R0}    = π_{R1} ∘ E(f)
    Right: D(fᵀ) ∘ π̂_{R0}  = π̂_{R1} ∘ E(f)
    """
    Ef = rectangle_map(f, max_dimension)
    Df = dowker_map(f)
    DfT = dowker_map(transpose_morphism(f))
    p0, p1 = pi(f.source, Ef.source), pi(f.target, Ef.target)
    q0, q1 = pi_hat(f.source, Ef.source), pi_hat(f.target, Ef.target)
    report = NaturalityReport(passed=True)
    for v in sorted(Ef.source.vertex_set):
        w = Ef(v)
        for name, top, bottom in (
            ("left", Df(p0(v)), p1(w)),
            ("right", DfT(q0(v)), q1(w)),
        ):
            report.checked += 1
            if top != bottom:
                report.failures.append((name, v, top, bottom))
    report.passed = not report.failures
    return report


def check_functor_laws(g: RelationMorphism, f: RelationMorphism) -> list[str]:
    """Names of violated functor laws for D and E on the pair ``g ∘ f``."""
    problems = []
    gf = compose_morphisms(g, f)
    for name, functor in (("D", dowker_map), ("E", rectangle_map)):
        whole = functor(gf).vertex_map
        Ff, Fg = functor(f).vertex_map, functor(g).vertex_map
        if any(whole[v] != Fg[Ff[v]] for v in Ff):
            problems.append(f"{name}(g∘f) != {name}(g)∘{name}(f)")
        ident = functor(identity_morphism(f.source)).vertex_map
        if any(k != v for k, v in ident.items()):
            problems.append(f"{name}(id) != id")
    return problems
