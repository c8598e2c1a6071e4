"""Finite abstract simplicial complexes stored by their facets.

A simplex is a non-empty tuple of vertex labels in sorted order.  A
:class:`SimplicialComplex` keeps only the inclusion-maximal simplices
(facets); every non-empty subset of a facet is a simplex.  Declared vertices
that lie in no facet are isolated labels and are *not* simplices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import EmptyCover, NotASimplex, NotSimplicial, UnknownVertex

__all__ = [
    "Simplex",
    "simplex",
    "SimplicialComplex",
    "SimplicialMap",
    "from_facets",
    "full_simplex",
    "contains",
    "k_simplices",
    "euler_characteristic",
    "make_simplicial_map",
    "identity_map",
    "compose_maps",
    "fiber",
    "nerve",
    "cone_point",
    "strong_collapse",
    "complex_to_json",
    "complex_from_json",
    "complex_to_dot",
]

Simplex = tuple  # sorted tuple of vertex labels


def simplex(vertices: Iterable[str]) -> Simplex:
    """Canonical form of a simplex: sorted, duplicate-free, non-empty."""
    verts = list(vertices)
    out = tuple(sorted(set(verts)))
    if not out:
        raise ValueError("a simplex has at least one vertex")
    if len(out) != len(verts):
        raise ValueError(f"duplicate vertices in {verts!r}")
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_set: tuple[str, ...]
    facets: tuple[Simplex, ...]

    @cached_property
    def _facet_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(f) for f in self.facets)

    @cached_property
    def support(self) -> tuple[str, ...]:
        """Vertices that are 0-simplices, i.e. lie in some facet."""
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dimension(self) -> int:
        """Largest facet dimension; -1 for the empty complex."""
        return max((len(f) for f in self.facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self.facets

    def contains(self, sigma: Iterable[str]) -> bool:
        s = frozenset(sigma)
        if not s:
            return False
        return any(s <= f for f in self._facet_sets)

    def k_simplices(self, k: int) -> list[Simplex]:
        if k < 0:
            return []
        found = set()
        for f in self.facets:
            if len(f) > k:
                found.update(combinations(f, k + 1))
        return sorted(found)

    def simplices(self, max_dim: int | None = None) -> Iterator[Simplex]:
        top = self.dimension if max_dim is None else min(max_dim, self.dimension)
        for k in range(top + 1):
            yield from self.k_simplices(k)

    def simplex_count_bound(self, max_dim: int | None = None) -> int:
        """Upper bound on the number of simplices, without enumerating them."""
        top = self.dimension if max_dim is None else max_dim
        return sum(
            sum(comb(len(f), j) for j in range(1, min(len(f), top + 1) + 1))
            for f in self.facets
        )

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(self.k_simplices(k)) for k in range(self.dimension + 1))

    def __len__(self):
        return len(self.facets)


def from_facets(
    vertex_set: Iterable[str], candidate_facets: Iterable[Iterable[str]]
) -> SimplicialComplex:
    """Complex generated by the candidates, keeping only the maximal ones."""
    verts = tuple(sorted(set(str(v) for v in vertex_set)))
    known = set(verts)
    cands = set()
    for cand in candidate_facets:
        s = frozenset(cand)
        if not s:
            continue
        missing = s - known
        if missing:
            raise UnknownVertex(f"vertices {sorted(missing)} are not in the vertex set")
        cands.add(s)
    kept: list[frozenset] = []
    for s in sorted(cands, key=len, reverse=True):
        if not any(s <= k for k in kept):
            kept.append(s)
    facets = tuple(sorted(tuple(sorted(s)) for s in kept))
    return SimplicialComplex(verts, facets)


def full_simplex(vertices: Iterable[str]) -> SimplicialComplex:
    verts = list(vertices)
    return from_facets(verts, [verts] if verts else [])


def contains(K: SimplicialComplex, sigma) -> bool:
    return K.contains(sigma)


def k_simplices(K: SimplicialComplex, k: int) -> list[Simplex]:
    return K.k_simplices(k)


def euler_characteristic(K: SimplicialComplex) -> int:
    return K.euler_characteristic()


# -- simplicial maps --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: Mapping[str, str] = field(repr=False)

    def __call__(self, v: str) -> str:
        return self.vertex_map[v]

    def image(self, sigma: Iterable[str]) -> Simplex:
        """F(σ) as a simplex; repeated images collapse."""
        return tuple(sorted({self.vertex_map[v] for v in sigma}))


def make_simplicial_map(
    source: SimplicialComplex, target: SimplicialComplex, vertex_map: Mapping[str, str]
) -> SimplicialMap:
    vmap = dict(vertex_map)
    targets = set(target.vertex_set)
    for v in source.support:
        if v not in vmap:
            raise UnknownVertex(f"vertex map is undefined on {v!r}")
        if vmap[v] not in targets:
            raise UnknownVertex(f"{v!r} maps to {vmap[v]!r}, not a target vertex")
    # faces of a facet map to faces of its image, so facets suffice
    for f in source.facets:
        img = {vmap[v] for v in f}
        if not target.contains(img):
            raise NotSimplicial(
                f"image {sorted(img)} of facet {list(f)} is not a target simplex",
                facet=f,
            )
    return SimplicialMap(source, target, vmap)


def identity_map(K: SimplicialComplex) -> SimplicialMap:
    return SimplicialMap(K, K, {v: v for v in K.vertex_set})


def compose_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """``g ∘ f`` on vertex maps (``f`` first)."""
    if f.target != g.source:
        raise ValueError("target of f differs from source of g")
    return SimplicialMap(
        f.source, g.target, {v: g.vertex_map[w] for v, w in f.vertex_map.items()}
    )


def fiber(F: SimplicialMap, sigma: Iterable[str]) -> SimplicialComplex:
    """Subcomplex F/σ of the source: all τ with F(τ) ⊆ σ."""
    s = frozenset(sigma)
    if not F.target.contains(s):
        raise NotASimplex(f"{sorted(s)} is not a simplex of the target")
    # τ ⊆ φ has F(τ) ⊆ σ iff τ ⊆ φ ∩ F⁻¹(σ)
    pre = {v for v in F.source.support if F.vertex_map[v] in s}
    return from_facets(F.source.vertex_set, [set(f) & pre for f in F.source.facets])


def nerve(cover: Sequence[SimplicialComplex]) -> SimplicialComplex:
    """Nerve of a family of subcomplexes of one complex.

    Vertex ``str(j)`` stands for ``cover[j]``.  Subcomplexes are downward
    closed, so a family has a common simplex exactly when it has a common
    vertex; the facets of the nerve are therefore the maximal sets
    ``{j : v is a vertex of cover[j]}``.
    """
    if not cover:
        raise EmptyCover("the cover has no elements")
    members: dict[str, set[str]] = {}
    for j, K in enumerate(cover):
        if K.is_empty():
            raise EmptyCover(f"cover element {j} is empty")
        for v in K.support:
            members.setdefault(v, set()).add(str(j))
    return from_facets([str(j) for j in range(len(cover))], members.values())


def cone_point(K: SimplicialComplex) -> str | None:
    """Least vertex lying in every facet, if any."""
    if K.is_empty():
        return None
    common = set(K.facets[0]).intersection(*K.facets[1:])
    return min(common) if common else None


def strong_collapse(K: SimplicialComplex) -> tuple[SimplicialComplex, dict[str, str]]:
    """Delete dominated vertices until none is left.

    ``v`` is dominated by ``w`` when every facet containing ``v`` also
    contains ``w``; then ``v ↦ w`` retracts ``K`` onto ``K - v`` and the two
    have the same homotopy type.  Returns the core and the retraction as a
    vertex map from ``K`` onto it.
    """
    facets = {frozenset(f) for f in K.facets}
    retract = {v: v for v in K.vertex_set}
    removed: set[str] = set()
    changed = True
    while changed:
        changed = False
        for v in sorted({u for f in facets for u in f}):
            star = [f for f in facets if v in f]
            common = frozenset.intersection(*star) - {v}
            if not common:
                continue
            w = min(common)
            shrunk = {f - {v} for f in facets}
            facets = {f for f in shrunk if not any(f < g for g in shrunk)}
            for u, t in retract.items():
                if t == v:
                    retract[u] = w
            removed.add(v)
            changed = True
            break
    core = from_facets([v for v in K.vertex_set if v not in removed], facets)
    return core, retract


# -- export -----------------------------------------------------------------


def complex_to_json(K: SimplicialComplex) -> str:
    doc = {"vertices": list(K.vertex_set), "facets": [list(f) for f in K.facets]}
    return json.dumps(doc, indent=2) + "\n"


def complex_from_json(text: str) -> SimplicialComplex:
    doc = json.loads(text)
    return from_facets(doc["vertices"], doc["facets"])


def _dot_id(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def complex_to_dot(K: SimplicialComplex, name: str = "K") -> str:
    """Undirected DOT graph of the 1-skeleton."""
    lines = [f"graph {_dot_id(name)} {{"]
    for v in K.support:
        lines.append(f"  {_dot_id(v)};")
    for a, b in K.k_simplices(1):
        lines.append(f"  {_dot_id(a)} -- {_dot_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
