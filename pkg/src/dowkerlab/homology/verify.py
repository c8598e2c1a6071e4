"""Homology-level checks of the rectangle/Dowker homotopy equivalences.

Contractibility and homotopy equivalence are not decidable from finite data
in general, so what is checked here are their exact algebraic consequences:
acyclicity over Z, mapping-cone acyclicity (quasi-isomorphism), cone points
of nerves, and commutativity of induced maps on homology.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..complex import (
    SimplicialComplex,
    SimplicialMap,
    cone_point,
    fiber,
    from_facets,
    nerve,
)
from ..dowker import (
    DEFAULT_MAX_DIMENSION,
    dowker_complex,
    dowker_map,
    inverse_image_simplex,
    pi,
    rectangle_complex,
    swap_iso,
    witness_y,
)
from ..errors import NotASimplex
from ..relation import Relation, RelationMorphism, transpose, transpose_morphism
from .chains import chain_complex, induced_chain_map, mapping_cone
from .fields import QQ
from .groups import HomologyResult, chain_homology, homology
from .maps import Matrix, homology_map_matrix

__all__ = [
    "is_quasi_isomorphism",
    "cone_homology",
    "psi_star",
    "check_functorial_dowker",
    "FiberReport",
    "check_fiber_hypothesis",
]


def cone_homology(F: SimplicialMap, **guards) -> HomologyResult:
    """Integer homology of the cone of the reduced chain map of ``F``."""
    f = induced_chain_map(
        F,
        reduced=True,
        source=chain_complex(F.source, True, **guards),
        target=chain_complex(F.target, True, **guards),
    )
    return chain_homology(mapping_cone(f))


def is_quasi_isomorphism(F: SimplicialMap, **guards) -> bool:
    return cone_homology(F, **guards).is_trivial()


def psi_star(R: Relation, k: int, field=QQ) -> Matrix:
    """H_k(π_{Rᵀ}) · H_k(S_R) · H_k(π_R)⁻¹ : H_k(D(R)) → H_k(D(Rᵀ))."""
    RT = transpose(R)
    E, ET = rectangle_complex(R), rectangle_complex(RT)
    P = homology_map_matrix(pi(R, E), k, field)
    S = homology_map_matrix(swap_iso(R, E, ET), k, field)
    Q = homology_map_matrix(pi(RT, ET), k, field)
    return Q @ S @ P.inverse()


def check_functorial_dowker(f: RelationMorphism, k: int, field=QQ) -> bool:
    """H_k(D(fᵀ)) · Ψ_{R0} == Ψ_{R1} · H_k(D(f))."""
    lhs = homology_map_matrix(dowker_map(transpose_morphism(f)), k, field) @ psi_star(
        f.source, k, field
    )
    rhs = psi_star(f.target, k, field) @ homology_map_matrix(dowker_map(f), k, field)
    return lhs == rhs


@dataclass
class FiberReport:
    sigma: tuple[str, ...]
    fiber: SimplicialComplex
    fiber_homology: HomologyResult
    witnesses: frozenset[str]
    inverse_image: tuple[str, ...]
    inverse_image_ok: bool
    cover: list[tuple[str, ...]] = field(default_factory=list)
    cover_ok: bool = False
    nerve: SimplicialComplex | None = None
    sigma_vertex: str = ""
    sigma_is_cone_point: bool = False
    nerve_cone_point: str | None = None

    @property
    def fiber_acyclic(self) -> bool:
        return self.fiber_homology.is_trivial()

    @property
    def passed(self) -> bool:
        return (
            self.fiber_acyclic
            and self.inverse_image_ok
            and self.cover_ok
            and self.sigma_is_cone_point
        )


def check_fiber_hypothesis(
    R: Relation, sigma, E: SimplicialComplex | None = None, **guards
) -> FiberReport:
    """Fiber acyclicity and the nerve cone point over one simplex σ of D(R)."""
    s = tuple(sorted(set(sigma)))
    D = dowker_complex(R)
    if not D.contains(s):
        raise NotASimplex(f"{list(s)} is not a simplex of the Dowker complex")
    if E is None:
        E = rectangle_complex(R, guards.get("max_dimension", DEFAULT_MAX_DIMENSION))
    F = pi(R, E)
    fib = fiber(F, s)
    fib_h = homology(fib, reduced=True, **guards)

    top = inverse_image_simplex(R, s)
    # vertices of simplices τ with π(τ) = σ, read off the facets of E(R)
    hit = set()
    for phi in E.facets:
        part = [v for v in phi if F(v) in s]
        if {F(v) for v in part} == set(s):
            hit.update(part)
    inverse_ok = E.contains(top) and hit == set(top)

    taus = [t for r in range(1, len(s) + 1) for t in combinations(s, r)]
    tops = [inverse_image_simplex(R, t) for t in taus]
    cover = [from_facets(E.vertex_set, [t]) for t in tops]
    cover_ok = from_facets(E.vertex_set, tops) == fib
    N = nerve(cover)
    sigma_vertex = str(len(taus) - 1)
    return FiberReport(
        sigma=s,
        fiber=fib,
        fiber_homology=fib_h,
        witnesses=witness_y(R, s),
        inverse_image=top,
        inverse_image_ok=inverse_ok,
        cover=taus,
        cover_ok=cover_ok,
        nerve=N,
        sigma_vertex=sigma_vertex,
        sigma_is_cone_point=all(sigma_vertex in f for f in N.facets),
        nerve_cone_point=cone_point(N),
    )
