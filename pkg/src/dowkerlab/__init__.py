"""Dowker complexes, rectangle complexes and exact checks of Dowker duality."""

from .complex import (
    SimplicialComplex,
    SimplicialMap,
    cone_point,
    fiber,
    from_facets,
    full_simplex,
    make_simplicial_map,
    nerve,
)
from .concepts import FormalConcept, brute_force_concepts, enumerate_concepts
from .dowker import (
    check_naturality,
    dowker_complex,
    dowker_map,
    inverse_image_simplex,
    pi,
    pi_hat,
    rectangle_complex,
    rectangle_map,
    swap_iso,
    witness_y,
)
from .homology import (
    check_fiber_hypothesis,
    check_functorial_dowker,
    homology,
    is_quasi_isomorphism,
    psi_star,
)
from .relation import (
    Relation,
    RelationMorphism,
    make_relation,
    random_morphism,
    random_relation,
    transpose,
    validate_morphism,
)

__version__ = "0.1.0"

__all__ = [
    "FormalConcept",
    "Relation",
    "RelationMorphism",
    "SimplicialComplex",
    "SimplicialMap",
    "brute_force_concepts",
    "check_fiber_hypothesis",
    "check_functorial_dowker",
    "check_naturality",
    "cone_point",
    "dowker_complex",
    "dowker_map",
    "enumerate_concepts",
    "fiber",
    "from_facets",
    "full_simplex",
    "homology",
    "inverse_image_simplex",
    "is_quasi_isomorphism",
    "make_relation",
    "make_simplicial_map",
    "nerve",
    "pi",
    "pi_hat",
    "psi_star",
    "random_morphism",
    "random_relation",
    "rectangle_complex",
    "rectangle_map",
    "swap_iso",
    "transpose",
    "validate_morphism",
    "witness_y",
]
