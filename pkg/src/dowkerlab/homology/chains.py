"""Simplicial chain complexes, chain maps and algebraic mapping cones.

Bases in degree k are the k-simplices in canonical (sorted) order.  The
reduced complex adds degree -1 with the single basis element ``()``, the
empty simplex; the usual face formula then produces the augmentation row of
ones, so no special casing is needed downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..complex import SimplicialComplex, SimplicialMap
from ..errors import DimensionGuard
from .sparse import SparseMatrix

__all__ = [
    "DEFAULT_MAX_SIMPLICES",
    "ChainComplex",
    "ChainMap",
    "chain_complex",
    "induced_chain_map",
    "mapping_cone",
    "permutation_sign",
]

DEFAULT_MAX_DIMENSION = 25
DEFAULT_MAX_SIMPLICES = 400_000


@dataclass(eq=False)
class ChainComplex:
    bases: dict[int, list]
    boundaries: dict[int, SparseMatrix] = field(default_factory=dict)
    # highest degree whose homology this complex determines
    valid_top: int | None = None

    @property
    def degrees(self) -> list[int]:
        return sorted(self.bases)

    @property
    def top(self) -> int:
        return max(self.bases, default=-1)

    def rank(self, k: int) -> int:
        return len(self.bases.get(k, ()))

    def boundary(self, k: int) -> SparseMatrix:
        """∂_k : C_k → C_{k-1}; an explicit zero matrix where none is stored."""
        d = self.boundaries.get(k)
        if d is None:
            d = SparseMatrix.zeros(self.rank(k - 1), self.rank(k))
        return d

    def check_squares_zero(self) -> bool:
        return all(
            (self.boundary(k - 1) @ self.boundary(k)).is_zero() for k in self.degrees
        )


@dataclass(eq=False)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    maps: dict[int, SparseMatrix]

    def at(self, k: int) -> SparseMatrix:
        m = self.maps.get(k)
        if m is None:
            m = SparseMatrix.zeros(self.target.rank(k), self.source.rank(k))
        return m

    def check_commutes(self) -> bool:
        """∂ᵗ_k f_k = f_{k-1} ∂ˢ_k in every degree."""
        for k in self.source.degrees:
            lhs = self.target.boundary(k) @ self.at(k)
            rhs = self.at(k - 1) @ self.source.boundary(k)
            if lhs != rhs:
                return False
        return True


def _guard(K: SimplicialComplex, top: int, max_dimension: int, max_simplices: int):
    if top > max_dimension:
        raise DimensionGuard(f"dimension {top} exceeds the guard {max_dimension}")
    bound = K.simplex_count_bound(top)
    if bound > max_simplices:
        raise DimensionGuard(
            f"complex may have {bound} simplices up to dimension {top}, "
            f"above the guard {max_simplices}"
        )


def chain_complex(
    K: SimplicialComplex,
    reduced: bool = False,
    max_dim: int | None = None,
    max_dimension: int = DEFAULT_MAX_DIMENSION,
    max_simplices: int = DEFAULT_MAX_SIMPLICES,
) -> ChainComplex:
    """Simplicial chain complex of ``K``, optionally only up to ``max_dim``.

    A truncated complex determines homology only below its top degree;
    ``valid_top`` records the last degree that is trustworthy.
    """
    top = K.dimension if max_dim is None else min(max_dim, K.dimension)
    _guard(K, top, max_dimension, max_simplices)
    bases: dict[int, list] = {k: K.k_simplices(k) for k in range(top + 1)}
    if reduced:
        bases[-1] = [()]
    boundaries = {}
    for k in range(0 if reduced else 1, top + 1):
        index = {s: i for i, s in enumerate(bases[k - 1])}
        cols = []
        for s in bases[k]:
            cols.append(
                {index[s[:i] + s[i + 1:]]: (-1) ** i for i in range(len(s))}
            )
        boundaries[k] = SparseMatrix(len(bases[k - 1]), len(bases[k]), cols)
    truncated = max_dim is not None and max_dim < K.dimension
    return ChainComplex(bases, boundaries, valid_top=top - 1 if truncated else top)


def permutation_sign(seq) -> int:
    """Sign of the permutation that sorts ``seq`` (distinct items)."""
    inversions = sum(
        1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
    )
    return -1 if inversions % 2 else 1


def induced_chain_map(
    F: SimplicialMap,
    reduced: bool = False,
    source: ChainComplex | None = None,
    target: ChainComplex | None = None,
    max_dim: int | None = None,
    **guards,
) -> ChainMap:
    """Linearization of ``F``: oriented images, degenerate simplices to zero."""
    if source is None:
        source = chain_complex(F.source, reduced, max_dim, **guards)
    if target is None:
        target = chain_complex(F.target, reduced, max_dim, **guards)
    vmap = F.vertex_map
    maps = {}
    for k in source.degrees:
        tindex = {s: i for i, s in enumerate(target.bases.get(k, ()))}
        cols = []
        for s in source.bases[k]:
            img = [vmap[v] for v in s]
            if len(set(img)) < len(img):
                cols.append({})
                continue
            cols.append({tindex[tuple(sorted(img))]: permutation_sign(img)})
        maps[k] = SparseMatrix(target.rank(k), source.rank(k), cols)
    return ChainMap(source, target, maps)


def mapping_cone(f: ChainMap) -> ChainComplex:
    """Cone(f)_k = A_{k-1} ⊕ B_k with ∂(a, b) = (-∂a, ∂b - f(a)).

    Basis elements are tagged ``("A", a)`` and ``("B", b)``; within a degree
    the A-part comes first.
    """
    A, B = f.source, f.target
    lo = min([k + 1 for k in A.degrees] + B.degrees, default=0)
    hi = max([k + 1 for k in A.degrees] + B.degrees, default=-1)
    bases = {
        k: [("A", a) for a in A.bases.get(k - 1, ())] + [("B", b) for b in B.bases.get(k, ())]
        for k in range(lo, hi + 1)
    }
    boundaries = {}
    for k in range(lo + 1, hi + 1):
        nA_below = A.rank(k - 2)
        dA = A.boundary(k - 1)
        fa = f.at(k - 1)
        dB = B.boundary(k)
        cols = []
        for j in range(A.rank(k - 1)):
            col = {i: -v for i, v in dA.cols[j].items()} if dA.ncols else {}
            for i, v in fa.cols[j].items():
                col[nA_below + i] = -v
            cols.append(col)
        for j in range(B.rank(k)):
            cols.append({nA_below + i: v for i, v in dB.cols[j].items()})
        boundaries[k] = SparseMatrix(len(bases[k - 1]), len(bases[k]), cols)
    return ChainComplex(bases, boundaries, valid_top=hi)
