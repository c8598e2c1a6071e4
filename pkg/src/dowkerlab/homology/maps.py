"""Matrices of induced maps on homology over a field.

Homology bases are chosen deterministically: cycles come from column
reduction of ∂_k in canonical simplex order, and a cycle becomes a basis
representative when it is independent of the boundaries and of earlier
representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..complex import SimplicialComplex, SimplicialMap
from ..errors import NotInvertible
from .chains import ChainComplex, chain_complex, induced_chain_map
from .fields import QQ
from .sparse import SparseMatrix

__all__ = ["Matrix", "HomologyBasis", "homology_basis", "homology_map_matrix"]


@dataclass(frozen=True)
class Matrix:
    """Dense matrix over a field, with explicit shape so 0×n is representable."""

    nrows: int
    ncols: int
    rows: tuple[tuple, ...]
    field: object = QQ

    @classmethod
    def identity(cls, n: int, field=QQ):
        one, zero = field.convert(1), field.convert(0)
        return cls(n, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), field)

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        F = self.field
        zero = F.convert(0)
        rows = tuple(
            tuple(
                F.reduce(sum((self.rows[i][t] * other.rows[t][j] for t in range(self.ncols)), zero))
                for j in range(other.ncols)
            )
            for i in range(self.nrows)
        )
        return Matrix(self.nrows, other.ncols, rows, F)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise NotInvertible(f"{self.nrows}x{self.ncols} matrix is not square")
        n, F = self.nrows, self.field
        aug = [list(r) + list(Matrix.identity(n, F).rows[i]) for i, r in enumerate(self.rows)]
        for c in range(n):
            p = next((r for r in range(c, n) if aug[r][c] != 0), None)
            if p is None:
                raise NotInvertible("matrix is singular")
            aug[c], aug[p] = aug[p], aug[c]
            inv = F.inv(aug[c][c])
            aug[c] = [F.reduce(v * inv) for v in aug[c]]
            for r in range(n):
                if r != c and aug[r][c] != 0:
                    q = aug[r][c]
                    aug[r] = [F.reduce(a - q * b) for a, b in zip(aug[r], aug[c])]
        return Matrix(n, n, tuple(tuple(r[n:]) for r in aug), F)

    def is_invertible(self) -> bool:
        try:
            self.inverse()
        except NotInvertible:
            return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def to_list(self):
        return [[self.field.to_json(v) for v in row] for row in self.rows]


def _axpy(vec: dict, c, other: dict, F):
    """vec -= c * other, in place."""
    for i, v in other.items():
        nv = F.reduce(vec.get(i, 0) - c * v)
        if nv != 0:
            vec[i] = nv
        else:
            vec.pop(i, None)


class HomologyBasis:
    """Basis of H_k(C; F) with a coordinate map for arbitrary k-cycles."""

    def __init__(self, C: ChainComplex, k: int, field=QQ):
        self.k, self.field = k, field
        F = field
        n = C.rank(k)
        # kernel of ∂_k by column reduction with tracked combinations
        cycles = []
        piv: dict[int, tuple[dict, dict]] = {}
        d = C.boundary(k)
        for j in range(n):
            v = {i: F.convert(x) for i, x in d.cols[j].items()} if d.ncols else {}
            v = {i: x for i, x in v.items() if x != 0}
            track = {j: F.convert(1)}
            while v:
                low = max(v)
                if low not in piv:
                    break
                pv, pt = piv[low]
                c = F.reduce(v[low] * F.inv(pv[low]))
                _axpy(v, c, pv, F)
                _axpy(track, c, pt, F)
            if v:
                piv[max(v)] = (v, track)
            else:
                cycles.append(track)
        self._pivots: dict[int, tuple[dict, dict]] = {}
        for col in C.boundary(k + 1).cols:
            v, _ = self._reduce({i: F.convert(x) for i, x in col.items() if F.convert(x) != 0})
            if v:
                self._pivots[max(v)] = (v, {})
        self.reps: list[dict] = []
        for z in cycles:
            v, acc = self._reduce(dict(z))
            if v:
                idx = len(self.reps)
                self.reps.append(z)
                coeff = {i: F.reduce(-a) for i, a in acc.items()}
                coeff[idx] = F.reduce(coeff.get(idx, 0) + 1)
                self._pivots[max(v)] = (v, {i: a for i, a in coeff.items() if a != 0})

    def __len__(self):
        return len(self.reps)

    def _reduce(self, vec: dict):
        F = self.field
        acc: dict[int, object] = {}
        while vec:
            low = max(vec)
            hit = self._pivots.get(low)
            if hit is None:
                break
            pv, ph = hit
            c = F.reduce(vec[low] * F.inv(pv[low]))
            _axpy(vec, c, pv, F)
            for i, a in ph.items():
                nv = F.reduce(acc.get(i, 0) + c * a)
                if nv != 0:
                    acc[i] = nv
                else:
                    acc.pop(i, None)
        return vec, acc

    def coordinates(self, cycle: dict) -> list:
        """Coordinates of the class of ``cycle`` in the representative basis."""
        F = self.field
        vec = {i: F.convert(v) for i, v in cycle.items()}
        rest, acc = self._reduce({i: v for i, v in vec.items() if v != 0})
        if rest:
            raise ValueError("vector is not a cycle of this complex")
        zero = F.convert(0)
        return [acc.get(i, zero) for i in range(len(self.reps))]


@lru_cache(maxsize=64)
def _cached_basis(K: SimplicialComplex, k: int, field, reduced: bool):
    C = chain_complex(K, reduced, max_dim=k + 1)
    return C, HomologyBasis(C, k, field)


def homology_basis(K: SimplicialComplex, k: int, field=QQ, reduced: bool = False):
    """Chain complex (up to degree k+1) and homology basis of ``K`` in degree k."""
    return _cached_basis(K, k, field, reduced)


def homology_map_matrix(F: SimplicialMap, k: int, field=QQ, reduced: bool = False) -> Matrix:
    """Matrix of H_k(F) between the canonical homology bases."""
    Cs, Bs = homology_basis(F.source, k, field, reduced)
    Ct, Bt = homology_basis(F.target, k, field, reduced)
    fk = induced_chain_map(F, reduced, source=Cs, target=Ct).at(k)
    cols = [Bt.coordinates(_apply(fk, z)) for z in Bs.reps]
    rows = tuple(tuple(cols[j][i] for j in range(len(cols))) for i in range(len(Bt)))
    return Matrix(len(Bt), len(Bs), rows, field)


def _apply(M: SparseMatrix, vec: dict) -> dict:
    out: dict[int, object] = {}
    for j, c in vec.items():
        for i, v in M.cols[j].items():
            out[i] = out.get(i, 0) + c * v
    return out
