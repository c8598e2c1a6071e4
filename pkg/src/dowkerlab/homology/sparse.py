"""Column-sparse matrices and elimination over Z and over fields."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .snf import invariant_factors, smith_certificate

__all__ = [
    "SparseMatrix",
    "integer_reduction",
    "field_rank",
    "SmithCertificate",
    "sparse_smith_certificate",
    "verify_smith_certificate",
]


class SparseMatrix:
    """``nrows × ncols`` matrix stored as one ``{row: value}`` dict per column."""

    __slots__ = ("nrows", "ncols", "cols")

    def __init__(self, nrows: int, ncols: int, cols: Sequence[dict] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.cols = [dict(c) for c in cols] if cols is not None else [{} for _ in range(ncols)]
        if len(self.cols) != ncols:
            raise ValueError("column count mismatch")

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], ncols: int | None = None):
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else (ncols or 0)
        cols = [{i: rows[i][j] for i in range(nrows) if rows[i][j]} for j in range(ncols)]
        return cls(nrows, ncols, cols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int):
        return cls(nrows, ncols)

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.cols):
            for i, v in col.items():
                out[i][j] = v
        return out

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    def is_zero(self) -> bool:
        return not any(self.cols)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for col in other.cols:
            acc: dict[int, int] = defaultdict(int)
            for r, v in col.items():
                for i, w in self.cols[r].items():
                    acc[i] += v * w
            out.append({i: v for i, v in acc.items() if v})
        return SparseMatrix(self.nrows, other.ncols, out)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = []
        for a, b in zip(self.cols, other.cols):
            c = dict(a)
            for i, v in b.items():
                nv = c.get(i, 0) - v
                if nv:
                    c[i] = nv
                else:
                    c.pop(i, None)
            out.append(c)
        return SparseMatrix(self.nrows, self.ncols, out)

    def __neg__(self):
        return SparseMatrix(self.nrows, self.ncols, [{i: -v for i, v in c.items()} for c in self.cols])

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            {i: v for i, v in a.items() if v} == {i: v for i, v in b.items() if v}
            for a, b in zip(self.cols, other.cols)
        )

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


def _eliminate(cols: list[dict], pivot_ok, inverse, reduce) -> tuple[int, list[dict]]:
    """Pivot on acceptable entries until none remain.

    Each pivot is a unimodular (over Z) or invertible (over a field) step
    that deletes one row and one column, contributing one unit invariant
    factor.  Returns the pivot count and the columns left over.
    """
    rows: dict[int, set[int]] = defaultdict(set)
    for c, col in enumerate(cols):
        for r in col:
            rows[r].add(c)
    alive = [c for c, col in enumerate(cols) if col]
    pivots = 0
    progress = True
    while progress:
        progress = False
        for c in alive:
            col = cols[c]
            if not col:
                continue
            best = None
            for r, v in col.items():
                if pivot_ok(v):
                    cnt = len(rows[r])
                    if best is None or cnt < best[0]:
                        best = (cnt, r)
                        if cnt == 1:
                            break
            if best is None:
                continue
            r = best[1]
            inv = inverse(col[r])
            for j in rows[r]:
                if j == c:
                    continue
                cj = cols[j]
                factor = reduce(cj[r] * inv)
                for rr, vv in col.items():
                    nv = reduce(cj.get(rr, 0) - factor * vv)
                    if nv:
                        if rr not in cj:
                            rows[rr].add(j)
                        cj[rr] = nv
                    elif rr in cj:
                        del cj[rr]
                        if rr != r:
                            rows[rr].discard(j)
            for rr in col:
                if rr != r:
                    rows[rr].discard(c)
            rows[r] = set()
            cols[c] = {}
            pivots += 1
            progress = True
        alive = [c for c in alive if cols[c]]
    return pivots, [cols[c] for c in alive]


def integer_reduction(M: SparseMatrix) -> tuple[int, list[int]]:
    """Rank and invariant factors > 1 of an integer matrix.

    Unit pivots are eliminated sparsely; the remaining block (usually tiny
    for boundary matrices) goes through the dense Smith normal form.
    """
    cols = [dict(c) for c in M.cols if c]
    units, rest = _eliminate(cols, lambda v: v == 1 or v == -1, lambda v: v, lambda v: v)
    if not rest:
        return units, []
    row_ids = sorted({r for c in rest for r in c})
    pos = {r: i for i, r in enumerate(row_ids)}
    dense = [[0] * len(rest) for _ in row_ids]
    for j, col in enumerate(rest):
        for r, v in col.items():
            dense[pos[r]][j] = v
    factors = invariant_factors(dense)
    return units + len(factors), [d for d in factors if d > 1]


def field_rank(M: SparseMatrix, field) -> int:
    """Rank over a field of an integer matrix.

    Unit pivots are valid over every field and keep entries integral, so
    they are taken first on plain ints; field arithmetic only touches the
    leftover block.
    """
    units, rest = _eliminate(
        [dict(c) for c in M.cols if c],
        lambda v: v == 1 or v == -1,
        lambda v: v,
        lambda v: v,
    )
    cols = []
    for c in rest:
        col = {r: field.convert(v) for r, v in c.items()}
        col = {r: v for r, v in col.items() if v}
        if col:
            cols.append(col)
    rank, left = _eliminate(cols, lambda v: v != 0, field.inv, field.reduce)
    assert not left
    return units + rank


def columns_from(vectors: Iterable[dict], nrows: int) -> SparseMatrix:
    vectors = list(vectors)
    return SparseMatrix(nrows, len(vectors), vectors)


# -- Smith normal form with sparse, checkable transforms ----------------------


@dataclass
class SmithCertificate:
    """``U @ M @ V == diag(diagonal)`` together with inverses of U and V.

    ``U`` and ``V_inv`` are stored as row dicts, ``V`` and ``U_inv`` as
    column dicts, which is the natural layout for the operations that build
    them.  Integer inverses prove that both transforms are unimodular.
    """

    nrows: int
    ncols: int
    U: list[dict]
    V: list[dict]
    U_inv: list[dict]
    V_inv: list[dict]
    diagonal: list[int]


def _add_scaled(dst: dict, src: dict, q: int):
    """dst += q * src, dropping zeros."""
    for k, v in src.items():
        nv = dst.get(k, 0) + q * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


def _combine(vectors: list[dict], ids: list[int], T: list[list[int]]) -> list[dict]:
    """New vector a is sum_b T[a][b] * vectors[ids[b]]."""
    out = []
    for row in T:
        acc: dict = {}
        for b, t in enumerate(row):
            if t:
                _add_scaled(acc, vectors[ids[b]], t)
        out.append(acc)
    return out


def _transpose_dicts(vectors: list[dict], n: int) -> list[dict]:
    out = [{} for _ in range(n)]
    for i, vec in enumerate(vectors):
        for j, v in vec.items():
            out[j][i] = v
    return out


def sparse_smith_certificate(M: SparseMatrix) -> SmithCertificate:
    """Smith normal form of an integer matrix with explicit sparse transforms.

    Unit pivots are eliminated first, tracking every row and column
    operation; whatever is left goes through the dense certified algorithm.
    """
    m, n = M.shape
    cols = [dict(c) for c in M.cols]
    U = [{i: 1} for i in range(m)]
    Ui = [{i: 1} for i in range(m)]
    V = [{j: 1} for j in range(n)]
    Vi = [{j: 1} for j in range(n)]
    rows: dict[int, set[int]] = defaultdict(set)
    for c, col in enumerate(cols):
        for r in col:
            rows[r].add(c)
    pivots: list[tuple[int, int, int]] = []
    alive = [c for c, col in enumerate(cols) if col]
    progress = True
    while progress:
        progress = False
        for c in alive:
            col = cols[c]
            if not col:
                continue
            best = None
            for r, v in col.items():
                if v in (1, -1) and (best is None or len(rows[r]) < best[0]):
                    best = (len(rows[r]), r)
            if best is None:
                continue
            r = best[1]
            p = col[r]
            # column ops clear row r: col_j -= (a_rj * p) col_c
            for j in list(rows[r]):
                if j == c:
                    continue
                cj = cols[j]
                q = cj[r] * p
                for rr, vv in col.items():
                    nv = cj.get(rr, 0) - q * vv
                    if nv:
                        if rr not in cj:
                            rows[rr].add(j)
                        cj[rr] = nv
                    elif rr in cj:
                        del cj[rr]
                        rows[rr].discard(j)
                _add_scaled(V[j], V[c], -q)
                _add_scaled(Vi[c], Vi[j], q)
            # row ops clear column c: row_rr -= (a_rr,c * p) row_r
            for rr, vv in col.items():
                if rr == r:
                    continue
                q = vv * p
                _add_scaled(U[rr], U[r], -q)
                _add_scaled(Ui[r], Ui[rr], q)
                rows[rr].discard(c)
            rows[r] = set()
            cols[c] = {}
            pivots.append((r, c, p))
            progress = True
        alive = [c for c in alive if cols[c]]

    R2 = sorted({r for c in alive for r in cols[c]})
    C2 = alive
    pos = {r: a for a, r in enumerate(R2)}
    block = [[0] * len(C2) for _ in R2]
    for b, c in enumerate(C2):
        for r, v in cols[c].items():
            block[pos[r]][b] = v
    U2, D2, V2, U2i, V2i = smith_certificate(block, ncols=len(C2))
    if R2:
        for a, vec in zip(R2, _combine(U, R2, U2)):
            U[a] = vec
        U2i_t = [list(col) for col in zip(*U2i)]
        for b, vec in zip(R2, _combine(Ui, R2, U2i_t)):
            Ui[b] = vec
    if C2:
        V2_t = [list(col) for col in zip(*V2)]
        for b, vec in zip(C2, _combine(V, C2, V2_t)):
            V[b] = vec
        for a, vec in zip(C2, _combine(Vi, C2, V2i)):
            Vi[a] = vec
    k2 = sum(1 for t in range(min(len(R2), len(C2))) if D2[t][t])

    row_order = [r for r, _, _ in pivots] + R2[:k2]
    col_order = [c for _, c, _ in pivots] + C2[:k2]
    signs = [p for _, _, p in pivots] + [1] * k2
    placed_rows, placed_cols = set(row_order), set(col_order)
    row_order += [r for r in range(m) if r not in placed_rows]
    col_order += [c for c in range(n) if c not in placed_cols]
    signs += [1] * (m - len(signs))
    U_out = [{k: s * v for k, v in U[r].items()} for r, s in zip(row_order, signs)]
    Ui_out = [{k: s * v for k, v in Ui[r].items()} for r, s in zip(row_order, signs)]
    diagonal = [1] * len(pivots) + [D2[t][t] for t in range(k2)]
    return SmithCertificate(
        m, n, U_out, [V[c] for c in col_order], Ui_out, [Vi[c] for c in col_order], diagonal
    )


def verify_smith_certificate(M: SparseMatrix, cert: SmithCertificate) -> list[str]:
    """Independent check of a certificate; returns the problems found."""
    m, n = M.shape
    problems = []
    U_cols = _transpose_dicts(cert.U, m)

    def left_mul_U(col: dict) -> dict:
        acc: dict = {}
        for k, v in col.items():
            _add_scaled(acc, U_cols[k], v)
        return acc

    for j in range(n):
        mv: dict = {}
        for t, v in cert.V[j].items():
            _add_scaled(mv, M.cols[t], v)
        got = left_mul_U(mv)
        want = {j: cert.diagonal[j]} if j < len(cert.diagonal) else {}
        if got != want:
            problems.append(f"U·M·V differs from D in column {j}")
            break
    for j in range(m):
        if left_mul_U(cert.U_inv[j]) != {j: 1}:
            problems.append("U·U_inv is not the identity")
            break
    Vi_cols = _transpose_dicts(cert.V_inv, n)
    for j in range(n):
        acc: dict = {}
        for k, v in Vi_cols[j].items():
            _add_scaled(acc, cert.V[k], v)
        if acc != {j: 1}:
            problems.append("V·V_inv is not the identity")
            break
    d = cert.diagonal
    if any(x <= 0 for x in d) or any(b % a for a, b in zip(d, d[1:])):
        problems.append("diagonal is not a positive divisibility chain")
    return problems
