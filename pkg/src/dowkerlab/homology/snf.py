"""Exact integer matrices: Smith normal form and determinants.

Matrices are lists of rows of Python ints, so entries never overflow.
"""

from __future__ import annotations

from typing import Sequence

IntMatrix = list  # list[list[int]]

__all__ = [
    "IntMatrix",
    "identity",
    "matmul",
    "determinant",
    "smith_normal_form",
    "smith_certificate",
    "sparse_matmul",
    "invariant_factors",
    "is_smith_form",
]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    if not A:
        return []
    inner = len(B)
    if len(A[0]) != inner:
        raise ValueError("shape mismatch")
    cols = len(B[0]) if B else 0
    return [
        [sum(A[i][t] * B[t][j] for t in range(inner)) for j in range(cols)]
        for i in range(len(A))
    ]


def sparse_matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    """Same result as ``matmul`` but skips zero entries; fast for sparse transforms."""
    if not A:
        return []
    cols = len(B[0]) if B else (ncols or 0)
    if len(A[0]) != len(B):
        raise ValueError("shape mismatch")
    brows = [[(j, v) for j, v in enumerate(row) if v] for row in B]
    out = []
    for row in A:
        acc = [0] * cols
        for t, a in enumerate(row):
            if a:
                for j, b in brows[t]:
                    acc[j] += a * b
        out.append(acc)
    return out


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _argmin_abs(D, t, m, n):
    best = None
    for i in range(t, m):
        row = D[i]
        for j in range(t, n):
            v = row[j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(M: Sequence[Sequence[int]], ncols: int | None = None, track: bool = True):
    """Return ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular and ``D`` is diagonal with positive
    entries ``d_1 | d_2 | ...``.  Pivots are chosen by minimal absolute
    value.  ``ncols`` is only needed for matrices with no rows.  With
    ``track=False`` the transforms are skipped and returned as ``None``.
    """
    U, D, V, _, _ = _snf(M, ncols, track, False)
    return U, D, V


def smith_certificate(M: Sequence[Sequence[int]], ncols: int | None = None):
    """``(U, D, V, U_inv, V_inv)``: the Smith form plus inverse transforms.

    An integer inverse is a cheap proof that a transform is unimodular.
    """
    return _snf(M, ncols, True, True)


def _snf(M, ncols, track, inverses):
    m = len(M)
    n = len(M[0]) if m else (ncols or 0)
    D = [list(map(int, row)) for row in M]
    U = identity(m) if track else None
    V = identity(n) if track else None
    Ui = identity(m) if inverses else None
    Vi = identity(n) if inverses else None

    # U' = E U  gives  U'^-1 = U^-1 E^-1, a column operation on U^-1;
    # V' = V E  gives  V'^-1 = E^-1 V^-1, a row operation on V^-1.
    def swap_rows(a, b):
        D[a], D[b] = D[b], D[a]
        if track:
            U[a], U[b] = U[b], U[a]
        if inverses:
            for row in Ui:
                row[a], row[b] = row[b], row[a]

    def swap_cols(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        if track:
            for row in V:
                row[a], row[b] = row[b], row[a]
        if inverses:
            Vi[a], Vi[b] = Vi[b], Vi[a]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        if track:
            U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]
        if inverses:
            for row in Ui:
                if row[dst]:
                    row[src] -= q * row[dst]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in D:
            if row[src]:
                row[dst] += q * row[src]
        if track:
            for row in V:
                if row[src]:
                    row[dst] += q * row[src]
        if inverses:
            Vi[src] = [x - q * y for x, y in zip(Vi[src], Vi[dst])]

    for t in range(min(m, n)):
        best = _argmin_abs(D, t, m, n)
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        while True:
            p = D[t][t]
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    clean = clean and D[t][j] == 0
            if not clean:
                # bring the smallest leftover in row/column t to the pivot
                cand = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
                cand += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
                _, i, j = min(cand)
                if i != t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            if track:
                U[t] = [-x for x in U[t]]
            if inverses:
                for row in Ui:
                    row[t] = -row[t]
    return U, D, V, Ui, Vi


def invariant_factors(M: Sequence[Sequence[int]]) -> list[int]:
    """Non-zero diagonal of the Smith normal form, in divisibility order."""
    if not M:
        return []
    _, D, _ = smith_normal_form(M, track=False)
    return [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]


def is_smith_form(D: Sequence[Sequence[int]]) -> bool:
    """Diagonal, non-negative, non-zero entries first, each dividing the next."""
    diag = []
    for i, row in enumerate(D):
        for j, v in enumerate(row):
            if i != j and v:
                return False
            if i == j:
                diag.append(v)
    if any(v < 0 for v in diag):
        return False
    nz = [v for v in diag if v]
    if diag[: len(nz)] != nz:
        return False
    return all(b % a == 0 for a, b in zip(nz, nz[1:]))
