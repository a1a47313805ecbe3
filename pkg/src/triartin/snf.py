"""Exact integer Smith normal form with unimodular transform tracking.

Everything runs over Python's arbitrary-precision integers; relator matrices
of moderate covers already overflow 64-bit words under naive pivoting, so no
floating point or fixed-width arithmetic appears anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

IntMatrix = List[List[int]]


def identity_matrix(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(cols):
                    oi[j] += c * bk[j]
    return out


def mat_copy(a: Sequence[Sequence[int]]) -> IntMatrix:
    return [list(row) for row in a]


def determinant(a: IntMatrix) -> int:
    """Fraction-free (Bareiss) determinant; exact for integer input."""
    n = len(a)
    if n == 0:
        return 1
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    m = mat_copy(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass
class SmithDecomposition:
    """U @ A @ V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    diagonal: List[int]
    u: IntMatrix
    v: IntMatrix

    @property
    def invariant_factors(self) -> List[int]:
        return [d for d in self.diagonal if d != 0]

    def verify(self, a: IntMatrix) -> bool:
        rows = len(a)
        cols = len(a[0]) if a else 0
        d = mat_mul(mat_mul(self.u, mat_copy(a)), self.v)
        for i in range(rows):
            for j in range(cols):
                want = self.diagonal[i] if i == j and i < len(self.diagonal) else 0
                if d[i][j] != want:
                    return False
        chain = self.invariant_factors
        for x, y in zip(chain, chain[1:]):
            if y % x != 0:
                return False
        if any(d < 0 for d in self.diagonal):
            return False
        return abs(determinant(self.u)) == 1 and abs(determinant(self.v)) == 1


def smith_normal_form(a: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Pivots are chosen with minimal absolute value to keep coefficient growth
    in check.  Returns the diagonal together with the transforms.
    """
    d = mat_copy(a)
    rows = len(d)
    cols = len(d[0]) if rows else 0
    if any(len(row) != cols for row in d):
        raise ValueError("matrix must be rectangular")
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def swap_rows(i, j):
        if i != j:
            d[i], d[j] = d[j], d[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in d:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row dst += q * row src
        if q:
            d[dst] = [x + q * y for x, y in zip(d[dst], d[src])]
            u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        if q:
            for row in d:
                row[dst] += q * row[src]
            for row in v:
                row[dst] += q * row[src]

    def min_pivot(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(rows, cols):
        piv = min_pivot(t)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        # Clear row and column t; restart whenever a smaller remainder shows up.
        while True:
            restart = False
            for i in range(t + 1, rows):
                if d[i][t] != 0:
                    q = d[i][t] // d[t][t]
                    add_row(i, t, -q)
                    if d[i][t] != 0:
                        swap_rows(t, i)
                        restart = True
                        break
            if restart:
                continue
            for j in range(t + 1, cols):
                if d[t][j] != 0:
                    q = d[t][j] // d[t][t]
                    add_col(j, t, -q)
                    if d[t][j] != 0:
                        swap_cols(t, j)
                        restart = True
                        break
            if restart:
                continue
            break
        # Enforce divisibility of the untouched block by the pivot.
        fix = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if d[i][j] % d[t][t] != 0:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            add_row(t, fix, 1)
            continue
        t += 1

    diagonal = []
    for i in range(min(rows, cols)):
        entry = d[i][i]
        if entry < 0:
            d[i] = [-x for x in d[i]]
            u[i] = [-x for x in u[i]]
            entry = -entry
        diagonal.append(entry)
    return SmithDecomposition(diagonal=diagonal, u=u, v=v)


def cokernel(a: Sequence[Sequence[int]], cols: int | None = None) -> Tuple[int, List[int]]:
    """Free rank and torsion of Z^cols / row-span(a).

    ``cols`` must be given explicitly when ``a`` has no rows.
    """
    rows = list(a)
    if not rows:
        if cols is None:
            raise ValueError("cokernel of an empty relation set needs an explicit column count")
        return cols, []
    width = len(rows[0])
    if cols is not None and cols != width:
        raise ValueError("column count %d does not match matrix width %d" % (cols, width))
    dec = smith_normal_form(rows)
    nonzero = [x for x in dec.diagonal if x != 0]
    free_rank = width - len(nonzero)
    torsion = [x for x in nonzero if x > 1]
    return free_rank, torsion
