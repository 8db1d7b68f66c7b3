"""Smith normal form over Q[t] and the t-adic exponents it exposes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poly import Poly

Matrix = list[list[Poly]]


class SingularMatrixError(ValueError):
    pass


def identity(n: int) -> Matrix:
    return [[Poly.const(1 if i == j else 0) for j in range(n)] for i in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    return [[sum((A[i][x] * B[x][j] for x in range(k)), Poly()) for j in range(m)] for i in range(n)]


def det(M: Matrix) -> Poly:
    """Bareiss fraction-free elimination; every division below is exact."""
    n = len(M)
    if n == 0:
        return Poly.const(1)
    A = [list(row) for row in M]
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        if A[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not A[i][k].is_zero()), None)
            if swap is None:
                return Poly()
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        p = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * p - A[i][k] * A[k][j]) // prev
        prev = p
    return A[n - 1][n - 1] if sign > 0 else -A[n - 1][n - 1]


@dataclass(frozen=True)
class SNFResult:
    """``U @ M @ V == diag(diagonal)`` with ``U``, ``V`` invertible over Q[t]."""

    diagonal: tuple[Poly, ...]
    U: Matrix
    V: Matrix


def smith_normal_form(M: Sequence[Sequence[Poly]]) -> SNFResult:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    A = [[x if isinstance(x, Poly) else Poly.const(x) for x in row] for row in M]
    U, V = identity(n), identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for X in (A, V):
            for row in X:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        for X in (A, U):
            X[dst] = [a - q * b for a, b in zip(X[dst], X[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for X in (A, V):
            for row in X:
                row[dst] = row[dst] - q * row[src]

    for k in range(n):
        while True:
            nonzero = [(A[i][j].degree, i, j) for i in range(k, n) for j in range(k, n) if not A[i][j].is_zero()]
            if not nonzero:
                raise SingularMatrixError("matrix is singular over Q(t)")
            _, i, j = min(nonzero)
            swap_rows(k, i)
            swap_cols(k, j)
            p = A[k][k]
            clean = True
            for i in range(k + 1, n):
                if not A[i][k].is_zero():
                    q, r = divmod(A[i][k], p)
                    add_row(i, k, q)
                    clean = clean and r.is_zero()
            for j in range(k + 1, n):
                if not A[k][j].is_zero():
                    q, r = divmod(A[k][j], p)
                    add_col(j, k, q)
                    clean = clean and r.is_zero()
            if not clean:
                continue
            # Enforce divisibility into the trailing block.
            bad = next(
                ((i, j) for i in range(k + 1, n) for j in range(k + 1, n) if not (A[i][j] % p).is_zero()),
                None,
            )
            if bad is None:
                break
            add_row(k, bad[0], Poly.const(-1))
        lead = A[k][k].lead
        A[k][k] = A[k][k] / lead
        U[k] = [x / lead for x in U[k]]
    return SNFResult(tuple(A[i][i] for i in range(n)), U, V)


def pole_exponents(M: Sequence[Sequence[Poly]], shift: int = 0) -> tuple[list[int], list[int]]:
    """Split the ``t``-adic invariant factors of ``t^-shift M`` by sign.

    Returns ``(alpha, beta)``: the positive exponents and the absolute values
    of the negative ones, each in increasing order.
    """
    diag = smith_normal_form(M).diagonal
    exps = sorted(d.valuation() - shift for d in diag)
    alpha = [e for e in exps if e > 0]
    beta = sorted(-e for e in exps if e < 0)
    return alpha, beta


def parse_matrix(text: str) -> Matrix:
    """Rows on separate lines, entries separated by ``;`` or tabs."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        cells = [c for c in (line.split(";") if ";" in line else line.split("\t")) if c.strip()]
        try:
            rows.append([Poly.parse(c) for c in cells])
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ValueError("matrix file is empty")
    if any(len(r) != len(rows) for r in rows):
        raise ValueError(f"matrix must be square, got {len(rows)} rows of lengths {[len(r) for r in rows]}")
    return rows
