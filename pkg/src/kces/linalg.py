"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`. Vectors are tuples of fractions and
matrices are lists of such row tuples. Every function here is pure: inputs are
copied before elimination, so callers may pass any nested sequence of ints or
fractions.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

from .errors import PreconditionError

Vector = tuple[Fraction, ...]
Matrix = list[Vector]


def as_vector(v: Iterable) -> Vector:
    return tuple(Fraction(x) for x in v)


def as_matrix(m: Iterable[Iterable]) -> Matrix:
    rows = [as_vector(r) for r in m]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise PreconditionError("ragged matrix rows")
    return rows


def identity(n: int) -> Matrix:
    return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [tuple(col) for col in zip(*m)]


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [tuple(dot(row, col) for col in bt) for row in a]


def kron(a: Sequence, b: Sequence) -> Vector:
    """Kronecker product with the left factor most significant.

    ``result[i * len(b) + j] == a[i] * b[j]``.
    """
    return tuple(Fraction(x) * Fraction(y) for x in a for y in b)


def kron_all(factors: Iterable[Sequence]) -> Vector:
    out: Vector = (Fraction(1),)
    for f in factors:
        out = kron(out, f)
    return out


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the ascending list of pivot columns."""
    rows = [list(map(Fraction, r)) for r in m]
    if not rows:
        return [], []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        src = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        piv = rows[r]
        for i in range(n_rows):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [x - f * y for x, y in zip(rows[i], piv)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in rows], pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: Sequence[Sequence], n_cols: int | None = None) -> Matrix:
    """Basis of ``{v : m v = 0}``, one vector per free column.

    For every non-pivot column ``j`` of ``rref(m)``, in ascending order, the
    basis vector carries 1 at ``j``, 0 at the other free columns and the solved
    pivot coordinates elsewhere. ``n_cols`` is only needed when ``m`` has no
    rows.
    """
    if not m:
        if n_cols is None:
            raise PreconditionError("n_cols is required for a matrix without rows")
        return identity(n_cols)
    reduced, pivots = rref(m)
    width = len(reduced[0])
    pivot_set = set(pivots)
    basis = []
    for j in range(width):
        if j in pivot_set:
            continue
        v = [Fraction(0)] * width
        v[j] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[j]
        basis.append(tuple(v))
    return basis


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [tuple(row) + e for row, e in zip(as_matrix(m), identity(n))]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise PreconditionError("matrix is singular")
    return [row[n:] for row in reduced]


def det(m: Sequence[Sequence]) -> Fraction:
    a = [list(map(Fraction, r)) for r in m]
    n = len(a)
    out = Fraction(1)
    for c in range(n):
        src = next((i for i in range(c, n) if a[i][c] != 0), None)
        if src is None:
            return Fraction(0)
        if src != c:
            a[c], a[src] = a[src], a[c]
            out = -out
        piv = a[c][c]
        out *= piv
        for i in range(c + 1, n):
            f = a[i][c] / piv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def gram_projector(basis: Sequence[Sequence]) -> Matrix:
    """Orthogonal projector ``B^T (B B^T)^-1 B`` onto the row span of ``basis``."""
    b = as_matrix(basis)
    gram = matmul(b, transpose(b))
    try:
        g_inv = inverse(gram)
    except PreconditionError:
        raise PreconditionError("basis rows are not linearly independent") from None
    return matmul(transpose(b), matmul(g_inv, b))


def is_symmetric(m: Sequence[Sequence]) -> bool:
    n = len(m)
    return all(len(r) == n for r in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n)
    )


def psd_check(s: Sequence[Sequence]) -> bool:
    """Decide positive semidefiniteness exactly by symmetric elimination."""
    if not is_symmetric(s):
        raise PreconditionError("psd_check needs a symmetric matrix")
    a = [list(map(Fraction, r)) for r in s]
    while a:
        head = a[0][0]
        if head < 0:
            return False
        if head == 0:
            # a zero pivot forces the whole row (and column) to vanish
            if any(a[0][1:]):
                return False
            a = [row[1:] for row in a[1:]]
            continue
        top = a[0]
        a = [
            [x - row[0] * y / head for x, y in zip(row[1:], top[1:])]
            for row in a[1:]
        ]
    return True


def _digits(index: int, dims: Sequence[int]) -> list[int]:
    out = []
    for d in reversed(dims):
        index, r = divmod(index, d)
        out.append(r)
    return out[::-1]


def _index(digits: Sequence[int], dims: Sequence[int]) -> int:
    i = 0
    for s, d in zip(digits, dims):
        i = i * d + s
    return i


def partial_transpose(m: Sequence[Sequence], dims: Sequence[int], block: Iterable[int]) -> Matrix:
    """Transpose the tensor indices of the parties in ``block`` (0-based).

    Party 0 is the most significant digit of the global index.
    """
    total = prod(dims)
    if len(m) != total or any(len(r) != total for r in m):
        raise PreconditionError(f"matrix is not {total}x{total} for dims {list(dims)}")
    block = set(block)
    if not block <= set(range(len(dims))):
        raise PreconditionError(f"block {sorted(block)} out of range for {len(dims)} parties")
    digits = [_digits(i, dims) for i in range(total)]
    out = [[Fraction(0)] * total for _ in range(total)]
    for i in range(total):
        di = digits[i]
        for j in range(total):
            dj = digits[j]
            ni = [dj[p] if p in block else di[p] for p in range(len(dims))]
            nj = [di[p] if p in block else dj[p] for p in range(len(dims))]
            out[_index(ni, dims)][_index(nj, dims)] = Fraction(m[i][j])
    return [tuple(r) for r in out]


def all_minors_positive(m: Sequence[Sequence]) -> bool:
    """True iff every square minor of every order is strictly positive.

    Exhaustive; meant for small matrices.
    """
    a = as_matrix(m)
    if not a:
        return False
    n_rows, n_cols = len(a), len(a[0])
    for order in range(1, min(n_rows, n_cols) + 1):
        for rows in combinations(range(n_rows), order):
            for cols in combinations(range(n_cols), order):
                if det([[a[r][c] for c in cols] for r in rows]) <= 0:
                    return False
    return True
