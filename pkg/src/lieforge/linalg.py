"""Exact rational linear algebra on immutable tuples.

Scalars are fractions.Fraction (canonical reduced form, positive
denominator); floats are rejected at the boundary. Vectors are tuples of
Fractions, matrices are tuples of row tuples. Nothing here mutates its
inputs, so every value is safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction
Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

ScalarLike = Fraction | int | str


def scalar(value: ScalarLike) -> Fraction:
    """Coerce an exact value ("p/q" string, int or Fraction) to Fraction."""
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact scalar: {value!r}")


def vector(items: Iterable[ScalarLike]) -> Vector:
    return tuple(scalar(x) for x in items)


def matrix(rows: Iterable[Iterable[ScalarLike]]) -> Matrix:
    return tuple(vector(r) for r in rows)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def zero_matrix(n: int, m: int | None = None) -> Matrix:
    return tuple((ZERO,) * (m if m is not None else n) for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def diagonal(entries: Sequence[ScalarLike]) -> Matrix:
    d = vector(entries)
    n = len(d)
    return tuple(tuple(d[i] if i == j else ZERO for j in range(n)) for i in range(n))


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vec_scale(c: Fraction, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def is_zero_vector(a: Vector) -> bool:
    return all(x == 0 for x in a)


def is_zero_matrix(m: Matrix) -> bool:
    return all(is_zero_vector(r) for r in m)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_vec(m: Matrix, v: Vector) -> Vector:
    return tuple(sum((row[j] * v[j] for j in range(len(v))), ZERO) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), ZERO) for col in bt) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(r, s) for r, s in zip(a, b, strict=True))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_sub(r, s) for r, s in zip(a, b, strict=True))


def mat_scale(c: Fraction, m: Matrix) -> Matrix:
    return tuple(vec_scale(c, r) for r in m)


def mat_neg(m: Matrix) -> Matrix:
    return mat_scale(-ONE, m)


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return a == b


def column(m: Matrix, j: int) -> Vector:
    return tuple(row[j] for row in m)


def rref(rows: Sequence[Vector]) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = ONE / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def nullspace(rows: Sequence[Vector], ncols: int) -> tuple[Vector, ...]:
    """Canonical (row-reduced) basis of {x : rows @ x = 0}."""
    if not rows:
        return tuple(identity(ncols)) if ncols else ()
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(tuple(v))
    if not basis:
        return ()
    canonical, _ = rref(basis)
    return canonical


def solve_affine(rows: Sequence[Vector], rhs: Sequence[Fraction]) -> tuple[Vector | None, tuple[Vector, ...]]:
    """Solve rows @ x = rhs; returns (particular or None, nullspace basis).

    The particular solution sets all free variables to zero, making it
    canonical for a given system.
    """
    ncols = len(rows[0]) if rows else 0
    if not rows:
        return zero_vector(ncols), nullspace(rows, ncols)
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs, strict=True)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None, nullspace(rows, ncols)
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        x[p] = red[r][ncols]
    return tuple(x), nullspace(rows, ncols)


def solve_unique(rows: Sequence[Vector], rhs: Sequence[Fraction]) -> Vector | None:
    """Unique solution of rows @ x = rhs, or None when absent/non-unique."""
    part, null = solve_affine(rows, rhs)
    if part is None or null:
        return None
    return part


def in_span(rows: Sequence[Vector], v: Vector) -> bool:
    """Is v a linear combination of the given rows?"""
    if is_zero_vector(v):
        return True
    if not rows:
        return False
    cols = [tuple(r[j] for r in rows) for j in range(len(v))]
    part, _ = solve_affine(cols, v)
    return part is not None


def det(m: Matrix) -> Fraction:
    """Determinant by exact Gaussian elimination."""
    n = len(m)
    work = [list(r) for r in m]
    result = ONE
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if work[i][c] != 0), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            result = -result
        result *= work[c][c]
        inv = ONE / work[c][c]
        for i in range(c + 1, n):
            if work[i][c] != 0:
                f = work[i][c] * inv
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return result


def positive_definite(m: Matrix) -> tuple[bool, int | None]:
    """Sylvester's criterion; returns (ok, first failing minor size)."""
    for k in range(1, len(m) + 1):
        minor = tuple(row[:k] for row in m[:k])
        if det(minor) <= 0:
            return False, k
    return True, None


def fmt_scalar(x: Fraction) -> str:
    return str(x)


def fmt_vector(v: Vector, labels: Sequence[str]) -> str:
    """Render a vector as a signed combination of basis labels."""
    parts: list[str] = []
    for coef, label in zip(v, labels):
        if coef == 0:
            continue
        if coef == 1:
            term = label
        elif coef == -1:
            term = f"-{label}"
        else:
            term = f"{coef}*{label}"
        if parts and not term.startswith("-"):
            parts.append(f"+ {term}")
        elif parts:
            parts.append(f"- {term[1:]}")
        else:
            parts.append(term)
    return " ".join(parts) if parts else "0"


def fmt_basis_tuple(idxs: Sequence[int], labels: Sequence[str]) -> str:
    return "(" + ",".join(labels[i] for i in idxs) + ")"
