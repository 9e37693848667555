"""Lie algebras with exact rational structure constants.

A LieAlgebra is the dimension plus the full antisymmetric tensor c with
[e_i, e_j] = sum_k c[i][j][k] e_k. Constructors take only the i < j
entries; the antisymmetric completion is automatic and the diagonal is
forced to zero. The Jacobi identity is not enforced at construction,
``check_jacobi`` reports it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .linalg import (
    Matrix,
    ScalarLike,
    Vector,
    ZERO,
    fmt_basis_tuple,
    fmt_vector,
    in_span,
    is_zero_vector,
    nullspace,
    rref,
    scalar,
    vec_add,
    vec_scale,
    zero_vector,
)
from .report import CheckReport, DimensionMismatch, fail, ok


def default_labels(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(dim))


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    c: tuple[tuple[Vector, ...], ...]  # c[i][j] is the vector [e_i, e_j]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        n = self.dim
        if n <= 0:
            raise ValueError("dimension must be positive")
        if len(self.labels) != n or len(self.c) != n:
            raise DimensionMismatch("structure tensor shape does not match dim")
        for i in range(n):
            if len(self.c[i]) != n:
                raise DimensionMismatch("structure tensor shape does not match dim")
            for j in range(n):
                if len(self.c[i][j]) != n:
                    raise DimensionMismatch("structure tensor shape does not match dim")
                if self.c[i][j] != tuple(-x for x in self.c[j][i]):
                    raise ValueError(f"structure constants not antisymmetric at ({i},{j})")

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[tuple[int, int], Mapping[int, ScalarLike]],
        labels: Sequence[str] | None = None,
    ) -> "LieAlgebra":
        """Build from sparse i < j data: brackets[(i, j)][k] = c_ijk."""
        table = [[list(zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket indices must satisfy 0 <= i < j < dim, got ({i},{j})")
            for k, value in coeffs.items():
                if not 0 <= k < dim:
                    raise ValueError(f"target index {k} out of range")
                v = scalar(value)
                table[i][j][k] = v
                table[j][i][k] = -v
        c = tuple(tuple(tuple(row) for row in plane) for plane in table)
        lbl = tuple(labels) if labels is not None else default_labels(dim)
        return cls(dim, c, lbl)

    @classmethod
    def abelian(cls, dim: int, labels: Sequence[str] | None = None) -> "LieAlgebra":
        return cls.from_brackets(dim, {}, labels)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(1) if j == i else ZERO for j in range(self.dim))

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def sparse_brackets(self) -> dict[tuple[int, int], dict[int, Fraction]]:
        """The i < j entries with nonzero coefficients, for serialization."""
        out: dict[tuple[int, int], dict[int, Fraction]] = {}
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                entries = {k: v for k, v in enumerate(self.c[i][j]) if v != 0}
                if entries:
                    out[(i, j)] = entries
        return out


def bracket(g: LieAlgebra, x: Vector, y: Vector) -> Vector:
    """[x, y] by bilinear expansion through the structure constants."""
    if len(x) != g.dim or len(y) != g.dim:
        raise DimensionMismatch("vector length does not match algebra dimension")
    out = zero_vector(g.dim)
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0 or i == j:
                continue
            out = vec_add(out, vec_scale(xi * yj, g.c[i][j]))
    return out


def adjoint(g: LieAlgebra, x: Vector) -> Matrix:
    """ad(x): column j is [x, e_j]."""
    cols = [bracket(g, x, g.basis_vector(j)) for j in range(g.dim)]
    return tuple(tuple(cols[j][i] for j in range(g.dim)) for i in range(g.dim))


def jacobi_residual(g: LieAlgebra, i: int, j: int, k: int) -> Vector:
    """[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]."""
    r = bracket(g, g.c[i][j], g.basis_vector(k))
    r = vec_add(r, bracket(g, g.c[j][k], g.basis_vector(i)))
    return vec_add(r, bracket(g, g.c[k][i], g.basis_vector(j)))


def check_jacobi(g: LieAlgebra) -> CheckReport:
    """Jacobi identity on all basis triples i < j < k."""
    failures = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            for k in range(j + 1, g.dim):
                res = jacobi_residual(g, i, j, k)
                if not is_zero_vector(res):
                    failures.append(
                        fail(
                            f"jacobi{fmt_basis_tuple((i, j, k), g.labels)}",
                            f"cyclic sum = {fmt_vector(res, g.labels)}",
                        )
                    )
    if failures:
        return CheckReport(tuple(failures))
    return CheckReport((ok("jacobi_all_triples"),))


@dataclass(frozen=True)
class Subspace:
    """Canonical subspace: reduced-echelon basis rows, pivots increasing."""

    ambient_dim: int
    rows: tuple[Vector, ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Sequence[Vector]) -> "Subspace":
        nonzero = [v for v in vectors if not is_zero_vector(v)]
        if not nonzero:
            return cls(ambient_dim, ())
        reduced, _ = rref(nonzero)
        return cls(ambient_dim, reduced)

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        from .linalg import identity

        return cls(ambient_dim, identity(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Vector) -> bool:
        return in_span(self.rows, v)

    def describe(self, labels: Sequence[str]) -> str:
        if not self.rows:
            return "{0}"
        return "span{" + ", ".join(fmt_vector(r, labels) for r in self.rows) + "}"


def center(g: LieAlgebra) -> Subspace:
    """Nullspace of the stacked adjoint maps."""
    rows = []
    for j in range(g.dim):
        for k in range(g.dim):
            rows.append(tuple(g.c[i][j][k] for i in range(g.dim)))
    basis = nullspace(rows, g.dim)
    return Subspace(g.dim, basis)
