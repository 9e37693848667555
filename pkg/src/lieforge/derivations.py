"""Derivation checks and affine solution spaces of linear-map constraints.

Unknowns are the n^2 entries of a map in row-major order, D[i][j] with
column j the image of e_j; solution bases come back row-reduced in that
flattening, so results are canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieAlgebra, Subspace, bracket
from .forms import KForm
from .linalg import (
    Matrix,
    Vector,
    ZERO,
    fmt_basis_tuple,
    fmt_vector,
    in_span,
    mat_vec,
    nullspace,
    solve_affine,
    zero_vector,
)
from .report import CheckReport, DimensionMismatch, fail, ok


def is_derivation(g: LieAlgebra, d: Matrix) -> CheckReport:
    """Leibniz rule D[e_i,e_j] = [De_i,e_j] + [e_i,De_j] on all pairs."""
    if len(d) != g.dim:
        raise DimensionMismatch("map does not match algebra dimension")
    failures = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            lhs = mat_vec(d, g.c[i][j])
            di = tuple(d[r][i] for r in range(g.dim))
            dj = tuple(d[r][j] for r in range(g.dim))
            rhs = tuple(
                a + b
                for a, b in zip(bracket(g, di, g.basis_vector(j)), bracket(g, g.basis_vector(i), dj))
            )
            if lhs != rhs:
                failures.append(
                    fail(
                        f"leibniz{fmt_basis_tuple((i, j), g.labels)}",
                        f"D[e_i,e_j] = {fmt_vector(lhs, g.labels)}, "
                        f"[De_i,e_j]+[e_i,De_j] = {fmt_vector(rhs, g.labels)}",
                    )
                )
    if failures:
        return CheckReport(tuple(failures))
    return CheckReport((ok("leibniz_all_pairs"),))


@dataclass(frozen=True)
class Leibniz:
    """D is a derivation of the algebra."""


@dataclass(frozen=True)
class FormEigen:
    """phi o D = lambda * phi for a fixed 1-form."""

    phi: KForm
    factor: Fraction


@dataclass(frozen=True)
class Commute:
    """D o A = A o D, restricted to a subspace when given."""

    a: Matrix
    on: Subspace | None = None


@dataclass(frozen=True)
class Sends:
    """D(v) = w for fixed vectors."""

    v: Vector
    w: Vector


Constraint = Leibniz | FormEigen | Commute | Sends


def _leibniz_rows(g: LieAlgebra) -> tuple[list[Vector], list[Fraction]]:
    n = g.dim
    rows: list[Vector] = []
    rhs: list[Fraction] = []
    for p in range(n):
        for q in range(p + 1, n):
            for k in range(n):
                row = [ZERO] * (n * n)
                # D([e_p,e_q])_k = sum_m c[p][q][m] D[k][m]
                for m in range(n):
                    row[k * n + m] += g.c[p][q][m]
                # -[D e_p, e_q]_k = -sum_i D[i][p] c[i][q][k]
                for i in range(n):
                    row[i * n + p] -= g.c[i][q][k]
                # -[e_p, D e_q]_k = -sum_j D[j][q] c[p][j][k]
                for j in range(n):
                    row[j * n + q] -= g.c[p][j][k]
                rows.append(tuple(row))
                rhs.append(ZERO)
    return rows, rhs


def _form_eigen_rows(g: LieAlgebra, phi: KForm, factor: Fraction) -> tuple[list[Vector], list[Fraction]]:
    n = g.dim
    coords = tuple(phi.coeff((i,)) for i in range(n))
    rows: list[Vector] = []
    rhs: list[Fraction] = []
    for j in range(n):
        row = [ZERO] * (n * n)
        for i in range(n):
            row[i * n + j] += coords[i]
        rows.append(tuple(row))
        rhs.append(factor * coords[j])
    return rows, rhs


def _commute_rows(g: LieAlgebra, a: Matrix, on: Subspace | None) -> tuple[list[Vector], list[Fraction]]:
    n = g.dim
    vectors = on.rows if on is not None else tuple(g.basis_vector(j) for j in range(n))
    rows: list[Vector] = []
    rhs: list[Fraction] = []
    for v in vectors:
        av = mat_vec(a, v)
        for k in range(n):
            row = [ZERO] * (n * n)
            # D(Av)_k - A(Dv)_k = sum_j Av_j D[k][j] - sum_i A[k][i] sum_j v_j D[i][j]
            for j in range(n):
                row[k * n + j] += av[j]
            for i in range(n):
                for j in range(n):
                    row[i * n + j] -= a[k][i] * v[j]
            rows.append(tuple(row))
            rhs.append(ZERO)
    return rows, rhs


def _sends_rows(g: LieAlgebra, v: Vector, w: Vector) -> tuple[list[Vector], list[Fraction]]:
    n = g.dim
    rows: list[Vector] = []
    rhs: list[Fraction] = []
    for k in range(n):
        row = [ZERO] * (n * n)
        for j in range(n):
            row[k * n + j] += v[j]
        rows.append(tuple(row))
        rhs.append(w[k])
    return rows, rhs


def _unflatten(g: LieAlgebra, flat: Vector) -> Matrix:
    n = g.dim
    return tuple(flat[i * n : (i + 1) * n] for i in range(n))


def derivation_space(
    g: LieAlgebra, constraints: list[Constraint]
) -> tuple[Matrix | None, tuple[Matrix, ...]]:
    """Solve the combined affine system over the map entries.

    Returns (particular solution or None when inconsistent, homogeneous
    basis as matrices, row-reduced over the flattened entries).
    """
    n = g.dim
    rows: list[Vector] = []
    rhs: list[Fraction] = []
    for con in constraints:
        if isinstance(con, Leibniz):
            r, b = _leibniz_rows(g)
        elif isinstance(con, FormEigen):
            if con.phi.degree != 1 or con.phi.dim != n:
                raise DimensionMismatch("constraint form does not match the algebra")
            r, b = _form_eigen_rows(g, con.phi, con.factor)
        elif isinstance(con, Commute):
            if len(con.a) != n:
                raise DimensionMismatch("constraint map does not match the algebra")
            r, b = _commute_rows(g, con.a, con.on)
        elif isinstance(con, Sends):
            if len(con.v) != n or len(con.w) != n:
                raise DimensionMismatch("constraint vectors do not match the algebra")
            r, b = _sends_rows(g, con.v, con.w)
        else:
            raise TypeError(f"unknown constraint {con!r}")
        rows.extend(r)
        rhs.extend(b)
    if not rows:
        basis = nullspace([], n * n)
        return _unflatten(g, zero_vector(n * n)), tuple(_unflatten(g, v) for v in basis)
    particular, homogeneous = solve_affine(rows, rhs)
    basis_maps = tuple(_unflatten(g, v) for v in homogeneous)
    if particular is None:
        return None, basis_maps
    return _unflatten(g, particular), basis_maps


def map_in_family(g: LieAlgebra, d: Matrix, particular: Matrix, basis: tuple[Matrix, ...]) -> bool:
    """Is d = particular + (combination of basis maps)?"""
    n = g.dim
    flat_diff = tuple(d[i][j] - particular[i][j] for i in range(n) for j in range(n))
    flat_basis = [tuple(b[i][j] for i in range(n) for j in range(n)) for b in basis]
    return in_span(flat_basis, flat_diff)
