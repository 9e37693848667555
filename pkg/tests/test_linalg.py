import random
from fractions import Fraction

from lieforge.linalg import (
    det,
    fmt_vector,
    in_span,
    mat_vec,
    matrix,
    nullspace,
    positive_definite,
    rref,
    scalar,
    solve_affine,
    solve_unique,
    vector,
)

from conftest import random_matrix


def test_scalar_parsing():
    assert scalar("3/4") == Fraction(3, 4)
    assert scalar(-2) == Fraction(-2)
    assert scalar(Fraction(1, 3)) == Fraction(1, 3)


def test_scalar_rejects_floats_and_bools():
    import pytest

    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(TypeError):
        scalar(True)


def test_rref_simple():
    m = matrix([[2, 4], [1, 2]])
    red, pivots = rref(m)
    assert red == matrix([[1, 2]])
    assert pivots == (0,)


def test_nullspace_canonical():
    # x0 = x1, canonical basis row (1, 1)
    basis = nullspace(matrix([[1, -1]]), 2)
    assert basis == matrix([[1, 1]])


def test_solve_affine_inconsistent():
    part, null = solve_affine(matrix([[1, 0], [1, 0]]), vector([1, 2]))
    assert part is None


def test_solve_unique():
    sol = solve_unique(matrix([[2, 0], [0, 4]]), vector([1, 1]))
    assert sol == vector(["1/2", "1/4"])
    assert solve_unique(matrix([[1, 1], [2, 2]]), vector([1, 2])) is None


def test_det_and_positive_definite():
    assert det(matrix([[1, 2], [3, 4]])) == -2
    ok, _ = positive_definite(matrix([[2, -1], [-1, 2]]))
    assert ok
    bad, minor = positive_definite(matrix([[1, 2], [2, 1]]))
    assert not bad and minor == 2


def test_solutions_satisfy_system():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 5)
        m = rng.randint(1, 5)
        rows = tuple(tuple(Fraction(rng.randint(-3, 3)) for _ in range(n)) for _ in range(m))
        x = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
        rhs = mat_vec(rows, x)
        part, null = solve_affine(rows, rhs)
        assert part is not None
        assert mat_vec(rows, part) == rhs
        for v in null:
            assert mat_vec(rows, v) == (Fraction(0),) * m
        # rank-nullity
        red, pivots = rref(rows)
        assert len(pivots) + len(null) == n
        assert in_span(null + (part,), x) or part == x or in_span(null, tuple(a - b for a, b in zip(x, part)))


def test_nullspace_of_random_matrix_annihilates():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 6)
        m = random_matrix(rng, n)
        for v in nullspace(m, n):
            assert mat_vec(m, v) == (Fraction(0),) * n


def test_fmt_vector():
    labels = ("e1", "e2", "e3")
    assert fmt_vector(vector([1, 0, 0]), labels) == "e1"
    assert fmt_vector(vector([0, -1, "1/2"]), labels) == "-e2 + 1/2*e3"
    assert fmt_vector(vector([0, 0, 0]), labels) == "0"
