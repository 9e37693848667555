import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieforge import (
    KForm,
    LieAlgebra,
    builtin,
    ce_differential,
    kirillov_form,
    radical,
    top_contact_test,
    wedge,
    wedge_power,
)
from lieforge.algebra import Subspace
from lieforge.forms import evaluation_sign
from lieforge.linalg import vector

from conftest import (
    random_jacobi_algebra,
    random_kform,
    random_one_form,
    shuffle_wedge_eval,
)

H3 = builtin("h3").algebra
D4 = builtin("d4half").algebra
G0 = builtin("g0").algebra
E3_H3 = KForm.basis_one_form(3, 2)
E3_D4 = KForm.basis_one_form(4, 2)


def test_differential_of_e3_on_h3():
    d = ce_differential(H3, E3_H3)
    assert d.coeff((0, 1)) == -1
    assert d.coeffs == (((0, 1), Fraction(-1)),)


def test_differential_of_e3_on_d4half():
    d = ce_differential(D4, E3_D4)
    assert d.coeff((0, 1)) == -1
    assert d.coeff((2, 3)) == 1
    assert len(d.coeffs) == 2


def test_wedge_determinant_convention():
    e1 = KForm.basis_one_form(2, 0)
    e2 = KForm.basis_one_form(2, 1)
    w = wedge(e1, e2)
    assert w.evaluate((vector([1, 0]), vector([0, 1]))) == 1
    assert wedge(e1, e1).is_zero()


def test_paper_convention_sign():
    # interior-product convention flips degree-2 evaluations
    assert evaluation_sign(2, "paper") == -1
    assert evaluation_sign(1, "paper") == 1
    assert evaluation_sign(3, "paper") == -1
    assert evaluation_sign(4, "paper") == 1
    assert evaluation_sign(5, "paper") == 1
    with pytest.raises(ValueError):
        evaluation_sign(2, "other")


def test_radical_examples():
    b = kirillov_form(H3, E3_H3)
    assert radical(H3, b) == Subspace.from_vectors(3, (H3.basis_vector(2),))
    assert radical(H3, KForm.zero(3, 2)) == Subspace.full(3)
    omega = ce_differential(D4, E3_D4).neg()
    assert radical(D4, omega).dim == 0


def test_radical_rank_nullity():
    rng = random.Random(23)
    from conftest import random_two_form
    from lieforge.linalg import rref

    for _ in range(30):
        g = random_jacobi_algebra(rng, rng.randint(2, 6))
        b = random_two_form(rng, g.dim)
        rad = radical(g, b)
        _, pivots = rref(b.as_matrix())
        assert len(pivots) + rad.dim == g.dim
        for v in rad.rows:
            for j in range(g.dim):
                assert b.evaluate((v, g.basis_vector(j))) == 0


def test_top_contact_h3():
    res = top_contact_test(H3, E3_H3)
    assert res.holds and res.coefficient == -1


def test_top_contact_abelian_fails():
    res = top_contact_test(LieAlgebra.abelian(3), KForm.basis_one_form(3, 2))
    assert not res.holds and res.coefficient == 0


def test_top_contact_even_dimension():
    res = top_contact_test(D4, E3_D4)
    assert not res.holds and res.coefficient is None


def test_top_contact_g0_via_shuffle_oracle():
    alpha = KForm.one_form(5, [0, 0, 1, 0, 1])
    res = top_contact_test(G0, alpha)
    assert res.holds
    da = ce_differential(G0, alpha)
    two = wedge(da, da)
    vectors = [G0.basis_vector(i) for i in range(5)]
    oracle = shuffle_wedge_eval(alpha, two, vectors)
    assert oracle == res.coefficient
    # and the inner wedge agrees with its own shuffle expansion
    probe = [G0.basis_vector(i) for i in (0, 1, 2, 3)]
    assert shuffle_wedge_eval(da, da, probe) == two.evaluate(probe)


small_dims = st.integers(min_value=1, max_value=5)


@st.composite
def algebra_and_form(draw, max_degree=None):
    seed = draw(st.integers(min_value=0, max_value=10_000))
    rng = random.Random(seed)
    dim = draw(small_dims)
    g = random_jacobi_algebra(rng, dim)
    degree = draw(st.integers(min_value=0, max_value=max_degree if max_degree is not None else dim))
    return g, random_kform(rng, g.dim, degree)


@settings(max_examples=60, deadline=None)
@given(algebra_and_form())
def test_differential_squares_to_zero(data):
    g, form = data
    assert ce_differential(g, ce_differential(g, form)).is_zero()


@settings(max_examples=60, deadline=None)
@given(algebra_and_form(max_degree=1))
def test_kirillov_is_minus_differential(data):
    g, form = data
    if form.degree != 1:
        form = random_one_form(random.Random(0), g.dim)
    assert kirillov_form(g, form) == ce_differential(g, form).neg()


@st.composite
def form_pair(draw):
    seed = draw(st.integers(min_value=0, max_value=10_000))
    rng = random.Random(seed)
    dim = draw(st.integers(min_value=1, max_value=6))
    p = draw(st.integers(min_value=0, max_value=dim))
    q = draw(st.integers(min_value=0, max_value=dim))
    return random_kform(rng, dim, p), random_kform(rng, dim, q), rng


@settings(max_examples=60, deadline=None)
@given(form_pair())
def test_wedge_graded_commutative_and_shuffle(data):
    a, b, rng = data
    ab = wedge(a, b)
    ba = wedge(b, a)
    sign = -1 if (a.degree * b.degree) % 2 else 1
    assert ab == ba.scale(sign)
    if ab.degree <= a.dim:
        vectors = [
            vector([rng.randint(-2, 2) for _ in range(a.dim)]) for _ in range(ab.degree)
        ]
        assert ab.evaluate(vectors) == shuffle_wedge_eval(a, b, vectors)


@settings(max_examples=40, deadline=None)
@given(form_pair(), st.integers(min_value=0, max_value=10_000))
def test_wedge_associative(data, seed):
    a, b, _ = data
    c = random_kform(random.Random(seed), a.dim, min(a.dim, 2))
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def test_wedge_power_of_symplectic():
    omega = KForm.two_form(4, {(0, 1): 1, (2, 3): -1})
    top = wedge_power(omega, 2)
    assert top.coeff((0, 1, 2, 3)) == -2


def test_kform_evaluation_is_alternating():
    rng = random.Random(51)
    for _ in range(30):
        dim = rng.randint(2, 6)
        degree = rng.randint(2, dim)
        form = random_kform(rng, dim, degree)
        vectors = [
            vector([rng.randint(-2, 2) for _ in range(dim)]) for _ in range(degree)
        ]
        base = form.evaluate(vectors)
        swapped = list(vectors)
        swapped[0], swapped[1] = swapped[1], swapped[0]
        assert form.evaluate(swapped) == -base
        assert form.evaluate([vectors[0], vectors[0]] + vectors[2:]) == 0


def test_kform_constructor_validation():
    with pytest.raises(ValueError):
        KForm(3, 2, (((0, 0), Fraction(1)),))  # repeated index
    with pytest.raises(ValueError):
        KForm(3, 2, (((1, 0), Fraction(1)),))  # not increasing
    with pytest.raises(ValueError):
        KForm(3, 2, (((0, 1), Fraction(0)),))  # zero coefficient kept
    with pytest.raises(ValueError):
        KForm(3, 1, (((4,), Fraction(1)),))  # index out of range
    # from_coeffs normalizes instead of raising
    assert KForm.from_coeffs(3, 2, {(0, 1): 0}).is_zero()


def test_algebra_constructor_rejects_non_antisymmetric_tensor():
    from lieforge import LieAlgebra
    from lieforge.linalg import ZERO, ONE

    good = LieAlgebra.from_brackets(2, {(0, 1): {0: 1}})
    bad_c = (
        ((ZERO, ZERO), (ONE, ZERO)),
        ((ONE, ZERO), (ZERO, ZERO)),  # c[1][0] must be -c[0][1]
    )
    with pytest.raises(ValueError):
        LieAlgebra(2, bad_c, good.labels)


def test_differential_matches_pointwise_definition():
    # (dw)(x0..xk) = sum_{i<j} (-1)^(i+j) w([xi,xj], x0..^i..^j..xk)
    # evaluated on arbitrary vectors, independent of the coefficient path
    from itertools import combinations

    from lieforge import bracket

    rng = random.Random(99)
    for _ in range(25):
        g = random_jacobi_algebra(rng, rng.randint(2, 5))
        k = rng.randint(1, g.dim - 1)
        form = random_kform(rng, g.dim, k)
        d = ce_differential(g, form)
        vectors = [
            vector([rng.randint(-2, 2) for _ in range(g.dim)]) for _ in range(k + 1)
        ]
        expected = Fraction(0)
        for i, j in combinations(range(k + 1), 2):
            sign = -1 if (i + j) % 2 else 1
            rest = [vectors[t] for t in range(k + 1) if t not in (i, j)]
            expected += sign * form.evaluate([bracket(g, vectors[i], vectors[j])] + rest)
        assert d.evaluate(vectors) == expected
