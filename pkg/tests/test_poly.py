"""Sparse polynomial layer: parser, ring axioms, calculus, substitution."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from fanolines import PrimeField, Polynomial, parse_polynomial
from fanolines.poly import (GREVLEX, LEX, default_names, linear_substitute,
                            mono_degree, monomials_of_degree,
                            random_homogeneous)
from fanolines.linalg import mat_identity, mat_vec, random_invertible
from fanolines.errors import (ParseError, SingularMatrix, UnknownVariable,
                              ZeroPolynomial)

from conftest import parse

F7 = PrimeField(7)
F10007 = PrimeField(10007)


def random_poly(field, nvars, max_deg, rng, terms=6):
    out = Polynomial.zero(field, nvars)
    for _ in range(terms):
        exps = tuple(rng.randrange(max_deg + 1) for _ in range(nvars))
        if sum(exps) > max_deg:
            continue
        out = out + Polynomial.monomial(field, exps, field.sample(rng))
    return out


def random_point(field, nvars, rng):
    return [field.sample(rng) for _ in range(nvars)]


def test_parse_basic_shape():
    f = parse("x0^2*x1 + 3*x2^3", 3, F7)
    assert len(f.terms) == 2
    assert f.degree() == 3


def test_parse_cancellation_gives_zero():
    assert parse("x0 - x0", 2, F7).is_zero()


def test_parse_reduces_coefficients_mod_p():
    f5 = PrimeField(5)
    f = parse("7*x1^2*x0", 2, f5)
    assert f.leading_coefficient(GREVLEX) == f5.from_int(2)


def test_parse_grammar_flexibility():
    # whitespace insignificant, optional '*', fractional coefficients over Q
    a = parse("2*x0*x1", 2, F7)
    b = parse("  2 * x0 * x1 ", 2, F7)
    assert a == b
    c = parse("x0 - 3*x1^2 + 1", 2, F7)
    assert c.evaluate([F7.zero(), F7.zero()]) == F7.one()


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        parse("x0 + * x1", 2, F7)
    with pytest.raises(ParseError):
        parse("x0^", 2, F7)
    with pytest.raises(UnknownVariable):
        parse("x0 + y1", 2, F7)


def test_parse_round_trip_random():
    rng = random.Random(5)
    for _ in range(40):
        f = random_poly(F7, 3, 4, rng)
        if f.is_zero():
            continue
        again = parse_polynomial(f.to_text(), default_names(3), F7)
        assert again == f


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_ring_axioms(seed):
    rng = random.Random(seed)
    f, g, h = (random_poly(F7, 3, 3, rng) for _ in range(3))
    assert (f + g) + h == f + (g + h)
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_evaluate_is_ring_homomorphism(seed):
    rng = random.Random(seed)
    f = random_poly(F7, 3, 3, rng)
    g = random_poly(F7, 3, 3, rng)
    for _ in range(5):
        pt = random_point(F7, 3, rng)
        assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
        assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)


def test_degree_of_product_adds():
    rng = random.Random(11)
    for _ in range(25):
        f = random_poly(F10007, 2, 3, rng)
        g = random_poly(F10007, 2, 3, rng)
        if f.is_zero() or g.is_zero():
            continue
        assert (f * g).degree() == f.degree() + g.degree()


def test_homogeneous_components_examples():
    f = parse("x1^2 + x2^3", 3, F7)
    comps = f.homogeneous_components()
    assert set(comps) == {2, 3}
    assert comps[2] == parse("x1^2", 3, F7)
    assert comps[3] == parse("x2^3", 3, F7)


def test_homogeneous_components_identity_case():
    rng = random.Random(2)
    f = random_homogeneous(F7, 3, 4, rng)
    assert f.homogeneous_components() == {4: f}


def test_components_reassemble():
    rng = random.Random(3)
    for _ in range(20):
        f = random_poly(F7, 3, 4, rng)
        if f.is_zero():
            continue
        comps = f.homogeneous_components()
        total = Polynomial.zero(F7, 3)
        for d, c in comps.items():
            assert c.is_homogeneous() and c.degree() == d
            total = total + c
        assert total == f


def test_dehomogenized_node_has_no_low_terms():
    # double point at the origin: local expansion starts in degree 2
    cubic = parse("x0*x1^2 + x2^3 + x3^3", 4, F10007)
    local = cubic.dehomogenize(0)
    comps = local.homogeneous_components()
    assert min(comps) == 2


def test_partial_derivative_examples():
    f = parse("x0^2*x1", 2, F7)
    assert f.partial_derivative(0) == parse("2*x0*x1", 2, F7)
    assert Polynomial.constant(F7, 2, F7.from_int(5)).partial_derivative(1). \
        is_zero()


def test_euler_relation_random_cubics():
    # sum x_i df/dx_i = d*f for homogeneous f; valid since p > d
    rng = random.Random(7)
    for _ in range(30):
        f = random_homogeneous(F10007, 4, 3, rng)
        acc = Polynomial.zero(F10007, 4)
        for i in range(4):
            acc = acc + Polynomial.variable(F10007, 4, i) * \
                f.partial_derivative(i)
        assert acc == f.map_coefficients(
            F10007, lambda c: c * F10007.from_int(3))


def test_gradient_matches_partials():
    f = parse("x0*x1 + x2^2", 3, F7)
    assert f.gradient() == [f.partial_derivative(i) for i in range(3)]


def test_linear_substitute_identity_and_permutation():
    f = parse("x0^2 + x1*x2", 3, F7)
    assert linear_substitute(f, mat_identity(F7, 3)) == f
    # swap x0, x1
    swap = [[F7.zero(), F7.one(), F7.zero()],
            [F7.one(), F7.zero(), F7.zero()],
            [F7.zero(), F7.zero(), F7.one()]]
    assert linear_substitute(parse("x0", 3, F7), swap) == parse("x1", 3, F7)


def test_linear_substitute_evaluation_oracle():
    # (f o M)(v) = f(Mv) at 20 random points
    rng = random.Random(13)
    f = parse("x0^2 + x1^2", 3, F10007)
    m = random_invertible(F10007, 3, rng)
    g = linear_substitute(f, m)
    for _ in range(20):
        v = random_point(F10007, 3, rng)
        assert g.evaluate(v) == f.evaluate(mat_vec(m, v))
    assert g.degree() == f.degree()


def test_linear_substitute_is_ring_homomorphism():
    rng = random.Random(19)
    m = random_invertible(F7, 3, rng)
    f = random_poly(F7, 3, 2, rng)
    g = random_poly(F7, 3, 2, rng)
    assert linear_substitute(f * g, m) == \
        linear_substitute(f, m) * linear_substitute(g, m)


def test_singular_matrix_rejected():
    f = parse("x0 + x1", 2, F7)
    degenerate = [[F7.one(), F7.one()], [F7.one(), F7.one()]]
    with pytest.raises(SingularMatrix):
        linear_substitute(f, degenerate)


def test_zero_polynomial_guards():
    # degree of 0 is the sentinel -1; decomposition is refused outright
    z = Polynomial.zero(F7, 2)
    assert z.is_zero() and z.degree() == -1
    with pytest.raises(ZeroPolynomial):
        z.homogeneous_components()


def test_leading_monomial_depends_on_order():
    # grevlex favors x1^3, lex favors the x0 term
    f = parse("x1^3 + x0*x2^2", 3, F7)
    assert f.leading_monomial(GREVLEX) == (0, 3, 0)
    assert f.leading_monomial(LEX) == (1, 0, 2)


def test_monomials_of_degree_count():
    # stars and bars: C(n+d-1, d) monomials of degree d in n variables
    assert len(list(monomials_of_degree(3, 2))) == 6
    assert len(list(monomials_of_degree(4, 3))) == 20
    for mono in monomials_of_degree(3, 2):
        assert mono_degree(mono) == 2


def test_random_homogeneous_reproducible():
    a = random_homogeneous(F7, 3, 2, random.Random(4))
    b = random_homogeneous(F7, 3, 2, random.Random(4))
    assert a == b and a.is_homogeneous() and a.degree() == 2


def test_extend_variables_and_substitute():
    f = parse("x0^2 + x1", 2, F7)
    g = f.extend_variables(3, 1)  # shift into 3 vars at offset 1
    assert g.nvars == 3
    assert g == parse("x1^2 + x2", 3, F7)
    images = [Polynomial.variable(F7, 3, i) for i in range(3)]
    assert g.substitute(images) == g
    images[2] = Polynomial.zero(F7, 3)
    assert g.substitute(images) == parse("x1^2", 3, F7)
