"""Core polynomial ring: arithmetic, calculus, substitution, linear solving."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multitype import (
    ConstantTermError,
    DegenerateIdealError,
    DimensionError,
    GaussianRational,
    InvalidSubstitutionError,
    Polynomial,
    Substitution,
    solve_linear,
    vanishing_order,
)

from conftest import variables


# -- strategies ---------------------------------------------------------------

coefficients = st.builds(
    GaussianRational,
    st.integers(min_value=-4, max_value=4),
    st.integers(min_value=-4, max_value=4),
)


def polynomials(nvars=3, max_degree=3, max_terms=4):
    monomial = st.tuples(
        *[st.integers(min_value=0, max_value=max_degree) for _ in range(nvars)]
    )
    return st.dictionaries(monomial, coefficients, max_size=max_terms).map(
        lambda terms: Polynomial(nvars, terms)
    )


# -- arithmetic ----------------------------------------------------------------


def test_difference_of_squares(three_vars):
    z1, z2, _ = three_vars
    assert (z1 - z2) * (z1 + z2) == z1**2 - z2**2


def test_binomial_expansion():
    z1, z2, _, z4 = variables(4)
    expected = z1**2 + 2 * (z1 * z2 * z4) + z2**2 * z4**2
    assert (z1 + z2 * z4) ** 2 == expected


def test_additive_inverse(three_vars):
    z1, z2, z3 = three_vars
    p = 3 * z1 * z2 - z3**2
    assert p + (-1) * p == Polynomial.zero(3)


def test_mismatched_variable_counts_rejected():
    with pytest.raises(DimensionError):
        Polynomial.variable(2, 0) + Polynomial.variable(3, 0)


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


# -- differentiation and antidifferentiation -------------------------------------


def test_partial_derivative_of_first_fixture_generator():
    z1, z2, _, z4 = variables(4)
    g = (z1 + z2 * z4) ** 2 + z2**4
    assert g.partial_derivative(3) == 2 * z2 * (z1 + z2 * z4)


def test_partial_derivative_with_chain_factor():
    z1, z2, z3 = variables(3)
    g = (z1 + z2 * z3**2) ** 2
    assert g.partial_derivative(2) == 4 * z2 * z3 * (z1 + z2 * z3**2)


def test_partial_derivative_absent_variable():
    _, z2, _ = variables(3)
    assert (z2**9).partial_derivative(0) == Polynomial.zero(3)


def test_antiderivative_shift_bodies():
    z1, z2, z3, z4 = variables(4)
    assert z2.antiderivative(3) == z2 * z4
    assert (-2 * z3).antiderivative(2) == -(z3**2)
    one = Polynomial.constant(4, -1)
    assert one.antiderivative(1) == -z2


@given(polynomials(), st.integers(min_value=0, max_value=2))
def test_derivative_inverts_antiderivative(p, var):
    assert p.antiderivative(var).partial_derivative(var) == p


# -- substitution ------------------------------------------------------------------


def test_substitution_from_three_var_fixture(three_vars):
    z1, z2, z3 = three_vars
    p = z1 - z2 + z3**2
    assert p.substitute(Substitution([(0, -z2)])) == z1 + z3**2


def test_substitution_from_four_var_fixture():
    z1, z2, _, z4 = variables(4)
    p = (z1 + z2 * z4) ** 2 + z2**4
    assert p.substitute(Substitution([(0, z2 * z4)])) == z1**2 + z2**4


def test_empty_substitution_is_identity(three_vars):
    z1, z2, z3 = three_vars
    p = z1 * z2 - z3**2
    assert p.substitute(Substitution.identity()) == p


def test_substitution_shift_must_avoid_target(three_vars):
    z1, _, _ = three_vars
    with pytest.raises(InvalidSubstitutionError):
        Substitution([(0, z1)])


@given(polynomials(), st.integers(min_value=0, max_value=2), polynomials())
@settings(max_examples=60)
def test_substitution_inverse(p, var, shift_source):
    shift = Polynomial(
        3, {m: c for m, c in shift_source.terms.items() if m[var] == 0}
    )
    forward = Substitution([(var, shift)])
    backward = Substitution([(var, -shift)])
    assert p.substitute(forward).substitute(backward) == p


# -- vanishing order and truncation -----------------------------------------------


def test_vanishing_order_of_fixtures(example_three_var_ideal, example_four_var_ideal):
    assert vanishing_order(example_three_var_ideal) == 1
    assert vanishing_order(example_four_var_ideal) == 2


def test_vanishing_order_single_monomial():
    z1 = Polynomial.variable(1, 0)
    assert vanishing_order([z1**3]) == 3


def test_vanishing_order_rejects_constant_terms():
    z1 = Polynomial.variable(1, 0)
    with pytest.raises(ConstantTermError):
        vanishing_order([z1 + Polynomial.constant(1, 1)])


def test_vanishing_order_rejects_zero_ideal():
    with pytest.raises(DegenerateIdealError):
        vanishing_order([Polynomial.zero(2), Polynomial.zero(2)])


def test_truncate(three_vars):
    z1, z2, z3 = three_vars
    assert (z1 + z3**2).truncate(1) == z1
    assert (z2**9).truncate(8) == Polynomial.zero(3)
    p = z1 - z2 + z3**2
    assert p.truncate(2) == p


# -- linear solving ------------------------------------------------------------------


def one(v):
    return GaussianRational(v)


def test_solve_identity():
    solution = solve_linear([[one(1), one(0)], [one(0), one(1)]], [one(1), one(2)])
    assert solution == [one(1), one(2)]


def test_solve_symmetric_pair():
    solution = solve_linear([[one(1), one(1)], [one(1), one(-1)]], [one(2), one(0)])
    assert solution == [one(1), one(1)]


def test_solve_inconsistent_returns_none():
    # x + y = 1 and 2x + 2y = 3 cannot both hold.
    assert solve_linear([[one(1), one(1)], [one(2), one(2)]], [one(1), one(3)]) is None


@given(
    st.lists(
        st.lists(coefficients, min_size=3, max_size=3), min_size=2, max_size=4
    ),
    st.lists(coefficients, min_size=3, max_size=3),
)
@settings(max_examples=60)
def test_solutions_satisfy_system(matrix, x_true):
    rhs = [
        sum((a * b for a, b in zip(row, x_true)), GaussianRational(0))
        for row in matrix
    ]
    solution = solve_linear(matrix, rhs)
    assert solution is not None
    for row, b in zip(matrix, rhs):
        assert sum((a * x for a, x in zip(row, solution)), GaussianRational(0)) == b


# -- display round trip ----------------------------------------------------------------


def test_canonical_display(three_vars):
    z1, z2, z3 = three_vars
    assert str(z1 - z2 + z3**2) == "z1 - z2 + z3^2"
    assert str(-2 * z2 * z3**2) == "-2*z2*z3^2"
    half = Polynomial.constant(3, Fraction(1, 2))
    assert str(half * z1**2 - GaussianRational(0, 1) * z2) == "-i*z2 + 1/2*z1^2"
