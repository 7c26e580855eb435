"""Jacobian matrices, dependence witnesses, and the full variable elimination."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from multitype import (
    Polynomial,
    Substitution,
    Weight,
    check_homogeneous_substitution,
    eliminate_all,
    enumerate_witnesses,
    find_dependent_row,
    find_module_dependent_row,
    homogeneous_monomials,
    jacobian,
    restricted_levi_determinant,
    weighted_length,
    witness_to_substitution,
)
from multitype.rowreduce import CentralUse

from conftest import variables

F = Fraction


def weight(*entries):
    return Weight([F(*e) for e in entries])


W61 = weight((1, 2), (1, 2), (1, 2))
W71_STEP3 = weight((1, 4), (1, 8), (1, 16), (1, 8))


@pytest.fixture
def step3_leading_gens(four_vars):
    z1, z2, z3, z4 = four_vars
    return [(z1 + z2 * z4) ** 2 + z2**4, (z1 + z2 * z3**2) ** 2]


# -- jacobian construction ---------------------------------------------------------


def test_jacobian_matches_displayed_matrix(example_four_var_ideal, four_vars):
    z1, z2, z3, z4 = four_vars
    J = jacobian(example_four_var_ideal)
    B = 2 * (z1 + z2 * z4)
    C = 2 * (z1 + z2 * z3**2)
    zero = Polynomial.zero(4)
    expected = [
        [B, C, zero, zero, zero],
        [z4 * B + 4 * z2**3, z3**2 * C, 9 * z2**8, zero, zero],
        [zero, 2 * z2 * z3 * C, zero, 10 * z3**9, zero],
        [z2 * B, zero, zero, zero, 12 * z4**11],
    ]
    assert [list(row) for row in J.entries] == expected


def test_jacobian_single_generator():
    z1, z2, _ = variables(3)
    J = jacobian([z1 - z2])
    assert J.column(0) == (
        Polynomial.constant(3, 1),
        Polynomial.constant(3, -1),
        Polynomial.zero(3),
    )


def test_jacobian_diagonal_like():
    z1, z2 = variables(2)
    J = jacobian([z1, z2**2])
    assert J[0, 0] == Polynomial.constant(2, 1)
    assert J[1, 0] == Polynomial.zero(2)
    assert J[0, 1] == Polynomial.zero(2)
    assert J[1, 1] == 2 * z2


# -- homogeneous monomial enumeration ------------------------------------------------


def test_homogeneous_monomials_uniform_eighth():
    w = weight((1, 4), (1, 8), (1, 8), (1, 8))
    assert homogeneous_monomials(w, F(1, 8), 0) == [
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
    ]


def test_homogeneous_monomials_target_zero():
    w = weight((1, 4), (1, 8), (1, 8), (1, 8))
    assert homogeneous_monomials(w, F(0), 0) == [(0, 0, 0, 0)]


def test_homogeneous_monomials_sixteenth():
    assert homogeneous_monomials(W71_STEP3, F(1, 16), 3) == [(0, 0, 1, 0)]


# -- dependence witnesses ----------------------------------------------------------


def test_witness_on_first_gradient_ideal(step3_leading_gens, four_vars):
    _, z2, _, _ = four_vars
    J = jacobian(step3_leading_gens)
    witness = find_dependent_row(J, 0, W71_STEP3, CentralUse(), 3)
    assert witness is not None
    assert witness.centrals() == (0,)
    assert witness.gamma(0) == z2


def test_witness_on_second_gradient_ideal_after_first_move(
    step3_leading_gens, four_vars
):
    z1, z2, z3, z4 = four_vars
    moved = [
        g.substitute(Substitution([(0, z2 * z4)])) for g in step3_leading_gens
    ]
    J = jacobian(moved)
    use = CentralUse()
    use.row_column[0] = 0
    use.consumed.add((0, 0))
    witness = find_dependent_row(J, 1, W71_STEP3, use, 2)
    assert witness is not None
    assert witness.centrals() == (3,)
    assert witness.gamma(3) == -2 * z3


def test_no_witness_on_diagonal_jacobian():
    z1, z2 = variables(2)
    J = jacobian([z1, z2**2])
    w = weight((1, 2), (1, 4))
    for k in range(2):
        for column in range(2):
            assert find_dependent_row(J, column, w, CentralUse(), k) is None


def test_witness_to_substitution_examples(four_vars):
    from multitype.rowreduce import DependenceWitness

    z1, z2, z3, z4 = four_vars
    wit = DependenceWitness(row=3, column=0, coefficients=((0, z2),))
    assert witness_to_substitution(wit) == Substitution([(0, z2 * z4)])

    wit = DependenceWitness(row=2, column=1, coefficients=((3, -2 * z3),))
    assert witness_to_substitution(wit) == Substitution([(3, -(z3**2))])

    z1_3, z2_3, _ = variables(3)
    wit = DependenceWitness(
        row=1, column=0, coefficients=((0, Polynomial.constant(3, -1)),)
    )
    assert witness_to_substitution(wit) == Substitution([(0, -z2_3)])


# -- eliminate_all -------------------------------------------------------------------


def test_eliminate_linear_generator(three_vars):
    z1, z2, _ = three_vars
    new_gens, sub, d = eliminate_all([z1 - z2], W61)
    assert list(new_gens) == [z1]
    assert sub == Substitution([(0, -z2)])
    assert d == 2


def test_eliminate_step3_fixture(step3_leading_gens, four_vars):
    z1, z2, z3, z4 = four_vars
    new_gens, sub, d = eliminate_all(step3_leading_gens, W71_STEP3)
    assert list(new_gens) == [z1**2 + z2**4, (z1 - z2 * z4) ** 2]
    assert sub == Substitution([(0, z2 * z4), (3, -(z3**2))])
    assert d == 1


def test_eliminate_fast_path_diagonal():
    z1, z2 = variables(2)
    w = weight((1, 2), (1, 4))
    new_gens, sub, d = eliminate_all([z1, z2**2], w)
    assert list(new_gens) == [z1, z2**2]
    assert sub.is_identity()
    assert d == 0


def test_eliminate_is_idempotent_in_d(step3_leading_gens):
    new_gens, _, d = eliminate_all(step3_leading_gens, W71_STEP3)
    again, sub, d2 = eliminate_all(new_gens, W71_STEP3)
    assert d2 == d
    assert sub.is_identity()
    assert tuple(again) == tuple(new_gens)


def test_eliminate_conserves_the_ideal(step3_leading_gens):
    new_gens, sub, _ = eliminate_all(step3_leading_gens, W71_STEP3)
    assert tuple(g.substitute(sub) for g in step3_leading_gens) == tuple(new_gens)


def test_emitted_substitutions_are_homogeneous(step3_leading_gens):
    _, sub, _ = eliminate_all(step3_leading_gens, W71_STEP3)
    assert check_homogeneous_substitution(sub, W71_STEP3)


def test_single_column_witness_eliminates_variable(step3_leading_gens):
    J = jacobian(step3_leading_gens)
    witness = find_dependent_row(J, 0, W71_STEP3, CentralUse(), 3)
    sub = witness_to_substitution(witness)
    image = step3_leading_gens[0].substitute(sub)
    assert 3 not in image.variables()


def test_exhaustive_agrees_on_fixture(step3_leading_gens):
    greedy = eliminate_all(step3_leading_gens, W71_STEP3, strategy="greedy")
    exhaustive = eliminate_all(step3_leading_gens, W71_STEP3, strategy="exhaustive")
    assert greedy[2] == exhaustive[2]


def test_useless_moves_are_not_committed(four_vars):
    # the step-2 state of the 4-variable fixture admits a dependence witness
    # whose application cannot reduce the variable count
    z1, z2, z3, z4 = four_vars
    w = weight((1, 4), (1, 8), (1, 8), (1, 8))
    gens = [(z1 + z2 * z4) ** 2 + z2**4, z1**2]
    new_gens, sub, d = eliminate_all(gens, w)
    assert sub.is_identity()
    assert list(new_gens) == gens
    assert d == 1


# -- determinant fast path -----------------------------------------------------------


def test_restricted_determinant_zero_on_dependent_fixture(step3_leading_gens):
    det, nonzero_rows = restricted_levi_determinant(step3_leading_gens, W71_STEP3)
    assert det.is_zero()
    assert nonzero_rows == [0, 1, 2, 3]


def test_restricted_determinant_nonzero_on_diagonal():
    z1, z2 = variables(2)
    det, nonzero_rows = restricted_levi_determinant(
        [z1, z2**2], weight((1, 2), (1, 4))
    )
    assert not det.is_zero()
    assert nonzero_rows == [0, 1]


def test_module_dependence_absent_when_determinant_nonzero():
    # a single-column witness can exist alongside a nonzero restricted
    # determinant; the module-level relation cannot
    z1, z2 = variables(2)
    w = weight((1, 2), (1, 4))
    gens = [z1 + z2**2, z1]
    det, _ = restricted_levi_determinant(gens, w)
    assert not det.is_zero()
    J = jacobian(gens)
    assert find_dependent_row(J, 0, w, CentralUse(), 1) is not None
    for k in range(2):
        assert find_module_dependent_row(J, w, k) is None
    new_gens, sub, d = eliminate_all(gens, w, _skip_fast_path=True)
    assert sub.is_identity() and list(new_gens) == gens and d == 0
