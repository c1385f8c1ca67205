"""Tensor induction of actions and the product behavior of orders."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopforder.induction import (
    NotArithmeticallyDisjointError,
    are_arithmetically_disjoint,
    base_change_order,
    induce_action,
    permutation_cycles,
    permute_rows,
    product_field,
    tensor_order_lattice,
    tracy_singh_permutation,
    verify_induced_generator,
    verify_kronecker_theorem,
    verify_tensor_order,
)
from hopforder.linalg import (
    CoefficientRing,
    LatticeBasis,
    Matrix,
    determinant,
    kronecker,
    lattice_equal,
)
from hopforder.order import associated_order

from conftest import load

Z3 = CoefficientRing.localized_at(3)


def setup_cubic_alt_with_i():
    left = load("cubic_eisenstein_alt")
    right = load("quadratic_i_local3")
    return left, right, induce_action(left.hopf, right.hopf, Z3)


def setup_cubic_with_sqrtm3():
    left = load("cubic_eisenstein")
    right = load("quadratic_sqrtm3_local3")
    return left, right, induce_action(left.hopf, right.hopf, Z3)


# --- permutation ---------------------------------------------------------


def test_tracy_singh_cycles_2x2():
    assert permutation_cycles(tracy_singh_permutation(2, 2)) == (
        (3, 5),
        (4, 6),
        (11, 13),
        (12, 14),
    )


def test_tracy_singh_cycles_3x2():
    assert permutation_cycles(tracy_singh_permutation(3, 2)) == (
        (3, 5, 9, 7),
        (4, 6, 10, 8),
        (15, 17, 21, 19),
        (16, 18, 22, 20),
        (27, 29, 33, 31),
        (28, 30, 34, 32),
    )


def test_tracy_singh_is_a_permutation():
    for r, u in ((1, 1), (2, 3), (3, 2), (2, 2)):
        dest = tracy_singh_permutation(r, u)
        assert sorted(dest) == list(range((r * u) ** 2))


def test_permute_rows_round_trip():
    m = Matrix([[1], [2], [3], [4]])
    dest = (2, 0, 3, 1)
    pm = permute_rows(m, dest)
    for i in range(4):
        assert pm.row(dest[i]) == m.row(i)


# --- product field -------------------------------------------------------


def test_product_field_is_a_valid_algebra():
    left = load("cubic_eisenstein")
    right = load("quadratic_sqrtm3_local3")
    prod = product_field(left.field, right.field)
    prod.validate()
    assert prod.dim == 6
    assert prod.one_index == 0


def test_product_field_kronecker_order():
    left = load("cubic_eisenstein")
    right = load("quadratic_i_local3")
    prod = product_field(left.field, right.field)
    # left index slow, right index fast: 1, z, a, a z, a2, a2 z
    assert prod.basis_labels == ("1*1", "1*z", "a*1", "a*z", "a2*1", "a2*z")


# --- Kronecker theorem ---------------------------------------------------


def test_kronecker_theorem_cubic_with_sqrtm3():
    _, _, setup = setup_cubic_with_sqrtm3()
    assert verify_kronecker_theorem(setup)
    lhs = permute_rows(setup.bundle.M, setup.perm)
    assert lhs == kronecker(setup.left.M, setup.right.M)


def test_kronecker_theorem_cubic_alt_with_i():
    _, _, setup = setup_cubic_alt_with_i()
    assert verify_kronecker_theorem(setup)


def test_induced_table_diagonal_row():
    # the element w2*e2 acts diagonally with entries (0,0,3,-3,-3,3)
    _, _, setup = setup_cubic_with_sqrtm3()
    row = setup.bundle.table.entries[3]
    expected_diag = (0, 0, 3, -3, -3, 3)
    for j in range(6):
        assert row[j] == tuple(
            expected_diag[j] if l == j else 0 for l in range(6)
        )


def test_trivial_right_factor_is_identity_behavior():
    left = load("cubic_eisenstein")
    triv = load("trivial")
    setup = induce_action(left.hopf, triv.hopf, Z3)
    assert setup.bundle.dim == 3
    assert setup.bundle.M == setup.left.M
    assert verify_kronecker_theorem(setup)
    lob = associated_order(setup.left)
    iob = associated_order(setup.bundle)
    assert lattice_equal(lob.lattice(), iob.lattice())


# --- arithmetic disjointness ---------------------------------------------


def test_disjointness_verdicts():
    cubic = load("cubic_eisenstein").field
    qi = load("quadratic_i_local3").field
    qs3 = load("quadratic_sqrtm3_local3").field
    assert are_arithmetically_disjoint(cubic, qi, Z3)
    assert not are_arithmetically_disjoint(cubic, qs3, Z3)


def test_disjointness_over_z():
    z = CoefficientRing.integers()
    cubic = load("cubic_eisenstein").field
    qi = load("quadratic_i_local3").field
    # disc -243 and disc -4 are coprime over Z
    assert are_arithmetically_disjoint(cubic, qi, z)
    assert not are_arithmetically_disjoint(cubic, cubic, z)


# --- tensor order --------------------------------------------------------


def test_tensor_order_theorem_holds_when_disjoint():
    _, _, setup = setup_cubic_alt_with_i()
    assert verify_tensor_order(setup)
    iob = associated_order(setup.bundle)
    assert lattice_equal(iob.lattice(), tensor_order_lattice(setup))


def test_tensor_order_refused_when_not_disjoint():
    _, _, setup = setup_cubic_with_sqrtm3()
    with pytest.raises(NotArithmeticallyDisjointError):
        verify_tensor_order(setup)
    # action-level claim still fine
    assert verify_kronecker_theorem(setup)


def test_induced_hnf_factors_as_kronecker():
    _, _, setup = setup_cubic_alt_with_i()
    iob = associated_order(setup.bundle)
    lob = associated_order(setup.left)
    rob = associated_order(setup.right)
    assert iob.hnf_result.D == kronecker(lob.hnf_result.D, rob.hnf_result.D)


# --- induced generators --------------------------------------------------


def test_induced_generator_alpha_times_one_plus_z():
    _, _, setup = setup_cubic_alt_with_i()
    rep = verify_induced_generator(setup, (0, 1, 0), (1, 1))
    assert rep.free
    assert rep.product_beta == (0, 0, 1, 1, 0, 0)
    assert rep.kronecker_factorization_ok
    assert rep.product_candidate.d_beta == kronecker(
        rep.left_candidate.d_beta, rep.right_candidate.d_beta
    )


def test_induced_generator_reference_bases_det():
    _, _, setup = setup_cubic_alt_with_i()
    b1 = Matrix([[1, 0, Fraction(1, 3)], [0, 1, 0], [0, 0, Fraction(1, 3)]])
    bbar = Matrix([[1, Fraction(1, 2)], [0, Fraction(1, 2)]])
    rep = verify_induced_generator(
        setup, (0, 1, 0), (1, 1), left_basis=b1, right_basis=bbar
    )
    assert rep.left_candidate.det == -2
    assert rep.right_candidate.det == -1
    assert rep.product_candidate.det == -4
    assert rep.free and rep.kronecker_factorization_ok


def test_induced_generator_refused_when_not_disjoint():
    _, _, setup = setup_cubic_with_sqrtm3()
    with pytest.raises(NotArithmeticallyDisjointError):
        verify_induced_generator(setup, (0, 1, 0), (1, 1))


# --- base change ---------------------------------------------------------


def test_base_change_order_is_product_lattice():
    _, _, setup = setup_cubic_alt_with_i()
    rep = base_change_order(setup, gamma=(0, 1, 0))
    assert rep.lattice_eq
    assert rep.gamma_free
    lob = associated_order(setup.left)
    expected = LatticeBasis(
        6, kronecker(lob.basis_in_w, Matrix.identity(2)), Z3
    )
    assert lattice_equal(rep.order.lattice(), expected)


def test_base_change_searches_gamma_when_omitted():
    _, _, setup = setup_cubic_alt_with_i()
    rep = base_change_order(setup)
    assert rep.lattice_eq and rep.gamma_free
    assert rep.gamma is not None


# --- property tests ------------------------------------------------------


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=5))
def test_tracy_singh_permutation_property(r, u):
    dest = tracy_singh_permutation(r, u)
    n = r * u
    assert sorted(dest) == list(range(n * n))
    # the identity block rows (b = d slices) line up with the index law
    if r > 1 and u > 1:
        assert dest[0] == 0 and dest[-1] == n * n - 1


@settings(max_examples=50, deadline=None)
@given(
    st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=2, max_size=2).map(Matrix),
    st.lists(st.lists(st.integers(-3, 3), min_size=2, max_size=2), min_size=2, max_size=2).map(Matrix),
)
def test_kronecker_det_exponent_law(a, b):
    # det(A (x) B) = det(A)^u det(B)^r with r = u = 2
    assert determinant(kronecker(a, b)) == determinant(a) ** 2 * determinant(b) ** 2
