import pytest

from superkit.algebra import (
    Element,
    SuperIdeal,
    grassmann,
    ideal_generated_by,
    odd_ideal,
    polynomial_truncation,
    tensor,
)
from superkit.fields import PrimeField, Rationals
from superkit.filtration import (
    FiltrationError,
    FilteredSuperAlgebra,
    adic_filtration,
    check_gr_tensor_iso,
    graded_companion,
    tensor_filtration,
)
from superkit.linalg import Subspace

Q = Rationals()


def test_adic_chain_dims_grassmann2():
    A = grassmann(Q, ["a", "b"])
    F = adic_filtration(A, odd_ideal(A))
    assert [F.piece(k).dim for k in range(F.length)] == [4, 3, 1, 0]


def test_level_of_elements():
    A = grassmann(Q, ["a", "b"])
    F = adic_filtration(A, odd_ideal(A))
    assert F.level(A.unit) == 0
    assert F.level(A.element({"a": 1})) == 1
    assert F.level(A.element({"a*b": 1})) == 2
    assert F.level(A.zero()) == F.length - 1


def test_non_multiplicative_chain_rejected():
    A = polynomial_truncation(Q, "t", 4)
    full = Subspace(Q, 4, [[Q.one if i == j else Q.zero for j in range(4)]
                           for i in range(4)])
    # jump straight to (t^3): violates I_1 I_1 <= I_2 = (t^3)? actually
    # (t)(t) = (t^2) is not inside (t^3), with I_1 = (t)
    i1 = ideal_generated_by(A, [A.element({"t": 1})]).sub
    i3 = ideal_generated_by(A, [A.element({"t^3": 1})]).sub
    zero = Subspace(Q, 4)
    with pytest.raises(FiltrationError):
        FilteredSuperAlgebra(A, [full, i1, i3, zero], check=True)


def test_graded_companion_dims_and_degrees():
    A = grassmann(Q, ["a", "b", "c"])
    comp = graded_companion(adic_filtration(A, odd_ideal(A)))
    dims = {}
    for d in comp.degrees:
        dims[d] = dims.get(d, 0) + 1
    assert dims == {0: 1, 1: 3, 2: 3, 3: 1}
    assert comp.verify_well_defined()


def test_gr_of_polynomial_truncation():
    A = polynomial_truncation(Q, "t", 4)
    F = adic_filtration(A, ideal_generated_by(A, [A.element({"t": 1})]))
    comp = graded_companion(F)
    assert comp.degrees == [0, 1, 2, 3]
    g = comp.gr
    # gr is again the truncated polynomial algebra
    t1 = g.basis_element(1)
    assert g.multiply(g.multiply(t1, t1), t1) == g.basis_element(3)
    assert g.multiply(g.multiply(g.multiply(t1, t1), t1), t1).is_zero()


def test_class_coords_raises_below_level():
    A = grassmann(Q, ["a", "b"])
    comp = graded_companion(adic_filtration(A, odd_ideal(A)))
    with pytest.raises(FiltrationError):
        comp.class_coords(A.element({"a": 1}), 2)


def test_tensor_filtration_and_iso_fixture():
    A = grassmann(Q, ["a", "b"])
    B = polynomial_truncation(Q, "t", 3)
    FA = adic_filtration(A, odd_ideal(A))
    FB = adic_filtration(B, ideal_generated_by(B, [B.element({"t": 1})]))
    FT = tensor_filtration(FA, FB)
    assert FT.algebra.dim == 12
    report = check_gr_tensor_iso(FA, FB)
    assert report.holds, report.failures
    assert all(a == b for a, b in report.degree_dims.values())


def test_iso_over_prime_field():
    F5 = PrimeField(5)
    A = grassmann(F5, ["a", "b"])
    B = grassmann(F5, ["c"])
    FA = adic_filtration(A, odd_ideal(A))
    FB = adic_filtration(B, odd_ideal(B))
    report = check_gr_tensor_iso(FA, FB)
    assert report.holds, report.failures
