import pytest

from superkit.algebra import grassmann, tensor
from superkit.fields import PrimeField, Rationals
from superkit.hopf import (
    HopfError,
    check_hopf_axioms,
    grassmann_hopf,
    is_group_like,
    primitives,
    regular_coaction,
    trivial_coaction,
)

Q = Rationals()
F5 = PrimeField(5)


def test_grassmann_hopf_axioms():
    for field in (Q, F5):
        H = grassmann_hopf(field, ["t1", "t2"])
        report = check_hopf_axioms(H)
        assert report.holds, report.failures


def test_coproduct_of_product_has_cross_terms():
    H = grassmann_hopf(Q, ["t1", "t2"])
    A = H.algebra
    d = H.coproduct(A.element({"t1*t2": 1}))
    sq = H.square
    i1 = A.space.index("t1")
    i2 = A.space.index("t2")
    # coefficient of t1 ⊗ t2 is +1, of t2 ⊗ t1 is -1
    assert d.coords[i1 * A.dim + i2] == Q.one
    assert d.coords[i2 * A.dim + i1] == -Q.one


def test_antipode_on_monomials():
    H = grassmann_hopf(Q, ["t1", "t2"])
    A = H.algebra
    assert H.apply_antipode(A.element({"t1": 1})) == -A.element({"t1": 1})
    assert H.apply_antipode(A.element({"t1*t2": 1})) == A.element({"t1*t2": 1})


def test_primitives_are_the_generators():
    H = grassmann_hopf(Q, ["t1", "t2", "t3"])
    A = H.algebra
    P = primitives(H)
    assert P.dim == 3
    for g in ("t1", "t2", "t3"):
        assert P.contains(A.element({g: 1}).coords)
    assert not P.contains(A.element({"t1*t2": 1}).coords)


def test_group_like_over_extension():
    H = grassmann_hopf(Q, ["t1", "t2"])
    A = H.algebra
    R = grassmann(Q, ["a"])
    # x = 1⊗1 + t1⊗a is group-like: t1 primitive, a odd square-zero
    coords = [[Q.zero] * R.dim for _ in range(A.dim)]
    coords[0][0] = Q.one
    coords[A.space.index("t1")][R.space.index("a")] = Q.one
    assert is_group_like(H, R, coords)
    # 1⊗1 + t1*t2⊗1 is not
    coords = [[Q.zero] * R.dim for _ in range(A.dim)]
    coords[0][0] = Q.one
    coords[A.space.index("t1*t2")][0] = Q.one
    assert not is_group_like(H, R, coords)


def test_regular_coinvariants_trivial_line():
    H = grassmann_hopf(Q, ["t1", "t2"])
    co = regular_coaction(H)
    sub = co.coinvariants()
    assert sub.dim == 1
    assert sub.contains(H.algebra.unit.coords)
    assert co.check_alpha_surjective()


def test_trivial_coaction_everything_coinvariant():
    H = grassmann_hopf(Q, ["t1"])
    co = trivial_coaction(H.algebra, H)
    assert co.coinvariants().dim == H.algebra.dim
    assert not co.check_alpha_surjective()


def test_bad_antipode_rejected():
    from superkit.hopf import HopfSuperAlgebra

    H = grassmann_hopf(Q, ["t1"])
    bad = [list(col) for col in H.antipode]
    bad[1][1] = Q.one  # S(t1) = +t1 violates the antipode law
    with pytest.raises(HopfError):
        HopfSuperAlgebra(H.algebra, H.delta, H.eps, bad, check=True)
