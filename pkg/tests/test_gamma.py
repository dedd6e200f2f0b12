import pytest

from superkit import gamma as G
from superkit.algebra import grassmann
from superkit.fields import PrimeField, Rationals
from superkit.fixtures import gl11_pair, gl21_pair
from superkit.hcp import pseudoabelian_example

Q = Rationals()


@pytest.fixture(scope="module")
def pair():
    return gl11_pair(Q)


@pytest.fixture(scope="module")
def R():
    return grassmann(Q, ["a1", "a2", "a3", "a4"])


def odd(R, name):
    return R.element({name: 1})


class TestNormalForm:
    def test_worked_example(self, pair, R):
        a1, a2 = odd(R, "a1"), odd(R, "a2")
        u = G.normalize(pair, R, [("e", a1, 1), ("e", a2, 0)])
        one_minus = R.unit - R.multiply(a1, a2)
        assert u.even[0][0] == one_minus
        assert u.even[1][1] == one_minus
        assert u.even[0][1].is_zero() and u.even[1][0].is_zero()
        assert u.coords == (a2, a1)

    def test_sorted_word_untouched(self, pair, R):
        a1, a2 = odd(R, "a1"), odd(R, "a2")
        u = G.normalize(pair, R, [("e", a1, 0), ("e", a2, 1)])
        assert u.coords == (a1, a2)
        assert u.even == G.identity(pair, R).even

    def test_same_vector_merge(self, pair, R):
        a1, a2 = odd(R, "a1"), odd(R, "a2")
        u = G.normalize(pair, R, [("e", a1, 0), ("e", a2, 0)])
        assert u.coords[0] == a1 + a2
        # [v+, v+] = 0 in gl(1|1), so no even correction appears
        assert u.even == G.identity(pair, R).even

    def test_strategies_agree(self, pair, R, rng):
        for _ in range(30):
            toks = [
                ("e", odd(R, rng.choice(["a1", "a2", "a3", "a4"])),
                 rng.randrange(pair.t))
                for _ in range(rng.randint(1, 5))
            ]
            assert G.normalize(pair, R, toks, "leftmost") == G.normalize(
                pair, R, toks, "rightmost"
            )

    def test_even_coefficient_rejected(self, pair, R):
        with pytest.raises(G.GammaError):
            G.gen_e(pair, R, R.unit, 0)

    def test_f_needs_square_zero(self, pair, R):
        with pytest.raises(G.GammaError):
            G.gen_f(pair, R, R.unit, (Q.one, Q.zero))

    def test_f_accepts_product_of_odds(self, pair, R):
        b = R.multiply(odd(R, "a1"), odd(R, "a2"))
        u = G.gen_f(pair, R, b, (Q.one, Q.zero))
        assert u.even[0][0] == R.unit + b


class TestGroupLaws:
    def test_identity_neutral(self, pair, R):
        e = G.identity(pair, R)
        u = G.normalize(pair, R, [("e", odd(R, "a1"), 1)])
        assert G.multiply(e, u) == u
        assert G.multiply(u, e) == u

    def test_inverse(self, pair, R):
        a1, a2 = odd(R, "a1"), odd(R, "a2")
        u = G.normalize(pair, R, [("e", a1, 1), ("e", a2, 0)])
        assert G.multiply(u, G.inverse(u)) == G.identity(pair, R)
        assert G.multiply(G.inverse(u), u) == G.identity(pair, R)

    def test_associativity_samples(self, pair, R, rng):
        elems = []
        for _ in range(4):
            toks = [
                ("e", odd(R, rng.choice(["a1", "a2", "a3", "a4"])),
                 rng.randrange(pair.t))
                for _ in range(2)
            ]
            elems.append(G.normalize(pair, R, toks))
        for u in elems:
            for w in elems:
                for z in elems:
                    assert G.multiply(G.multiply(u, w), z) == G.multiply(
                        u, G.multiply(w, z)
                    )

    def test_conjugation_by_group_point(self, pair, R):
        a1 = odd(R, "a1")
        u = G.normalize(pair, R, [("e", a1, 0)])
        g = [[Q.from_int(2), Q.zero], [Q.zero, Q.from_int(3)]]
        c = G.conjugate(g, u)
        # Ad(diag(2,3)) scales v+ = E12 by 2/3
        assert c.coords[0] == a1.scale(Q.parse("2/3"))
        assert c.coords[1].is_zero()


class TestOracles:
    def test_enveloping_matches_normalize(self, pair, R, rng):
        for _ in range(20):
            toks = [
                ("e", odd(R, rng.choice(["a1", "a2", "a3", "a4"])),
                 rng.randrange(pair.t))
                for _ in range(rng.randint(1, 4))
            ]
            u = G.normalize(pair, R, toks)
            assert G.oracle_enveloping(pair, toks, R=R) == G.oracle_enveloping(u)

    def test_supermatrix_calibration_rejects_flat_twist(self, pair):
        twist = G.calibrate_supermatrix(pair)
        assert twist == [Q.one, -Q.one]
        # the untwisted candidate violates relation (1)
        Rc = grassmann(Q, ["a", "b"])
        a, b = Rc.element({"a": 1}), Rc.element({"b": 1})
        flat = [Q.one, Q.one]
        lhs = G.rmat_mul(
            Rc,
            G._e_matrix(pair, Rc, a, 0, flat),
            G._e_matrix(pair, Rc, b, 1, flat),
        )
        corr = G.f_matrix(pair, Rc, -Rc.multiply(a, b), pair.vv(0, 1))
        rhs = G.rmat_mul(
            Rc,
            G.rmat_mul(Rc, corr, G._e_matrix(pair, Rc, b, 1, flat)),
            G._e_matrix(pair, Rc, a, 0, flat),
        )
        assert lhs != rhs

    def test_supermatrix_oracle_no_pair_for_matrix_mode(self):
        pair = pseudoabelian_example(Q, 1)
        with pytest.raises(G.GammaError):
            G.calibrate_supermatrix(pair)


class TestTangentBracket:
    def test_gl11_odd_odd(self, pair):
        got = G.tangent_bracket(pair, 1, (0, 0, 1, 0), 1, (0, 0, 0, 1))
        assert got == (Q.one, Q.one, Q.zero, Q.zero)

    def test_gl11_even_odd(self, pair):
        got = G.tangent_bracket(pair, 0, (1, 0, 0, 0), 1, (0, 0, 1, 0))
        assert got == (Q.zero, Q.zero, Q.one, Q.zero)

    def test_gl21_sweep_small(self):
        pair = gl21_pair(Q)
        lie = pair.assembled_lie(check=False)
        n = lie.dim
        for i in (1, 5, 6, 8):
            for j in (2, 5, 7, 8):
                xi = [Q.zero] * n
                xi[i] = Q.one
                yj = [Q.zero] * n
                yj[j] = Q.one
                got = G.tangent_bracket(
                    pair, lie.space.parities[i], xi, lie.space.parities[j], yj
                )
                assert tuple(got) == tuple(lie.bracket(tuple(xi), tuple(yj)))


class TestMatrixHelpers:
    def test_rmat_inverse(self, pair, R):
        b = R.multiply(odd(R, "a1"), odd(R, "a2"))
        m = [[R.unit + b, R.zero()], [R.zero(), R.unit - b]]
        inv = G.rmat_inverse(R, m)
        assert G.rmat_mul(R, m, inv) == G.rmat_identity(R, 2)

    def test_singular_rejected(self, R):
        with pytest.raises(G.GammaError):
            G.rmat_inverse(R, [[R.zero(), R.zero()], [R.zero(), R.unit]])
