"""Hopf superalgebra structures on finite dimensional supercommutative algebras.

The coproduct is stored as a sparse table per basis element, the counit as
a scalar row and the antipode as a matrix.  In the supercommutative case
the antipode is itself an algebra morphism, which is what gets checked.
Also contains right coactions of a Hopf algebra on an algebra carrier,
their coinvariants and the surjectivity test for the Galois-type map
alpha(a ⊗ a') = a a'_(0) ⊗ a'_(1).
"""

from __future__ import annotations

from .algebra import AlgebraError, Element, LinearMap, grassmann, tensor, tensor_pure
from .linalg import Subspace, nullspace, rank


class HopfError(ValueError):
    pass


class HopfSuperAlgebra:
    """algebra + (delta, eps, s).

    delta: list, per basis index, of {(i, j): scalar} coefficient tables
    eps:   list of scalars
    s:     matrix as list of columns? no: list per basis index of coordinate
           lists (image of each basis vector).
    """

    def __init__(self, algebra, delta, eps, antipode, *, check=True):
        self.algebra = algebra
        field = algebra.field
        self.delta = [
            {k: c for k, c in table.items() if c != field.zero} for table in delta
        ]
        self.eps = list(eps)
        self.antipode = [tuple(col) for col in antipode]
        if len(self.delta) != algebra.dim or len(self.eps) != algebra.dim:
            raise HopfError("coproduct/counit tables have wrong size")
        self.square = tensor(algebra, algebra)
        if check:
            report = check_hopf_axioms(self)
            if not report.holds:
                raise HopfError("Hopf axioms fail: %s" % "; ".join(report.failures))

    @property
    def field(self):
        return self.algebra.field

    def coproduct(self, elem):
        """Delta as an element of A ⊗ A."""
        A = self.algebra
        field = self.field
        coords = [field.zero] * self.square.dim
        for b in elem.support():
            c = elem.coords[b]
            for (i, j), s in self.delta[b].items():
                idx = i * A.dim + j
                coords[idx] = coords[idx] + c * s
        return Element(self.square, coords)

    def counit(self, elem):
        return self.field.sum(elem.coords[i] * self.eps[i] for i in elem.support())

    def apply_antipode(self, elem):
        A = self.algebra
        field = self.field
        out = [field.zero] * A.dim
        for i in elem.support():
            c = elem.coords[i]
            for t, s in enumerate(self.antipode[i]):
                out[t] = out[t] + c * s
        return Element(A, out)


class AxiomReport:
    def __init__(self):
        self.holds = True
        self.failures = []

    def fail(self, msg):
        self.holds = False
        self.failures.append(msg)

    def __repr__(self):
        return "AxiomReport(holds=%s, failures=%r)" % (self.holds, self.failures)


def _delta_morphism_report(H, report):
    A = H.algebra
    sq = H.square
    if H.coproduct(A.unit) != tensor_pure(sq, A.unit, A.unit):
        report.fail("coproduct does not fix the unit")
    for i in range(A.dim):
        bi = A.basis_element(i)
        di = H.coproduct(bi)
        if bi.parity() is not None and di.parity() != bi.parity() and not di.is_zero():
            report.fail("coproduct changes parity at %s" % A.space.labels[i])
        for j in range(A.dim):
            bj = A.basis_element(j)
            lhs = H.coproduct(A.multiply(bi, bj))
            rhs = sq.multiply(di, H.coproduct(bj))
            if lhs != rhs:
                report.fail(
                    "coproduct is not multiplicative at (%s,%s)"
                    % (A.space.labels[i], A.space.labels[j])
                )
                return


def check_hopf_axioms(H):
    """Full axiom sweep; returns an AxiomReport with labelled witnesses."""
    report = AxiomReport()
    A = H.algebra
    field = H.field
    n = A.dim
    _delta_morphism_report(H, report)

    if H.counit(A.unit) != field.one:
        report.fail("counit of the unit is not 1")
    for i in range(n):
        if A.space.parities[i] == 1 and H.eps[i] != field.zero:
            report.fail("counit does not kill odd element %s" % A.space.labels[i])
    for i in range(n):
        bi = A.basis_element(i)
        for j in range(n):
            bj = A.basis_element(j)
            if H.counit(A.multiply(bi, bj)) != H.counit(bi) * H.counit(bj):
                report.fail(
                    "counit is not multiplicative at (%s,%s)"
                    % (A.space.labels[i], A.space.labels[j])
                )
                break
        else:
            continue
        break

    if H.apply_antipode(A.unit) != A.unit:
        report.fail("antipode does not fix the unit")
    for i in range(n):
        bi = A.basis_element(i)
        si = H.apply_antipode(bi)
        if not si.is_zero() and si.parity() != A.space.parities[i]:
            report.fail("antipode changes parity at %s" % A.space.labels[i])
        for j in range(n):
            bj = A.basis_element(j)
            if H.apply_antipode(A.multiply(bi, bj)) != A.multiply(
                si, H.apply_antipode(bj)
            ):
                report.fail(
                    "antipode is not multiplicative at (%s,%s)"
                    % (A.space.labels[i], A.space.labels[j])
                )
                break
        else:
            continue
        break

    # coassociativity and counit law, as coefficient tables over triples
    for b in range(n):
        left, right = {}, {}
        for (i, j), c in H.delta[b].items():
            for (u, v), d in H.delta[i].items():
                key = (u, v, j)
                left[key] = left.get(key, field.zero) + c * d
            for (u, v), d in H.delta[j].items():
                key = (i, u, v)
                right[key] = right.get(key, field.zero) + c * d
        for key in set(left) | set(right):
            if left.get(key, field.zero) != right.get(key, field.zero):
                report.fail("coassociativity fails at %s" % A.space.labels[b])
                break

        lid = [field.zero] * n
        rid = [field.zero] * n
        for (i, j), c in H.delta[b].items():
            lid[j] = lid[j] + H.eps[i] * c
            rid[i] = rid[i] + c * H.eps[j]
        target = A.basis_element(b).coords
        if tuple(lid) != target or tuple(rid) != target:
            report.fail("counit law fails at %s" % A.space.labels[b])

        acc_l = A.zero()
        acc_r = A.zero()
        for (i, j), c in H.delta[b].items():
            acc_l = acc_l + A.multiply(H.apply_antipode(A.basis_element(i)), A.basis_element(j)).scale(c)
            acc_r = acc_r + A.multiply(A.basis_element(i), H.apply_antipode(A.basis_element(j))).scale(c)
        want = A.unit.scale(H.eps[b])
        if acc_l != want or acc_r != want:
            report.fail("antipode law fails at %s" % A.space.labels[b])
    return report


def grassmann_hopf(field, generators):
    """Grassmann algebra with primitive odd generators; S(theta) = -theta."""
    A = grassmann(field, generators)
    n = A.dim
    sq = tensor(A, A)
    gen_idx = [A.space.index(g) for g in generators]

    # multiplicative extension of Delta from the generators
    delta_elems = [None] * n
    delta_elems[0] = tensor_pure(sq, A.unit, A.unit)
    for b in range(1, n):
        label = A.space.labels[b]
        parts = label.split("*")
        acc = tensor_pure(sq, A.unit, A.unit)
        for gname in parts:
            gi = A.space.index(gname)
            g = A.basis_element(gi)
            prim = tensor_pure(sq, g, A.unit) + tensor_pure(sq, A.unit, g)
            acc = sq.multiply(acc, prim)
        delta_elems[b] = acc
    delta = []
    for b in range(n):
        table = {}
        e = delta_elems[b]
        for t in e.support():
            table[(t // n, t % n)] = e.coords[t]
        delta.append(table)
    eps = [field.one if b == 0 else field.zero for b in range(n)]
    antipode = []
    for b in range(n):
        deg = 0 if b == 0 else len(A.space.labels[b].split("*"))
        col = [field.zero] * n
        col[b] = field.one if deg % 2 == 0 else -field.one
        antipode.append(col)
    return HopfSuperAlgebra(A, delta, eps, antipode, check=True)


def primitives(H):
    """Basis of {x : Delta x = x⊗1 + 1⊗x}, as an echelon Subspace."""
    A = H.algebra
    field = H.field
    n = A.dim
    rows = []
    for b in range(n):
        col = {}
        for (i, j), c in H.delta[b].items():
            col[(i, j)] = col.get((i, j), field.zero) + c
        # subtract b⊗1 + 1⊗b, with the unit possibly a combination
        for u, cu in enumerate(A.unit.coords):
            if cu != field.zero:
                col[(b, u)] = col.get((b, u), field.zero) - cu
                col[(u, b)] = col.get((u, b), field.zero) - cu
        rows.append(col)
    mat = []
    keys = sorted({k for col in rows for k in col})
    for key in keys:
        mat.append([rows[b].get(key, field.zero) for b in range(n)])
    return Subspace(field, n, nullspace(mat, field, n))


def is_group_like(H, R, coords):
    """Group-likeness of x = sum_{h,r} coords[h][r] · h⊗r in H ⊗ R.

    coords: nested list indexed by (basis of H, basis of R).
    Checks Delta_R x = x ⊗_R x and eps_R(x) = 1_R.
    """
    A = H.algebra
    field = H.field
    nA, nR = A.dim, R.dim
    lhs = {}
    for h in range(nA):
        for r in range(nR):
            c = coords[h][r]
            if c == field.zero:
                continue
            for (i, j), s in H.delta[h].items():
                key = (i, j, r)
                lhs[key] = lhs.get(key, field.zero) + c * s
    rhs = {}
    parities = A.space.parities
    rpar = R.space.parities
    for h in range(nA):
        for r in range(nR):
            c1 = coords[h][r]
            if c1 == field.zero:
                continue
            for h2 in range(nA):
                for r2 in range(nR):
                    c2 = coords[h2][r2]
                    if c2 == field.zero:
                        continue
                    sign = field.one if rpar[r] * parities[h2] == 0 else -field.one
                    val = sign * c1 * c2
                    for rr, cr in R.product_coords(r, r2).items():
                        key = (h, h2, rr)
                        rhs[key] = rhs.get(key, field.zero) + val * cr
    for key in set(lhs) | set(rhs):
        if lhs.get(key, field.zero) != rhs.get(key, field.zero):
            return False
    eps_x = [field.zero] * nR
    for h in range(nA):
        for r in range(nR):
            eps_x[r] = eps_x[r] + coords[h][r] * H.eps[h]
    return tuple(eps_x) == R.unit.coords


class Coaction:
    """Right coaction tau: A -> A ⊗ D of a Hopf algebra D on an algebra A.

    tau is given per basis index of A as {(a_index, d_index): scalar}.
    """

    def __init__(self, carrier, hopf, tau, *, check=True):
        self.carrier = carrier
        self.hopf = hopf
        field = carrier.field
        self.tau = [
            {k: c for k, c in table.items() if c != field.zero} for table in tau
        ]
        if len(self.tau) != carrier.dim:
            raise HopfError("coaction table has wrong size")
        self.mixed = tensor(carrier, hopf.algebra)
        if check:
            rep = self.check_axioms()
            if not rep.holds:
                raise HopfError("coaction axioms fail: %s" % "; ".join(rep.failures))

    def apply(self, elem):
        field = self.carrier.field
        D = self.hopf.algebra
        coords = [field.zero] * self.mixed.dim
        for b in elem.support():
            c = elem.coords[b]
            for (i, j), s in self.tau[b].items():
                idx = i * D.dim + j
                coords[idx] = coords[idx] + c * s
        return Element(self.mixed, coords)

    def check_axioms(self):
        report = AxiomReport()
        A, D = self.carrier, self.hopf.algebra
        field = A.field
        # tau is an algebra morphism
        if self.apply(A.unit) != tensor_pure(self.mixed, A.unit, D.unit):
            report.fail("coaction does not fix the unit")
        for i in range(A.dim):
            bi = A.basis_element(i)
            ti = self.apply(bi)
            for j in range(A.dim):
                bj = A.basis_element(j)
                if self.apply(A.multiply(bi, bj)) != self.mixed.multiply(ti, self.apply(bj)):
                    report.fail(
                        "coaction is not multiplicative at (%s,%s)"
                        % (A.space.labels[i], A.space.labels[j])
                    )
                    break
            else:
                continue
            break
        # coassociativity of the coaction and the counit law
        for b in range(A.dim):
            left, right = {}, {}
            for (i, j), c in self.tau[b].items():
                for (u, v), d in self.tau[i].items():
                    key = (u, v, j)
                    left[key] = left.get(key, field.zero) + c * d
                for (u, v), d in self.hopf.delta[j].items():
                    key = (i, u, v)
                    right[key] = right.get(key, field.zero) + c * d
            for key in set(left) | set(right):
                if left.get(key, field.zero) != right.get(key, field.zero):
                    report.fail("coaction coassociativity fails at %s" % A.space.labels[b])
                    break
            acc = [field.zero] * A.dim
            for (i, j), c in self.tau[b].items():
                acc[i] = acc[i] + c * self.hopf.eps[j]
            if tuple(acc) != A.basis_element(b).coords:
                report.fail("coaction counit law fails at %s" % A.space.labels[b])
        return report

    def coinvariants(self):
        """Echelon basis of {a : tau(a) = a ⊗ 1}; also checks it is a subalgebra."""
        A, D = self.carrier, self.hopf.algebra
        field = A.field
        n = A.dim
        cols = []
        for b in range(n):
            col = dict(self.tau[b])
            for u, cu in enumerate(D.unit.coords):
                if cu != field.zero:
                    col[(b, u)] = col.get((b, u), field.zero) - cu
            cols.append(col)
        keys = sorted({k for col in cols for k in col})
        mat = [[cols[b].get(key, field.zero) for b in range(n)] for key in keys]
        sub = Subspace(field, n, nullspace(mat, field, n))
        for ru in sub.rows:
            for rv in sub.rows:
                prod = A.multiply(Element(A, ru), Element(A, rv))
                if not sub.contains(prod.coords):
                    raise HopfError("coinvariants failed to close under product")
        return sub

    def check_alpha_surjective(self):
        """Rank test for alpha: A⊗A -> A⊗D, a⊗a' -> a·a'_(0) ⊗ a'_(1)."""
        A, D = self.carrier, self.hopf.algebra
        field = A.field
        nA, nD = A.dim, D.dim
        cols = []
        for a in range(nA):
            ba = A.basis_element(a)
            for b in range(nA):
                coords = [field.zero] * (nA * nD)
                for (i, j), c in self.tau[b].items():
                    prod = A.multiply(ba, A.basis_element(i))
                    for t in prod.support():
                        idx = t * nD + j
                        coords[idx] = coords[idx] + c * prod.coords[t]
                cols.append(coords)
        return rank(cols, field) == nA * nD


def regular_coaction(H):
    """A Hopf algebra coacting on itself by its coproduct."""
    tau = [dict(table) for table in H.delta]
    return Coaction(H.algebra, H, tau, check=True)


def trivial_coaction(A, H):
    tau = []
    field = A.field
    D = H.algebra
    unit_terms = {u: cu for u, cu in enumerate(D.unit.coords) if cu != field.zero}
    for b in range(A.dim):
        tau.append({(b, u): cu for u, cu in unit_terms.items()})
    return Coaction(A, H, tau, check=True)
