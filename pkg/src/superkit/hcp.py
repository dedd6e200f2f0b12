"""Harish-Chandra pairs over a matrix-group model.

A pair is (G, V): G a matrix group given by closed polynomial membership
conditions, a Lie algebra basis and designated generic elements with
formal entries; V a purely odd G-module; a symmetric bracket V x V ->
Lie(G); and the induced Lie(G) action on V.  Conditions checked:

  (a) bracket_VV symmetric (odd-odd super skew-symmetry),
  (b) G-equivariance, as polynomial identities in the formal entries of
      the generic elements, reduced modulo their relations,
  (c) [v,v]·v = 0 expanded over formal commuting coefficients (the cubic
      identity; valid uniformly, including characteristic 3).

Also: the largest R-subordinated submodule W_R by fixpoint iteration,
the radical data (W_R, Lie(H_R)), the pseudoabelian example, and the
exactness condition checks for short sequences of pairs.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations

import sympy

from .hopf import AxiomReport
from .linalg import Subspace, express_in_basis, invert_matrix, rank, rref
from .symbolic import Reducer, eval_at, to_sympy


class HCPError(ValueError):
    pass


def _flatten(mat):
    return [x for row in mat for x in row]


class BasisExpander:
    """Expresses vectors in the span of fixed K-vectors, over K, over a
    coefficient superalgebra R, or symbolically over a polynomial ring."""

    def __init__(self, field, basis_vectors):
        self.field = field
        self.basis = [tuple(v) for v in basis_vectors]
        self.n = len(self.basis[0]) if self.basis else 0
        red, pivots = rref(self.basis, field)
        if len(red) != len(self.basis):
            raise HCPError("expansion basis is not independent")
        self.pivots = pivots
        pm = [[self.basis[j][p] for j in range(len(self.basis))] for p in pivots]
        self.pinv = invert_matrix(pm, field) if self.basis else []

    def coords_field(self, vec):
        coords = express_in_basis(vec, self.basis, self.field)
        if coords is None:
            raise HCPError("vector escapes the expansion basis")
        return coords

    def coords_generic(self, vec, scal, add, mul, is_zero):
        """vec entries live in any commutative ring; returns (coords, ok)."""
        coords = []
        for i in range(len(self.basis)):
            acc = None
            for j, p in enumerate(self.pivots):
                term = scal(self.pinv[i][j], vec[p])
                acc = term if acc is None else add(acc, term)
            coords.append(acc)
        for t in range(self.n):
            recon = None
            for i, b in enumerate(self.basis):
                if b[t] == self.field.zero:
                    continue
                term = scal(b[t], coords[i])
                recon = term if recon is None else add(recon, term)
            diff = vec[t] if recon is None else add(vec[t], scal(-self.field.one, recon))
            if not is_zero(diff):
                return coords, False
        return coords, True

    def coords_sympy(self, vec, reducer):
        return self.coords_generic(
            vec,
            scal=lambda c, x: to_sympy(c) * x,
            add=lambda a, b: a + b,
            mul=None,
            is_zero=reducer.is_zero,
        )

    def coords_R(self, vec, R):
        return self.coords_generic(
            vec,
            scal=lambda c, x: x.scale(c),
            add=lambda a, b: a + b,
            mul=None,
            is_zero=lambda e: e.is_zero(),
        )


class GenericPoint:
    """A group element with formal polynomial entries, its inverse, and the
    relations its parameters satisfy (e.g. alpha*alpha_bar - 1)."""

    def __init__(self, matrix, inverse, relations):
        self.matrix = [[sympy.sympify(e) for e in row] for row in matrix]
        self.inverse = [[sympy.sympify(e) for e in row] for row in inverse]
        self.relations = [sympy.sympify(r) for r in relations]


class MatrixGroupModel:
    def __init__(self, field, size, closed_conditions, lie_basis, generic_points,
                 *, name=None, check=True):
        self.field = field
        self.size = size
        self.name = name
        self.entry_symbols = [
            [sympy.Symbol("m_%d_%d" % (i, j)) for j in range(size)]
            for i in range(size)
        ]
        self.closed_conditions = [sympy.sympify(c) for c in closed_conditions]
        self.lie_basis = [tuple(tuple(x) for x in m) for m in lie_basis]
        self.generic_points = list(generic_points)
        self.lie_expander = BasisExpander(field, [_flatten(m) for m in self.lie_basis])
        if check:
            self._check_model()

    @property
    def lie_dim(self):
        return len(self.lie_basis)

    def _subs_entries(self, expr, matrix_entries, to_scalar):
        mapping = {
            self.entry_symbols[i][j]: to_scalar(matrix_entries[i][j])
            for i in range(self.size)
            for j in range(self.size)
        }
        return expr.xreplace(mapping)

    def _check_model(self):
        field = self.field
        one, zero = sympy.Integer(1), sympy.Integer(0)
        base = Reducer([], field)
        ident = [[one if i == j else zero for j in range(self.size)] for i in range(self.size)]
        for cond in self.closed_conditions:
            if not base.is_zero(self._subs_entries(cond, ident, lambda x: x)):
                raise HCPError("identity matrix fails a membership condition")
        # tangent condition: I + b X is a point whenever b^2 = 0
        b = sympy.Symbol("b__tangent")
        for X in self.lie_basis:
            mat = [
                [
                    (one if i == j else zero) + b * to_sympy(X[i][j])
                    for j in range(self.size)
                ]
                for i in range(self.size)
            ]
            red = Reducer([b ** 2], field)
            for cond in self.closed_conditions:
                if not red.is_zero(self._subs_entries(cond, mat, lambda x: x)):
                    raise HCPError("Lie basis vector violates the tangent condition")
        for pt in self.generic_points:
            red = Reducer(pt.relations, field)
            for cond in self.closed_conditions:
                if not red.is_zero(self._subs_entries(cond, pt.matrix, lambda x: x)):
                    raise HCPError("generic point fails a membership condition")
            for i in range(self.size):
                for j in range(self.size):
                    prod = sum(
                        pt.matrix[i][k] * pt.inverse[k][j] for k in range(self.size)
                    )
                    want = one if i == j else zero
                    if not red.is_zero(prod - want):
                        raise HCPError("generic point inverse is wrong")
        # Lie basis closes under the commutator
        for X in self.lie_basis:
            for Y in self.lie_basis:
                comm = _mat_comm(X, Y, field)
                self.lie_expander.coords_field(_flatten(comm))

    def membership_over(self, R, gmat):
        """All closed conditions vanish at a matrix with entries in R."""
        assignment = {}
        for i in range(self.size):
            for j in range(self.size):
                assignment[self.entry_symbols[i][j]] = gmat[i][j]
        for cond in self.closed_conditions:
            if not eval_at(cond, assignment, R).is_zero():
                return False
        return True


def _mat_comm(X, Y, field):
    n = len(X)
    return [
        [
            field.sum(X[i][k] * Y[k][j] - Y[i][k] * X[k][j] for k in range(n))
            for j in range(n)
        ]
        for i in range(n)
    ]


def _mat_mul_sym(A, B):
    n = len(A)
    return [
        [sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


class HarishChandraPair:
    """G, V, bracket_VV, bracket_gV.

    action: "conjugation" (V realized by ambient matrices, module_matrices)
    or an explicit polynomial matrix in the group entry symbols.
    bracket_gv: "conjugation" (matrix commutator) or an explicit table
    {(lie_index, v_index): V-coordinate tuple}.
    """

    def __init__(self, group, module_labels, bracket_vv, *, module_matrices=None,
                 action_expr=None, bracket_gv="conjugation", name=None):
        self.group = group
        self.field = group.field
        self.module_labels = tuple(module_labels)
        self.name = name
        t = len(self.module_labels)
        if module_matrices is not None:
            self.mode = "conjugation"
            self.module_matrices = [tuple(tuple(x) for x in m) for m in module_matrices]
            self.module_expander = BasisExpander(
                self.field, [_flatten(m) for m in self.module_matrices]
            )
        else:
            self.mode = "matrix"
            if action_expr is None:
                action_expr = [
                    [sympy.Integer(1) if i == j else sympy.Integer(0) for j in range(t)]
                    for i in range(t)
                ]
            self.action_expr = [[sympy.sympify(e) for e in row] for row in action_expr]
        zero_lie = tuple([self.field.zero] * group.lie_dim)
        self._vv = {}
        for (i, j), coords in bracket_vv.items():
            self._vv[(i, j)] = tuple(coords)
        # symmetric completion for unspecified mirror entries
        for (i, j) in list(self._vv):
            if (j, i) not in self._vv:
                self._vv[(j, i)] = self._vv[(i, j)]
        self._zero_lie = zero_lie
        if bracket_gv == "conjugation":
            if self.mode != "conjugation":
                raise HCPError("derived bracket_gV needs a matrix module realization")
            self._gv = None
        else:
            self._gv = {k: tuple(v) for k, v in bracket_gv.items()}

    @property
    def t(self):
        return len(self.module_labels)

    @property
    def lie_dim(self):
        return self.group.lie_dim

    def vv(self, i, j):
        return self._vv.get((i, j), self._zero_lie)

    def gv(self, k, i):
        if self._gv is not None:
            return self._gv.get((k, i), tuple([self.field.zero] * self.t))
        comm = _mat_comm(self.group.lie_basis[k], self.module_matrices[i], self.field)
        return tuple(self.module_expander.coords_field(_flatten(comm)))

    def apply_gv(self, lie_coords, i):
        """[x, v_i] in V coordinates for x given in Lie coordinates."""
        out = [self.field.zero] * self.t
        for k, c in enumerate(lie_coords):
            if c == self.field.zero:
                continue
            for m, s in enumerate(self.gv(k, i)):
                out[m] = out[m] + c * s
        return tuple(out)

    # -- symbolic action ------------------------------------------------

    def rho_symbolic(self, point):
        """t x t polynomial matrix of the V action of a generic point."""
        t = self.t
        if self.mode == "matrix":
            g = self.group
            out = []
            for row in self.action_expr:
                out.append([g._subs_entries(e, point.matrix, lambda x: x) for e in row])
            return out
        red = Reducer(point.relations, self.field)
        cols = []
        for i in range(t):
            M = [[to_sympy(x) for x in row] for row in self.module_matrices[i]]
            conj = _mat_mul_sym(_mat_mul_sym(point.matrix, M), point.inverse)
            coords, ok = self.module_expander.coords_sympy(_flatten(conj), red)
            if not ok:
                raise HCPError("generic action escapes the module")
            cols.append(coords)
        return [[cols[j][i] for j in range(t)] for i in range(t)]

    def ad_symbolic(self, point):
        red = Reducer(point.relations, self.field)
        g = self.group
        cols = []
        for k in range(g.lie_dim):
            X = [[to_sympy(x) for x in row] for row in g.lie_basis[k]]
            conj = _mat_mul_sym(_mat_mul_sym(point.matrix, X), point.inverse)
            coords, ok = g.lie_expander.coords_sympy(_flatten(conj), red)
            if not ok:
                raise HCPError("adjoint action escapes the Lie algebra")
            cols.append(coords)
        return [[cols[j][i] for j in range(g.lie_dim)] for i in range(g.lie_dim)]

    # -- coefficient-algebra action -------------------------------------

    def rho_over(self, R, gmat, gmat_inv):
        """t x t matrix over R of the module action of a concrete point."""
        t = self.t
        if self.mode == "matrix":
            assignment = {}
            for i in range(self.group.size):
                for j in range(self.group.size):
                    assignment[self.group.entry_symbols[i][j]] = gmat[i][j]
            return [
                [eval_at(e, assignment, R) for e in row] for row in self.action_expr
            ]
        cols = []
        for i in range(t):
            M = self.module_matrices[i]
            conj = _mat_conj_over(R, gmat, M, gmat_inv)
            coords, ok = self.module_expander.coords_R(_flatten(conj), R)
            if not ok:
                raise HCPError("action escapes the module over R")
            cols.append(coords)
        return [[cols[j][i] for j in range(t)] for i in range(t)]

    def ad_over(self, R, gmat, gmat_inv):
        g = self.group
        cols = []
        for k in range(g.lie_dim):
            conj = _mat_conj_over(R, gmat, g.lie_basis[k], gmat_inv)
            coords, ok = g.lie_expander.coords_R(_flatten(conj), R)
            if not ok:
                raise HCPError("adjoint escapes the Lie algebra over R")
            cols.append(coords)
        return [[cols[j][i] for j in range(g.lie_dim)] for i in range(g.lie_dim)]

    # -- assembled Lie superalgebra -------------------------------------

    def assembled_lie(self, *, check=True):
        from .liesuper import LieSuperAlgebra

        g = self.group
        field = self.field
        l, t = g.lie_dim, self.t
        labels = ["x%d" % (k + 1) for k in range(l)] + list(self.module_labels)
        parities = [0] * l + [1] * t
        brackets = {}

        def put(i, j, coords):
            terms = {k: c for k, c in enumerate(coords) if c != field.zero}
            if terms:
                brackets[(i, j)] = terms

        for a in range(l):
            for b in range(l):
                comm = _mat_comm(g.lie_basis[a], g.lie_basis[b], field)
                coords = g.lie_expander.coords_field(_flatten(comm))
                put(a, b, list(coords) + [field.zero] * t)
        for k in range(l):
            for i in range(t):
                coords = self.gv(k, i)
                put(k, l + i, [field.zero] * l + list(coords))
                put(l + i, k, [field.zero] * l + [-c for c in coords])
        for i in range(t):
            for j in range(t):
                put(l + i, l + j, list(self.vv(i, j)) + [field.zero] * t)
        return LieSuperAlgebra(field, labels, parities, brackets, check=check)


def _mat_conj_over(R, g, M, ginv):
    n = len(g)
    MK = [[R.unit.scale(x) for x in row] for row in M]

    def mul(A, B):
        return [
            [
                _sum_elems(R, [R.multiply(A[i][k], B[k][j]) for k in range(n)])
                for j in range(n)
            ]
            for i in range(n)
        ]

    return mul(mul(g, MK), ginv)


def _sum_elems(R, elems):
    out = R.zero()
    for e in elems:
        out = out + e
    return out


def validate_pair(pair):
    """Conditions (a)(b)(c) plus the assembled-Lie cross-check."""
    report = AxiomReport()
    field = pair.field
    t = pair.t

    for i in range(t):
        for j in range(t):
            if pair.vv(i, j) != pair.vv(j, i):
                report.fail(
                    "(a) bracket not symmetric at (%s,%s)"
                    % (pair.module_labels[i], pair.module_labels[j])
                )

    for idx, point in enumerate(pair.group.generic_points):
        red = Reducer(point.relations, field)
        try:
            rho = pair.rho_symbolic(point)
            ad = pair.ad_symbolic(point)
        except HCPError as exc:
            report.fail("(b) %s (generic point %d)" % (exc, idx))
            continue
        for i in range(t):
            for j in range(i, t):
                for m in range(pair.lie_dim):
                    lhs = sympy.Integer(0)
                    for k in range(t):
                        for l in range(t):
                            c = pair.vv(k, l)[m]
                            if c != field.zero:
                                lhs = lhs + rho[k][i] * rho[l][j] * to_sympy(c)
                    rhs = sympy.Integer(0)
                    for k in range(pair.lie_dim):
                        c = pair.vv(i, j)[k]
                        if c != field.zero:
                            rhs = rhs + ad[m][k] * to_sympy(c)
                    if not red.is_zero(lhs - rhs):
                        report.fail(
                            "(b) equivariance fails at (%s,%s), generic point %d"
                            % (pair.module_labels[i], pair.module_labels[j], idx)
                        )
                        break
                else:
                    continue
                break

    # (c): coefficient of each cubic monomial in [v,v]·v for v = sum c_i v_i
    for multiset in combinations_with_replacement(range(t), 3):
        acc = [field.zero] * t
        for (i, j, k) in set(permutations(multiset)):
            term = pair.apply_gv(pair.vv(i, j), k)
            acc = [a + x for a, x in zip(acc, term)]
        if any(c != field.zero for c in acc):
            report.fail(
                "(c) cubic identity fails on coefficient of %s"
                % "*".join(pair.module_labels[x] for x in multiset)
            )

    if report.holds:
        try:
            lie_rep = pair.assembled_lie(check=False).check_axioms()
            if not lie_rep.holds:
                for f in lie_rep.failures:
                    report.fail("assembled Lie superalgebra: %s" % f)
        except HCPError as exc:
            report.fail("assembled Lie superalgebra: %s" % exc)
    return report


class Submodule:
    def __init__(self, pair, sub):
        self.pair = pair
        self.sub = sub

    @property
    def dim(self):
        return self.sub.dim

    def check_stable(self):
        """rho(g)-stability for every generic point, symbolically."""
        pair = self.pair
        for point in pair.group.generic_points:
            red = Reducer(point.relations, pair.field)
            rho = pair.rho_symbolic(point)
            for row in self.sub.rows:
                vec = []
                for m in range(pair.t):
                    acc = sympy.Integer(0)
                    for i, c in enumerate(row):
                        if c != pair.field.zero:
                            acc = acc + rho[m][i] * to_sympy(c)
                    vec.append(acc)
                res = _symbolic_residue(vec, self.sub, pair.field)
                if not all(red.is_zero(x) for x in res):
                    return False
        return True


def _symbolic_residue(vec, sub, field):
    vec = list(vec)
    for row, p in zip(sub.rows, sub.pivots):
        c = vec[p]
        vec = [x - c * to_sympy(r) for x, r in zip(vec, row)]
    return vec


def subordinated_closure(pair, lie_r):
    """Largest submodule with [W,V] in Lie(R) and [[W,V],V] in W, by fixpoint.

    lie_r: Subspace of Lie(G) coordinates.  Stabilizes in at most dim V
    steps; both containments are re-verified on the result.
    """
    field = pair.field
    t = pair.t

    # W0 = {w : [w, V] subset Lie(R)}
    constraints = []
    for j in range(t):
        # residue of [v_i, v_j] modulo lie_r, as rows of coefficients in w_i
        cols = [lie_r.reduce(pair.vv(i, j)) for i in range(t)]
        for m in range(pair.lie_dim):
            row = [cols[i][m] for i in range(t)]
            if any(c != field.zero for c in row):
                constraints.append(row)
    if constraints:
        from .linalg import nullspace

        W = Subspace(field, t, nullspace(constraints, field, t))
    else:
        W = Subspace(field, t, _std_basis(field, t))

    steps = 0
    while True:
        constraints = []
        for j in range(t):
            for k in range(t):
                cols = [
                    W.reduce(pair.apply_gv(pair.vv(i, j), k)) for i in range(t)
                ]
                for m in range(t):
                    row = [cols[i][m] for i in range(t)]
                    if any(c != field.zero for c in row):
                        constraints.append(row)
        if constraints:
            from .linalg import nullspace

            cut = Subspace(field, t, nullspace(constraints, field, t))
            new = W.intersect(cut)
        else:
            new = W
        if new == W:
            break
        W = new
        steps += 1
        if steps > t:
            raise HCPError("fixpoint failed to stabilize within dim V steps")

    for row in W.rows:
        for j in range(t):
            br = [field.zero] * pair.lie_dim
            for i, c in enumerate(row):
                for m, s in enumerate(pair.vv(i, j)):
                    br[m] = br[m] + c * s
            if not lie_r.contains(br):
                raise HCPError("result violates [W,V] in Lie(R)")
        for j in range(t):
            for k in range(t):
                vvk = [field.zero] * t
                for i, c in enumerate(row):
                    for m, s in enumerate(pair.apply_gv(pair.vv(i, j), k)):
                        vvk[m] = vvk[m] + c * s
                if not W.contains(vvk):
                    raise HCPError("result violates [[W,V],V] in W")
    return Submodule(pair, W)


def _std_basis(field, t):
    out = []
    for i in range(t):
        v = [field.zero] * t
        v[i] = field.one
        out.append(v)
    return out


def r_radical(pair, lie_r):
    """(W_R, Lie(H_R)) with Lie(H_R) = {x in Lie(R) : x·V in W_R}."""
    field = pair.field
    W = subordinated_closure(pair, lie_r)
    t = pair.t
    # parametrize x over lie_r's basis and constrain [x, v_j] into W
    constraints = []
    for j in range(t):
        cols = [
            W.sub.reduce(pair.apply_gv(row, j)) for row in lie_r.rows
        ]
        for m in range(t):
            row = [cols[s][m] for s in range(len(lie_r.rows))]
            if any(c != field.zero for c in row):
                constraints.append(row)
    if lie_r.dim == 0:
        lie_hr = Subspace(field, pair.lie_dim)
    elif constraints:
        from .linalg import nullspace

        sols = nullspace(constraints, field, lie_r.dim)
        vecs = []
        for sol in sols:
            v = [field.zero] * pair.lie_dim
            for c, row in zip(sol, lie_r.rows):
                v = [a + c * b for a, b in zip(v, row)]
            vecs.append(v)
        lie_hr = Subspace(field, pair.lie_dim, vecs)
    else:
        lie_hr = Subspace(field, pair.lie_dim, lie_r.rows)
    # [W_R, V] must land in Lie(H_R)
    for row in W.sub.rows:
        for j in range(t):
            br = [field.zero] * pair.lie_dim
            for i, c in enumerate(row):
                for m, s in enumerate(pair.vv(i, j)):
                    br[m] = br[m] + c * s
            if not lie_hr.contains(br):
                raise HCPError("[W_R, V] escapes Lie(H_R)")
    return W, lie_hr


def brute_force_largest_subordinated(pair, lie_r):
    """Oracle for small dims: best coordinate-span submodule (dim V <= 4)."""
    field = pair.field
    t = pair.t
    if t > 4:
        raise HCPError("oracle restricted to dim V <= 4")
    best = Subspace(field, t)
    for mask in range(1 << t):
        vecs = []
        for i in range(t):
            if mask >> i & 1:
                v = [field.zero] * t
                v[i] = field.one
                vecs.append(v)
        W = Subspace(field, t, vecs)
        ok = True
        for row in W.rows:
            for j in range(t):
                br = [field.zero] * pair.lie_dim
                for i, c in enumerate(row):
                    for m, s in enumerate(pair.vv(i, j)):
                        br[m] = br[m] + c * s
                if not lie_r.contains(br):
                    ok = False
                    break
                for k in range(t):
                    if not W.contains(pair.apply_gv(br, k)):
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok and W.dim > best.dim:
            best = W
    return best


def pseudoabelian_example(field, n):
    """V = W + W* with [phi_i, w_j] = delta_ij x, x central acting as 0."""
    one, zero = field.one, field.zero
    x = [[zero, one], [zero, zero]]
    s = sympy.Symbol("s")
    point = GenericPoint(
        [[1, s], [0, 1]], [[1, -s], [0, 1]], []
    )
    m = [[sympy.Symbol("m_%d_%d" % (i, j)) for j in range(2)] for i in range(2)]
    group = MatrixGroupModel(
        field,
        2,
        [m[0][0] - 1, m[1][1] - 1, m[1][0]],
        [x],
        [point],
        name="Ga",
    )
    labels = ["w%d" % (i + 1) for i in range(n)] + ["phi%d" % (i + 1) for i in range(n)]
    bracket_vv = {}
    for i in range(n):
        bracket_vv[(n + i, i)] = (one,)
    gv = {}
    return HarishChandraPair(
        group,
        labels,
        bracket_vv,
        bracket_gv=gv,
        name="pseudoabelian(%d)" % n,
    )


def check_exact_sequence(inner, w_to_v, lie_embed, mid, outer, v_to_u,
                         *, even_level_exact=True):
    """0 -> W -> V -> U -> 0 plus the group-level conditions.

    inner, mid, outer: pairs.  w_to_v: matrix (rows indexed by mid.V) of
    the embedding; lie_embed: Lie(inner) basis expressed in Lie(mid)
    coordinates; v_to_u: matrix (rows indexed by outer.V) of the
    projection.  Group-level (fppf) exactness of the even parts is not
    decidable here and is passed in as fixture data.
    """
    report = AxiomReport()
    field = mid.field
    if not even_level_exact:
        report.fail("even-level group exactness flagged false by fixture")

    t_in, t_mid, t_out = inner.t, mid.t, outer.t
    if w_to_v and (len(w_to_v) != t_mid or any(len(r) != t_in for r in w_to_v)):
        raise HCPError("embedding matrix has wrong shape")
    if v_to_u and (len(v_to_u) != t_out or any(len(r) != t_mid for r in v_to_u)):
        raise HCPError("projection matrix has wrong shape")

    w_cols = [tuple(w_to_v[i][j] for i in range(t_mid)) for j in range(t_in)]
    if rank(w_cols, field) != t_in:
        report.fail("(1) W -> V is not injective")
    proj_rows = [tuple(r) for r in v_to_u]
    if rank(proj_rows, field) != t_out:
        report.fail("(1) V -> U is not surjective")
    from .linalg import nullspace

    ker = Subspace(field, t_mid, nullspace(proj_rows, field, t_mid)) if t_mid else Subspace(field, 0)
    img = Subspace(field, t_mid, w_cols)
    if ker != img:
        report.fail("(1) kernel of V -> U differs from the image of W")

    W = Submodule(mid, img)
    if not W.check_stable():
        report.fail("(2a) W is not G-stable")

    # (2b) inner generic points act as identity on V/W
    for point in inner.group.generic_points:
        red = Reducer(point.relations, field)
        rho = mid.rho_symbolic(point)
        for j in range(t_mid):
            vec = [
                rho[m][j] - (sympy.Integer(1) if m == j else sympy.Integer(0))
                for m in range(t_mid)
            ]
            res = _symbolic_residue(vec, img, field)
            if not all(red.is_zero(x) for x in res):
                report.fail("(2b) inner group moves V/W at %s" % mid.module_labels[j])
                break

    lie_inner = Subspace(field, mid.lie_dim, [tuple(r) for r in lie_embed])
    for row in img.rows:
        for j in range(t_mid):
            br = [field.zero] * mid.lie_dim
            for i, c in enumerate(row):
                for m, s in enumerate(mid.vv(i, j)):
                    br[m] = br[m] + c * s
            if not lie_inner.contains(br):
                report.fail("(2c) [V, W] escapes Lie(inner)")
                break
    return report
