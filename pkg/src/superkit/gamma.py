"""Normal-form arithmetic in the group Gamma(R) built from a Harish-Chandra pair.

Elements are words in the generators
    e(a, v)   a odd in R, v a basis vector of V,
    f(b, x)   b even square-zero in R, x in Lie(G),
and even group points g.  Every element has the unique normal form
g · e(a_1, v_1) ··· e(a_t, v_t) with the e-chain in the declared basis
order.  Rewriting uses the defining relations:

  (1) e(a,v) e(a',v') = f(-aa', [v,v']) e(a',v') e(a,v)
  (2) f(b,x) e(a,v) f(b,x)^{-1} e(a,v)^{-1} = e(ba, [x,v])
  (3) [f(b,x), f(b',x')] = f(bb', [x,x'])
  (4) e(a,v) e(a',v)  = f(-aa', (1/2)[v,v]) e(a+a', v)
  (5) g e(a,v) g^{-1} = e(a, Ad(g)v)

f-factors and group points are absorbed into the even part immediately as
matrix factors I + bX; moving them left conjugates the e-chain via (5)
(clean, because the conjugated coefficients all share the same odd factor
whose square is zero).  Termination: every (1)/(4) correction coefficient
has strictly larger degree in the odd generators of R, and the odd part
of R generates a nilpotent ideal.
"""

from __future__ import annotations

from .algebra import AlgebraError, Element
from .hcp import HCPError


class GammaError(ValueError):
    pass


_MAX_REWRITE_STEPS = 100000


def _lift_field_matrix(R, mat):
    return [[R.unit.scale(x) for x in row] for row in mat]


def rmat_identity(R, n):
    return [
        [R.unit if i == j else R.zero() for j in range(n)] for i in range(n)
    ]


def rmat_mul(R, A, B):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = R.zero()
            for k in range(n):
                acc = acc + R.multiply(A[i][k], B[k][j])
            row.append(acc)
        out.append(row)
    return out


def rmat_inverse(R, A):
    """Gaussian elimination; pivots must be invertible in R (R local here)."""
    n = len(A)
    aug = [list(row) + list(rmat_identity(R, n)[i]) for i, row in enumerate(A)]
    for col in range(n):
        piv, piv_inv = None, None
        for r in range(col, n):
            try:
                piv_inv = aug[r][col].invert()
                piv = r
                break
            except AlgebraError:
                continue
        if piv is None:
            raise GammaError("even part is not invertible over R")
        aug[col], aug[piv] = aug[piv], aug[col]
        aug[col] = [R.multiply(piv_inv, x) for x in aug[col]]
        for r in range(n):
            if r != col:
                c = aug[r][col]
                if not c.is_zero():
                    aug[r] = [x - R.multiply(c, y) for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def f_matrix(pair, R, b, lie_coords):
    """I + b·X for X = sum lie_coords_k X_k (field coordinates)."""
    n = pair.group.size
    out = rmat_identity(R, n)
    for k, c in enumerate(lie_coords):
        if c == pair.field.zero:
            continue
        X = pair.group.lie_basis[k]
        for i in range(n):
            for j in range(n):
                if X[i][j] != pair.field.zero:
                    out[i][j] = out[i][j] + b.scale(c * X[i][j])
    return out


class GammaElement:
    """Normal form: even part matrix over R plus odd e-chain coefficients.

    trace: an equivalent generator-token sequence for the even part,
    kept for oracle evaluation; it does not participate in equality.
    """

    __slots__ = ("pair", "R", "even", "coords", "trace")

    def __init__(self, pair, R, even, coords, trace=None, *, check=True):
        self.pair = pair
        self.R = R
        self.even = tuple(tuple(row) for row in even)
        self.coords = tuple(coords)
        self.trace = tuple(trace) if trace is not None else None
        if check:
            self._check()

    def _check(self):
        for row in self.even:
            for x in row:
                if x.parity() not in (0,):
                    raise GammaError("even part has an odd entry")
        for a in self.coords:
            if a.parity() not in (0, 1) or (not a.is_zero() and a.parity() != 1):
                raise GammaError("odd coordinate is not odd")
        if not self.pair.group.membership_over(self.R, self.even):
            raise GammaError("even part fails the membership predicate")

    def __eq__(self, other):
        return (
            isinstance(other, GammaElement)
            and self.pair is other.pair
            and self.R is other.R
            and self.even == other.even
            and self.coords == other.coords
        )

    def tokens(self):
        toks = [("g", self.even)]
        for i, a in enumerate(self.coords):
            if not a.is_zero():
                toks.append(("e", a, i))
        return toks

    def word_tokens(self):
        """Generator tokens usable by the enveloping oracle (trace + e-chain)."""
        if self.trace is None:
            raise GammaError("element carries no generator trace")
        toks = list(self.trace)
        for i, a in enumerate(self.coords):
            if not a.is_zero():
                toks.append(("e", a, i))
        return toks


def identity(pair, R):
    n = pair.group.size
    return GammaElement(
        pair, R, rmat_identity(R, n), [R.zero()] * pair.t, trace=(), check=False
    )


def gen_e(pair, R, a, v):
    """e(a, v): a odd in R, v a basis index or label of V."""
    if isinstance(v, str):
        v = pair.module_labels.index(v)
    if not a.is_zero() and a.parity() != 1:
        raise GammaError("e-coefficient must be odd")
    coords = [R.zero()] * pair.t
    coords[v] = a
    return GammaElement(
        pair, R, rmat_identity(R, pair.group.size), coords, trace=(), check=False
    )


def gen_f(pair, R, b, lie_coords):
    """f(b, x): b even with b^2 = 0, x in Lie(G) by field coordinates."""
    if not b.is_zero() and b.parity() != 0:
        raise GammaError("f-coefficient must be even")
    if not R.multiply(b, b).is_zero():
        raise GammaError("f-coefficient must square to zero")
    lie_coords = tuple(lie_coords)
    even = f_matrix(pair, R, b, lie_coords)
    u = GammaElement(
        pair, R, even, [R.zero()] * pair.t,
        trace=(("f", b, lie_coords),), check=False,
    )
    if not pair.group.membership_over(R, even):
        raise GammaError("f-matrix fails the membership predicate")
    return u


def _conjugate_chain(pair, R, word, hmat, hmat_inv):
    """h^{-1} e(a, v_i) h = e(a, Ad(h^{-1}) v_i), expanded on the basis.

    The expansion of one e into several basis e's is harmless: all share
    the odd factor a, so their mutual corrections vanish (a^2 = 0)."""
    if not word:
        return []
    rho = pair.rho_over(R, hmat_inv, hmat)
    out = []
    for (a, idx) in word:
        for m in range(pair.t):
            c = rho[m][idx]
            if c.is_zero():
                continue
            coeff = R.multiply(c, a)
            if not coeff.is_zero():
                out.append((coeff, m))
    return out


def normalize(pair, R, tokens, strategy="leftmost"):
    """Rewrite a generator word to its unique normal form."""
    n = pair.group.size
    g = rmat_identity(R, n)
    trace = []
    word = []

    def absorb_even(hmat, hmat_inv, token):
        nonlocal g, word
        word = _conjugate_chain(pair, R, word, hmat, hmat_inv)
        g = rmat_mul(R, g, hmat)
        trace.append(token)

    for tok in tokens:
        kind = tok[0]
        if kind == "e":
            _, a, idx = tok
            if not a.is_zero() and a.parity() != 1:
                raise GammaError("e-coefficient must be odd")
            if not a.is_zero():
                word.append((a, idx))
        elif kind == "f":
            _, b, lie_coords = tok
            if b.is_zero():
                continue
            if b.parity() != 0 or not R.multiply(b, b).is_zero():
                raise GammaError("bad f-coefficient")
            lie_coords = tuple(lie_coords)
            fm = f_matrix(pair, R, b, lie_coords)
            fi = f_matrix(pair, R, -b, lie_coords)
            absorb_even(fm, fi, ("f", b, lie_coords))
        elif kind == "g":
            _, hmat = tok
            hmat = [list(r) for r in hmat]
            if hmat and not isinstance(hmat[0][0], Element):
                hmat = _lift_field_matrix(R, hmat)
            hinv = rmat_inverse(R, hmat)
            absorb_even(hmat, hinv, ("g", tuple(tuple(r) for r in hmat)))
        else:
            raise GammaError("unknown token %r" % (kind,))

    steps = 0
    while True:
        steps += 1
        if steps > _MAX_REWRITE_STEPS:
            raise GammaError("rewriting did not terminate")
        word = [(a, i) for (a, i) in word if not a.is_zero()]
        spots = [
            p for p in range(len(word) - 1) if word[p][1] >= word[p + 1][1]
        ]
        if not spots:
            break
        p = spots[0] if strategy == "leftmost" else spots[-1]
        (a, i), (b, j) = word[p], word[p + 1]
        if i == j:
            corr_b = -R.multiply(a, b)
            half = pair.field.one / pair.field.from_int(2)
            corr_x = tuple(half * c for c in pair.vv(i, i))
            merged = [(a + b, i)]
        else:
            corr_b = -R.multiply(a, b)
            corr_x = pair.vv(i, j)
            merged = [(b, j), (a, i)]
        left, right = word[:p], word[p + 2:]
        if corr_b.is_zero() or all(c == pair.field.zero for c in corr_x):
            word = left + merged + right
            continue
        fm = f_matrix(pair, R, corr_b, corr_x)
        fi = f_matrix(pair, R, -corr_b, corr_x)
        left = _conjugate_chain(pair, R, left, fm, fi)
        g = rmat_mul(R, g, fm)
        trace.append(("f", corr_b, corr_x))
        word = left + merged + right

    coords = [R.zero()] * pair.t
    for (a, i) in word:
        coords[i] = a
    return GammaElement(pair, R, g, coords, trace=trace, check=True)


def multiply(u, w, strategy="leftmost"):
    if u.pair is not w.pair or u.R is not w.R:
        raise GammaError("mismatched pair or coefficient algebra")
    return normalize(u.pair, u.R, u.tokens() + w.tokens(), strategy)


def inverse(u):
    toks = []
    for i in range(u.pair.t - 1, -1, -1):
        a = u.coords[i]
        if not a.is_zero():
            toks.append(("e", -a, i))
    toks.append(("g", [list(r) for r in rmat_inverse(u.R, [list(r) for r in u.even])]))
    return normalize(u.pair, u.R, toks)


def conjugate(gmat, u):
    """g u g^{-1} for an even group point g (field or R entries)."""
    R = u.R
    if gmat and not isinstance(gmat[0][0], Element):
        gmat = _lift_field_matrix(R, gmat)
    if not u.pair.group.membership_over(R, gmat):
        raise GammaError("conjugator fails the membership predicate")
    ginv = rmat_inverse(R, gmat)
    toks = [("g", gmat)] + u.tokens() + [("g", ginv)]
    return normalize(u.pair, u.R, toks)


# -- tangent bracket ----------------------------------------------------


def _ground_algebra(field):
    from .algebra import SuperAlgebra

    return SuperAlgebra(
        field, ["1"], [0], [field.one], {(0, 0): {0: field.one}},
        check=False, name="K",
    )


def tangent_algebra(field):
    """K[eps0,eps1] ⊗ K[eps0',eps1'] with handles on the four generators."""
    from .algebra import DualSuperNumbers, tensor, tensor_pure

    K = _ground_algebra(field)
    D = DualSuperNumbers(K).factor
    R = tensor(D, D)
    eps = {
        "e0": tensor_pure(R, D.basis_element(1), D.basis_element(0)),
        "e1": tensor_pure(R, D.basis_element(2), D.basis_element(0)),
        "e0p": tensor_pure(R, D.basis_element(0), D.basis_element(1)),
        "e1p": tensor_pure(R, D.basis_element(0), D.basis_element(2)),
    }
    # index in R of the product eps_i * eps_j'
    prod_index = {
        (0, 0): 1 * 3 + 1,
        (0, 1): 1 * 3 + 2,
        (1, 0): 2 * 3 + 1,
        (1, 1): 2 * 3 + 2,
    }
    return R, eps, prod_index


def _exp_tokens(pair, eps_elem, parity, gcoords):
    """Tokens of e^{eps·z} for homogeneous z in g (Lie ⊕ V coordinates)."""
    l = pair.lie_dim
    toks = []
    if parity == 0:
        lie = tuple(gcoords[:l])
        toks.append(("f", eps_elem, lie))
    else:
        for i in range(pair.t):
            c = gcoords[l + i]
            if c != pair.field.zero:
                toks.append(("e", -eps_elem.scale(c), i))
    return toks


def tangent_bracket(pair, px, x_coords, py, y_coords):
    """[x, y] from the group commutator over dual super-numbers.

    px, py: parities; x_coords, y_coords: coordinates in Lie(G) ⊕ V.
    Extracts the eps·eps' coefficient of [e^{eps x}, e^{eps' y}] and
    divides by (-1)^{|x||y|}.
    """
    field = pair.field
    R, eps, prod_index = tangent_algebra(field)
    l, t = pair.lie_dim, pair.t
    ex = eps["e0"] if px == 0 else eps["e1"]
    ey = eps["e0p"] if py == 0 else eps["e1p"]
    u = normalize(pair, R, _exp_tokens(pair, ex, px, x_coords))
    w = normalize(pair, R, _exp_tokens(pair, ey, py, y_coords))
    c = multiply(multiply(u, w), multiply(inverse(u), inverse(w)))
    mono = prod_index[(px, py)]
    sign = -field.one if px * py == 1 else field.one
    out = [field.zero] * (l + t)
    if (px + py) % 2 == 0:
        # even result: even part is I + s·eps·eps'·X_{[x,y]}
        n = pair.group.size
        mat = [[c.even[i][j].coords[mono] for j in range(n)] for i in range(n)]
        ident_dev = [
            [sign * mat[i][j] for j in range(n)] for i in range(n)
        ]
        coords = pair.group.lie_expander.coords_field(
            [x for row in ident_dev for x in row]
        )
        for k, v in enumerate(coords):
            out[k] = v
        for i in range(t):
            if any(cc != field.zero for cc in (c.coords[i].coords[mono],)):
                raise GammaError("unexpected odd part in an even commutator")
    else:
        # odd result: coords are -eps·eps'·[x,y]_i
        for i in range(t):
            out[l + i] = -(sign * c.coords[i].coords[mono])
    return tuple(out)


# -- enveloping oracle --------------------------------------------------


class EnvelopingOracle:
    """Truncated PBW arithmetic in U(g) ⊗ R.

    Monomials are tuples of basis indices of g = Lie(G) ⊕ V, nondecreasing,
    with odd indices strictly increasing.  Coefficients live in R; terms
    whose coefficient vanishes (nilpotency of R) are dropped.
    """

    def __init__(self, pair, R):
        self.pair = pair
        self.R = R
        self.lie = pair.assembled_lie(check=False)
        self.parities = self.lie.space.parities

    def one(self):
        return {(): self.R.unit}

    def gen_token(self, tok):
        kind = tok[0]
        if kind == "e":
            _, a, idx = tok
            out = {(): self.R.unit}
            if not a.is_zero():
                out[(self.pair.lie_dim + idx,)] = a
            return out
        if kind == "f":
            _, b, lie_coords = tok
            out = {(): self.R.unit}
            for k, c in enumerate(lie_coords):
                if c != self.pair.field.zero and not b.is_zero():
                    out[(k,)] = b.scale(c)
            return out
        raise GammaError("the enveloping oracle cannot absorb a raw group point")

    def _mono_parity(self, mono):
        return sum(self.parities[i] for i in mono) % 2

    def straighten(self, seq):
        """Expand a generator sequence in the PBW basis (field coefficients)."""
        field = self.pair.field
        result = {}
        stack = [(tuple(seq), field.one)]
        while stack:
            seq, coeff = stack.pop()
            pos = None
            for k in range(len(seq) - 1):
                a, b = seq[k], seq[k + 1]
                if a > b or (a == b and self.parities[a] == 1):
                    pos = k
                    break
            if pos is None:
                result[seq] = result.get(seq, field.zero) + coeff
                continue
            a, b = seq[pos], seq[pos + 1]
            head, tail = seq[:pos], seq[pos + 2:]
            if a == b:
                # odd square: z^2 = (1/2)[z,z]
                half = field.one / field.from_int(2)
                for idx, c in self.lie.bracket_basis(a, a).items():
                    stack.append((head + (idx,) + tail, coeff * half * c))
            else:
                sign = field.one if self.parities[a] * self.parities[b] == 0 else -field.one
                stack.append((head + (b, a) + tail, coeff * sign))
                for idx, c in self.lie.bracket_basis(a, b).items():
                    stack.append((head + (idx,) + tail, coeff * c))
        return {m: c for m, c in result.items() if c != field.zero}

    def product(self, X, Y):
        R = self.R
        out = {}
        for m1, r1 in X.items():
            for m2, r2 in Y.items():
                p2 = self._mono_parity(m2)
                for p in (0, 1):
                    rp = r1.homogeneous_part(p)
                    if rp.is_zero():
                        continue
                    coeff = R.multiply(rp, r2)
                    if p == 1 and p2 == 1:
                        coeff = -coeff
                    if coeff.is_zero():
                        continue
                    for mono, c in self.straighten(m1 + m2).items():
                        cur = out.get(mono, R.zero())
                        cur = cur + coeff.scale(c)
                        out[mono] = cur
        return {m: c for m, c in out.items() if not c.is_zero()}

    def evaluate(self, tokens):
        acc = self.one()
        for tok in tokens:
            acc = self.product(acc, self.gen_token(tok))
        return acc


def oracle_enveloping(arg, tokens=None, R=None):
    """Evaluate a GammaElement (via its trace) or a token word in U(g)⊗R."""
    if isinstance(arg, GammaElement):
        oracle = EnvelopingOracle(arg.pair, arg.R)
        return oracle.evaluate(arg.word_tokens())
    pair = arg
    oracle = EnvelopingOracle(pair, R)
    return oracle.evaluate(tokens)


# -- supermatrix oracle -------------------------------------------------


def _candidate_twists(pair):
    rp = getattr(pair, "row_parities", None)
    if rp is None or getattr(pair, "mode", None) != "conjugation":
        raise GammaError("supermatrix oracle needs a matrix fixture with row parities")
    field = pair.field
    col_twist = [(-field.one if p == 1 else field.one) for p in rp]
    flat = [field.one] * len(rp)
    return [col_twist, flat]


def _e_matrix(pair, R, a, idx, twist):
    n = pair.group.size
    out = rmat_identity(R, n)
    M = pair.module_matrices[idx]
    for i in range(n):
        for j in range(n):
            if M[i][j] != pair.field.zero:
                out[i][j] = out[i][j] + a.scale(M[i][j] * twist[j])
    return out


def calibrate_supermatrix(pair):
    """Choose the column sign twist making relation (1) hold matricially."""
    if getattr(pair, "_supermatrix_twist", None) is not None:
        return pair._supermatrix_twist
    from .algebra import grassmann

    R = grassmann(pair.field, ["cal_a", "cal_b"])
    a = R.element({"cal_a": 1})
    b = R.element({"cal_b": 1})
    for twist in _candidate_twists(pair):
        ok = True
        for i in range(pair.t):
            for j in range(pair.t):
                lhs = rmat_mul(R, _e_matrix(pair, R, a, i, twist),
                               _e_matrix(pair, R, b, j, twist))
                corr = f_matrix(pair, R, -R.multiply(a, b), pair.vv(i, j))
                rhs = rmat_mul(
                    R,
                    rmat_mul(R, corr, _e_matrix(pair, R, b, j, twist)),
                    _e_matrix(pair, R, a, i, twist),
                )
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            pair._supermatrix_twist = twist
            return twist
    raise GammaError("no candidate twist satisfies relation (1)")


def oracle_supermatrix(arg, tokens=None, R=None):
    """Evaluate a GammaElement or token word as a supermatrix product over R."""
    if isinstance(arg, GammaElement):
        pair, R = arg.pair, arg.R
        tokens = arg.tokens()
    else:
        pair = arg
    twist = calibrate_supermatrix(pair)
    n = pair.group.size
    acc = rmat_identity(R, n)
    for tok in tokens:
        kind = tok[0]
        if kind == "e":
            _, a, idx = tok
            acc = rmat_mul(R, acc, _e_matrix(pair, R, a, idx, twist))
        elif kind == "f":
            _, b, lie_coords = tok
            acc = rmat_mul(R, acc, f_matrix(pair, R, b, lie_coords))
        elif kind == "g":
            _, hmat = tok
            hmat = [list(r) for r in hmat]
            if hmat and not isinstance(hmat[0][0], Element):
                hmat = _lift_field_matrix(R, hmat)
            acc = rmat_mul(R, acc, hmat)
        else:
            raise GammaError("unknown token %r" % (kind,))
    return [tuple(row) for row in acc]
