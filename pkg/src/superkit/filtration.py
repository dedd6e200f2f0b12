"""Descending filtrations by super-ideals and the associated graded algebra.

A filtration is a chain A = I_0 >= I_1 >= ... >= I_N = 0 of graded ideals
with I_k I_l <= I_{k+l} (pieces beyond the end of the chain are zero).
The graded companion gr A = (+)_k I_k/I_{k+1} is realized concretely on a
deterministic adapted basis: for each level the echelon basis vectors of
I_k that survive modulo I_{k+1}, selected in echelon order.
"""

from __future__ import annotations

from .algebra import AlgebraError, Element, SuperAlgebra, SuperIdeal, tensor
from .linalg import Subspace, invert_matrix


class FiltrationError(ValueError):
    pass


class FilteredSuperAlgebra:
    def __init__(self, algebra, chain, *, check=True):
        self.algebra = algebra
        self.chain = list(chain)
        if not self.chain or self.chain[0].dim != algebra.dim:
            raise FiltrationError("chain must start with the whole algebra")
        if self.chain[-1].dim != 0:
            raise FiltrationError("chain must end with the zero ideal")
        for k in range(len(self.chain) - 1):
            if not self.chain[k].contains_space(self.chain[k + 1]):
                raise FiltrationError("chain is not descending at level %d" % k)
        if check:
            self._check_ideals()
            self._check_multiplicative()

    @property
    def length(self):
        return len(self.chain)

    def piece(self, k):
        if k >= len(self.chain):
            return self.chain[-1]
        return self.chain[k]

    def level(self, elem):
        """Largest k with elem in I_k; len(chain)-1 for zero."""
        k = 0
        while k + 1 < len(self.chain) and self.piece(k + 1).contains(elem.coords):
            k += 1
        return k

    def _check_ideals(self):
        A = self.algebra
        for k in range(1, len(self.chain)):
            for row in self.chain[k].rows:
                v = Element(A, row)
                if v.parity() is None:
                    raise FiltrationError("level %d is not graded" % k)
                for i in range(A.dim):
                    if not self.chain[k].contains(A.multiply(A.basis_element(i), v).coords):
                        raise FiltrationError("level %d is not an ideal" % k)

    def _check_multiplicative(self):
        A = self.algebra
        for k in range(len(self.chain)):
            for l in range(len(self.chain)):
                target = self.piece(k + l)
                for ru in self.chain[k].rows:
                    u = Element(A, ru)
                    for rv in self.chain[l].rows:
                        prod = A.multiply(u, Element(A, rv))
                        if not target.contains(prod.coords):
                            raise FiltrationError(
                                "I_%d * I_%d escapes I_%d" % (k, l, k + l)
                            )


def adic_filtration(algebra, ideal):
    """Powers of a nilpotent ideal: A >= I >= I^2 >= ... >= 0."""
    field = algebra.field
    chain = [Subspace(field, algebra.dim, [e.coords for e in
                                           (algebra.basis_element(i) for i in range(algebra.dim))])]
    current = ideal.sub
    steps = 0
    while current.dim > 0:
        chain.append(current)
        nxt_vecs = []
        for ru in current.rows:
            for rv in ideal.sub.rows:
                nxt_vecs.append(
                    algebra.multiply(Element(algebra, ru), Element(algebra, rv)).coords
                )
        current = Subspace(field, algebra.dim, nxt_vecs)
        steps += 1
        if steps > algebra.dim + 1:
            raise FiltrationError("ideal is not nilpotent")
    chain.append(Subspace(field, algebra.dim))
    return FilteredSuperAlgebra(algebra, chain, check=True)


class GradedCompanion:
    """gr A on an adapted basis; also exposes projections to components."""

    def __init__(self, filtration):
        self.filtration = filtration
        A = filtration.algebra
        field = A.field
        reps, degrees = [], []
        for k in range(filtration.length - 1):
            running = Subspace(field, A.dim, filtration.piece(k + 1).rows)
            for row in filtration.piece(k).rows:
                if not running.contains(row):
                    reps.append(Element(A, row))
                    degrees.append(k)
                    running = running.add_vectors([row])
        if len(reps) != A.dim:
            raise FiltrationError("adapted basis has wrong size")
        self.reps = reps
        self.degrees = degrees
        cols = [r.coords for r in reps]
        inv = invert_matrix([[cols[j][i] for j in range(A.dim)] for i in range(A.dim)], field)
        # column j of inv gives the adapted coordinates of basis vector e_j
        self._adapt_cols = [[inv[i][j] for i in range(A.dim)] for j in range(A.dim)]
        self._build_gr()

    def adapted_coords(self, elem):
        field = elem.algebra.field
        out = [field.zero] * len(self.reps)
        for j in elem.support():
            c = elem.coords[j]
            col = self._adapt_cols[j]
            for i in range(len(out)):
                if col[i] != field.zero:
                    out[i] = out[i] + c * col[i]
        return out

    def class_coords(self, elem, k):
        """Coordinates of elem + I_{k+1} in the degree-k component.

        Requires elem in I_k (components of degree < k must vanish)."""
        field = elem.algebra.field
        ad = self.adapted_coords(elem)
        for i, d in enumerate(self.degrees):
            if d < k and ad[i] != field.zero:
                raise FiltrationError("element is not in filtration level %d" % k)
        return [ad[i] if self.degrees[i] == k else field.zero for i in range(len(ad))]

    def _build_gr(self):
        A = self.filtration.algebra
        field = A.field
        n = A.dim
        labels = []
        count = {}
        for d in self.degrees:
            count[d] = count.get(d, 0) + 1
            labels.append("d%d.%d" % (d, count[d]))
        parities = [self.reps[i].parity() for i in range(n)]
        products = {}
        for i in range(n):
            for j in range(n):
                prod = A.multiply(self.reps[i], self.reps[j])
                deg = self.degrees[i] + self.degrees[j]
                ad = self.adapted_coords(prod)
                terms = {}
                for t in range(n):
                    c = ad[t]
                    if c == field.zero:
                        continue
                    if self.degrees[t] < deg:
                        raise FiltrationError("product drops below its degree")
                    if self.degrees[t] == deg:
                        terms[t] = c
                if terms:
                    products[(i, j)] = terms
        unit = self.adapted_coords(A.unit)
        # the unit lives in degree 0; higher-degree components are cut off
        unit = [unit[i] if self.degrees[i] == 0 else field.zero for i in range(n)]
        self.gr = SuperAlgebra(
            field, labels, parities, unit, products, check=False,
            name="gr(%s)" % (A.name or "?"),
        )
        self.gr.degrees = list(self.degrees)

    def verify_well_defined(self):
        """Products of classes do not depend on the chosen representatives."""
        A = self.filtration.algebra
        for i in range(len(self.reps)):
            k = self.degrees[i]
            base = self.gr.multiply(self.gr.basis_element(i), self.gr.basis_element(i))
            for row in self.filtration.piece(k + 1).rows:
                shifted = self.reps[i] + Element(A, row)
                for j in range(len(self.reps)):
                    l = self.degrees[j]
                    prod = A.multiply(shifted, self.reps[j])
                    got = self.class_coords(prod, k + l)
                    ref = self.class_coords(A.multiply(self.reps[i], self.reps[j]), k + l)
                    if got != ref:
                        return False
        return True


def graded_companion(filtration):
    return GradedCompanion(filtration)


def tensor_filtration(FA, FB):
    """T_k = sum_i I_i ⊗ J_{k-i} on the tensor product algebra."""
    A, B = FA.algebra, FB.algebra
    T = tensor(A, B)
    field = T.field
    top = (FA.length - 1) + (FB.length - 1)
    chain = []
    for k in range(top + 1):
        vecs = []
        for i in range(min(k, FA.length - 1) + 1):
            j = k - i
            if j > FB.length - 1:
                continue
            for ru in FA.piece(i).rows:
                for rv in FB.piece(j).rows:
                    coords = [field.zero] * T.dim
                    for a in range(A.dim):
                        if ru[a] == field.zero:
                            continue
                        for b in range(B.dim):
                            if rv[b] != field.zero:
                                coords[a * B.dim + b] = ru[a] * rv[b]
                    vecs.append(coords)
        chain.append(Subspace(field, T.dim, vecs))
    if chain[-1].dim != 0:
        chain.append(Subspace(field, T.dim))
    return FilteredSuperAlgebra(T, chain, check=False)


class GrTensorReport:
    def __init__(self):
        self.holds = True
        self.failures = []
        self.degree_dims = {}

    def fail(self, msg):
        self.holds = False
        self.failures.append(msg)


def check_gr_tensor_iso(FA, FB):
    """Compare gr(A) ⊗ gr(B) with gr(A⊗B) via a ⊗ b -> (a⊗b) + T_{k+l+1}.

    Returns a report; .holds means the canonical map is a degreewise
    bijection and multiplies correctly on every basis pair.
    """
    report = GrTensorReport()
    grA = graded_companion(FA)
    grB = graded_companion(FB)
    FT = tensor_filtration(FA, FB)
    grT = graded_companion(FT)
    source = tensor(grA.gr, grB.gr)
    T = FT.algebra
    field = T.field
    B = FB.algebra
    nT = T.dim

    # columns of the canonical map, indexed like the source basis
    cols = []
    src_degrees = []
    for i in range(grA.gr.dim):
        for j in range(grB.gr.dim):
            deg = grA.degrees[i] + grB.degrees[j]
            src_degrees.append(deg)
            coords = [field.zero] * nT
            ra, rb = grA.reps[i], grB.reps[j]
            for a in ra.support():
                for b in rb.support():
                    coords[a * B.dim + b] = ra.coords[a] * rb.coords[b]
            try:
                cols.append(grT.class_coords(Element(T, coords), deg))
            except FiltrationError:
                report.fail("image of basis pair (%d,%d) misses its degree" % (i, j))
                cols.append([field.zero] * nT)

    def apply(elem):
        out = [field.zero] * nT
        for j in elem.support():
            c = elem.coords[j]
            col = cols[j]
            for t in range(nT):
                if col[t] != field.zero:
                    out[t] = out[t] + c * col[t]
        return Element(grT.gr, out)

    # degreewise bijectivity
    for deg in sorted(set(src_degrees) | set(grT.degrees)):
        src_idx = [s for s in range(len(src_degrees)) if src_degrees[s] == deg]
        tgt_idx = [t for t in range(nT) if grT.degrees[t] == deg]
        report.degree_dims[deg] = (len(src_idx), len(tgt_idx))
        if len(src_idx) != len(tgt_idx):
            report.fail("degree %d dimensions differ" % deg)
            continue
        mat = [[cols[s][t] for s in src_idx] for t in tgt_idx]
        from .linalg import rank

        if rank(mat, field) != len(src_idx):
            report.fail("degree %d map is not bijective" % deg)

    if apply(source.unit) != grT.gr.unit:
        report.fail("unit is not preserved")
    for i in range(source.dim):
        bi = source.basis_element(i)
        im_i = apply(bi)
        for j in range(source.dim):
            bj = source.basis_element(j)
            lhs = apply(source.multiply(bi, bj))
            rhs = grT.gr.multiply(im_i, apply(bj))
            if lhs != rhs:
                report.fail("multiplicativity fails at basis pair (%d,%d)" % (i, j))
                return report
    return report
