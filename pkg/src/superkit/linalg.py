"""Exact linear algebra over a Field.

Vectors are tuples/lists of field scalars, matrices are lists of rows.
Everything is deterministic: pivots are chosen left to right, echelon
bases are reduced row echelon forms, complements are taken on non-pivot
coordinates in index order.
"""

from __future__ import annotations


def rref(rows, field):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    zero, pivots, rank = field.zero, [], 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(rows)):
            if rows[r][col] != zero:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = field.one / rows[rank][col]
        rows[rank] = [inv * x for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != zero:
                c = rows[r][col]
                rows[r] = [a - c * b for a, b in zip(rows[r], rows[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(rows):
            break
    return [tuple(r) for r in rows[:rank]], pivots


class Subspace:
    """A subspace of field^n stored as an RREF basis."""

    def __init__(self, field, dim_ambient, vectors=()):
        self.field = field
        self.dim_ambient = dim_ambient
        self.rows, self.pivots = rref(list(vectors), field)

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        """Residue of vec after eliminating all pivot coordinates."""
        vec = list(vec)
        zero = self.field.zero
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c != zero:
                vec = [a - c * b for a, b in zip(vec, row)]
        return tuple(vec)

    def contains(self, vec):
        zero = self.field.zero
        return all(x == zero for x in self.reduce(vec))

    def contains_space(self, other):
        return all(self.contains(r) for r in other.rows)

    def add_vectors(self, vectors):
        return Subspace(self.field, self.dim_ambient, list(self.rows) + list(vectors))

    def intersect(self, other):
        # ker of [basis_self | basis_other] stacked gives intersection coords.
        if not self.rows or not other.rows:
            return Subspace(self.field, self.dim_ambient)
        cols = len(self.rows) + len(other.rows)
        mat = []
        for i in range(self.dim_ambient):
            mat.append([r[i] for r in self.rows] + [r[i] for r in other.rows])
        vecs = []
        for sol in nullspace(mat, self.field, cols):
            v = [self.field.zero] * self.dim_ambient
            for c, row in zip(sol[: len(self.rows)], self.rows):
                v = [a + c * b for a, b in zip(v, row)]
            vecs.append(v)
        return Subspace(self.field, self.dim_ambient, vecs)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.dim_ambient == other.dim_ambient
            and self.rows == other.rows
        )

    def __repr__(self):
        return "Subspace(dim %d of %d)" % (self.dim, self.dim_ambient)


def nullspace(rows, field, ncols=None):
    """Basis of the right kernel of the matrix (list of rows)."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [field.zero] * ncols
        v[fcol] = field.one
        for row, p in zip(red, pivots):
            v[p] = -row[fcol]
        basis.append(tuple(v))
    return basis


def solve(rows, rhs, field):
    """One solution x of A x = rhs, or None.  A given as list of rows."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    for row, p in zip(red, pivots):
        if p == n:
            return None
    x = [field.zero] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x)


def mat_mul(a, b, field):
    return [
        [field.sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def mat_vec(a, v, field):
    return tuple(field.sum(row[k] * v[k] for k in range(len(v))) for row in a)


def identity_matrix(n, field):
    return [
        [field.one if i == j else field.zero for j in range(n)] for i in range(n)
    ]


def transpose(a):
    return [list(col) for col in zip(*a)]


def invert_matrix(a, field):
    """Inverse of a square matrix over the field, or None if singular."""
    n = len(a)
    aug = [list(row) + identity_matrix(n, field)[i] for i, row in enumerate(a)]
    red, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        return None
    return [list(row[n:]) for row in red]


def rank(rows, field):
    return len(rref(rows, field)[0])


def express_in_basis(vec, basis_vectors, field):
    """Coordinates of vec in the span of basis_vectors, or None.

    basis_vectors need not be in echelon form but must be independent.
    """
    if not basis_vectors:
        return () if all(x == field.zero for x in vec) else None
    mat = transpose(basis_vectors)
    return solve(mat, list(vec), field)
