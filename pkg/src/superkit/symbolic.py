"""Bridge to sympy for polynomial identity checks with formal parameters.

Group-level conditions (equivariance, stability, membership of generic
group elements) are polynomial identities in formal matrix entries,
reduced modulo the relations attached to the generic element (for
example alpha*alpha_inv - 1).  Reduction uses a Groebner basis; over a
prime field the modulus is passed through to sympy.

Scalar conversion: Fraction <-> sympy.Rational, FpElement <-> Integer.
Evaluation of a polynomial at superalgebra elements (for membership of
matrices over a coefficient algebra R) multiplies out monomials with R
arithmetic; only even entries are ever substituted, so order is irrelevant.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .fields import FpElement, Rationals


def to_sympy(scalar):
    if isinstance(scalar, Fraction):
        return sympy.Rational(scalar.numerator, scalar.denominator)
    if isinstance(scalar, FpElement):
        return sympy.Integer(scalar.v)
    if isinstance(scalar, int):
        return sympy.Integer(scalar)
    raise TypeError("cannot convert %r to sympy" % (scalar,))


def from_sympy(expr, field):
    q = sympy.Rational(expr)
    return field.from_fraction(Fraction(int(q.p), int(q.q)))


def parse_expr(text, symbols):
    """Parse a polynomial expression using only the given named symbols."""
    expr = sympy.sympify(text, locals=dict(symbols), rational=True)
    extra = expr.free_symbols - set(symbols.values())
    if extra:
        raise ValueError("unknown symbols %s in %r" % (sorted(map(str, extra)), text))
    return expr


class Reducer:
    """Zero test for polynomials modulo an ideal of relations."""

    def __init__(self, relations, field):
        self.relations = [sympy.expand(r) for r in relations if not r.is_zero]
        self.modulus = None if isinstance(field, Rationals) else field.p
        self._gb = None
        if self.relations:
            gens = sorted(
                {s for r in self.relations for s in r.free_symbols}, key=str
            )
            kwargs = {"order": "lex"}
            if self.modulus:
                kwargs["modulus"] = self.modulus
            self._gb = sympy.groebner(self.relations, *gens, **kwargs)

    def normal_form(self, expr):
        expr = sympy.expand(expr)
        if self._gb is not None:
            expr = self._gb.reduce(expr)[1]
            expr = sympy.expand(expr)
        if self.modulus:
            if expr.free_symbols:
                expr = sympy.Poly(expr, *sorted(expr.free_symbols, key=str),
                                  modulus=self.modulus).as_expr()
            else:
                expr = sympy.Rational(expr) % self.modulus
        return expr

    def is_zero(self, expr):
        nf = self.normal_form(expr)
        return sympy.simplify(nf) == 0


def eval_at(expr, assignment, R):
    """Evaluate a polynomial at elements of a superalgebra R.

    assignment: {sympy.Symbol: Element of R}.  Substituted values must be
    even (they commute), which is the case for all matrix entries here.
    """
    field = R.field
    expr = sympy.expand(expr)
    syms = sorted(expr.free_symbols, key=str)
    if not syms:
        return R.unit.scale(from_sympy(expr, field))
    poly = sympy.Poly(expr, *syms)
    out = R.zero()
    for exps, coeff in poly.terms():
        term = R.unit.scale(from_sympy(coeff, field))
        for s, e in zip(syms, exps):
            val = assignment[s]
            for _ in range(int(e)):
                term = R.multiply(term, val)
        out = out + term
    return out
