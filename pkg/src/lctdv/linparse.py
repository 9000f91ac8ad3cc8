"""Parsing of linear expressions and inequalities from fixture text.

Expression syntax is ordinary arithmetic (`2*a1 - a2 + 1/2`), parsed with
sympy and converted to exact rational linear forms.  Floats are rejected:
every coefficient must arrive as an integer or a ratio of integers.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .exactlin import Rational
from .polytope import Constraint, LinForm, PolytopeError, REL_EQ, REL_GE, REL_GT


class ExprParseError(PolytopeError):
    pass


def _to_fraction(value) -> Fraction:
    if isinstance(value, sympy.Integer):
        return Fraction(int(value))
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise ExprParseError(f"non-rational coefficient {value!r}")


def parse_linform(text: str) -> LinForm:
    """Parse an affine expression into a LinForm, exactly."""
    try:
        expr = sympy.sympify(text, rational=True)
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ExprParseError(f"cannot parse expression {text!r}: {exc}")
    expr = sympy.expand(expr)
    poly_vars = sorted(expr.free_symbols, key=str)
    if not poly_vars:
        return LinForm({}, _to_fraction(sympy.nsimplify(expr)))
    coeffs = {}
    constant = expr
    for sym in poly_vars:
        if sympy.degree(sympy.Poly(expr, sym), sym) > 1:
            raise ExprParseError(f"expression {text!r} is not linear in {sym}")
        c = expr.coeff(sym, 1)
        if c.free_symbols:
            raise ExprParseError(f"expression {text!r} is not linear")
        coeffs[str(sym)] = _to_fraction(c)
        constant = constant - c * sym
    constant = sympy.expand(constant)
    if constant.free_symbols:
        raise ExprParseError(f"expression {text!r} is not linear")
    return LinForm(coeffs, _to_fraction(constant))


_REL_TOKENS = [("<=", None), (">=", REL_GE), ("==", REL_EQ),
               ("<", None), (">", REL_GT), ("=", REL_EQ)]


def parse_inequality(text: str) -> Constraint:
    """Parse ``lhs REL rhs`` into a Constraint normalized to ``form REL 0``.

    ``<=`` and ``<`` are flipped to the ``>=`` / ``>`` conventions.
    """
    for token, rel in _REL_TOKENS:
        if token in text:
            lhs_text, rhs_text = text.split(token, 1)
            lhs = parse_linform(lhs_text)
            rhs = parse_linform(rhs_text)
            if token == "<=":
                return Constraint(rhs - lhs, REL_GE)
            if token == "<":
                return Constraint(rhs - lhs, REL_GT)
            return Constraint(lhs - rhs, rel)
    raise ExprParseError(f"no relation found in {text!r}")


def eval_k_expression(text: str, k: int) -> Rational:
    """Evaluate a rational expression in the symbol ``k`` at an integer k."""
    try:
        expr = sympy.sympify(text, rational=True)
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ExprParseError(f"cannot parse expression {text!r}: {exc}")
    allowed = {str(s) for s in expr.free_symbols}
    if allowed - {"k"}:
        raise ExprParseError(
            f"expression {text!r} may only use the symbol k")
    value = expr.subs(sympy.Symbol("k"), sympy.Integer(k))
    return _to_fraction(sympy.nsimplify(sympy.together(value)))
