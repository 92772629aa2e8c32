import logging
from fractions import Fraction
from tokenize import TokenError
from typing import Dict, List, Sequence

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor, implicit_multiplication, parse_expr, standard_transformations
)

from tangentcone.models.polynomial import MultiPoly
from tangentcone.utils.exceptions import ParseError

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (implicit_multiplication, convert_xor)


class SymbolicService:
    """sympy-backed parsing and the symbolic identities checked alongside the exact code."""

    @staticmethod
    def parse_polynomial(text: str, names: Sequence[str]) -> MultiPoly:
        """
        Parse polynomial text over the declared variables.

        Args:
            text: Expression such as "x1^2 - 3/2 x2^3"
            names: Declared variable names, in order

        Returns:
            MultiPoly in len(names) variables

        Raises:
            ParseError: On syntax errors, undeclared symbols, floats or non-polynomials
        """
        symbols = {name: sympy.Symbol(name) for name in names}
        try:
            expr = parse_expr(text, local_dict=symbols, transformations=TRANSFORMATIONS, evaluate=True)
        except (SyntaxError, TypeError, ValueError, sympy.SympifyError, TokenError) as e:
            raise ParseError(f"cannot parse polynomial {text!r}: {e}")
        if not isinstance(expr, sympy.Expr):
            raise ParseError(f"not a polynomial: {text!r}")
        if expr.atoms(sympy.Float):
            raise ParseError(f"floating point coefficient in {text!r}; use p/q rationals")
        unknown = {str(s) for s in expr.free_symbols} - set(names)
        if unknown:
            raise ParseError(f"undeclared variable(s) {', '.join(sorted(unknown))} in {text!r}")
        gens = [symbols[name] for name in names]
        if not gens:
            if expr.free_symbols or not expr.is_Rational:
                raise ParseError(f"not a rational constant: {text!r}")
            return MultiPoly(0, {(): Fraction(int(expr.p), int(expr.q))})
        try:
            poly = sympy.Poly(expr, *gens, domain=sympy.QQ)
        except sympy.PolynomialError as e:
            raise ParseError(f"not a polynomial in {', '.join(names)}: {text!r} ({e})")
        return MultiPoly(len(names), {
            mono: Fraction(int(c.p), int(c.q)) for mono, c in poly.terms()
        })

    @staticmethod
    def to_sympy(f: MultiPoly, names: Sequence[str]) -> sympy.Expr:
        symbols = [sympy.Symbol(name) for name in names]
        total = sympy.Integer(0)
        for mono, c in f.terms():
            term = sympy.Rational(c.numerator, c.denominator)
            for s, e in zip(symbols, mono):
                term *= s ** e
            total += term
        return total

    @staticmethod
    def generic_contact_coefficients(f: MultiPoly, order: int) -> List[sympy.Expr]:
        """
        Coefficients of t^0..t^order in f(G(t)) for the generic germ
        G(t) = sum_k t^k a_k with symbolic vectors a_1, a_2, ... and G(0) = 0.
        """
        t = sympy.Symbol('t')
        n = f.nvars
        names = [f"x{i + 1}" for i in range(n)]
        germ = []
        for i in range(n):
            component = sympy.Integer(0)
            for k in range(1, order + 1):
                component += sympy.Symbol(f"a{k}_{i + 1}") * t ** k
            germ.append(component)
        expr = SymbolicService.to_sympy(f, names).subs(
            {sympy.Symbol(name): g for name, g in zip(names, germ)}, simultaneous=True
        )
        expanded = sympy.expand(expr)
        return [sympy.expand(expanded.coeff(t, k)) for k in range(order + 1)]

    @staticmethod
    def cusp_sharpness() -> Dict[str, object]:
        """
        Smooth germs t*(0, b) + t^2*g + t^3*h against x1^2 - x2^3.

        The t^1 and t^2 coefficients vanish identically and the t^3
        coefficient is -b^3, so contact is exactly 3 whenever b != 0.
        """
        t, b = sympy.symbols('t b')
        g1, g2, h1, h2 = sympy.symbols('g1 g2 h1 h2')
        x1 = g1 * t ** 2 + h1 * t ** 3
        x2 = b * t + g2 * t ** 2 + h2 * t ** 3
        expr = sympy.expand(x1 ** 2 - x2 ** 3)
        coefficients = {k: sympy.expand(expr.coeff(t, k)) for k in range(4)}
        sharp = all(coefficients[k] == 0 for k in range(3)) and sympy.simplify(coefficients[3] + b ** 3) == 0
        logger.debug(f"cusp_sharpness: t^3 coefficient {coefficients[3]}")
        return {
            'coefficients': coefficients,
            'leading': coefficients[3],
            'contact_exactly_3': sharp,
        }

    @staticmethod
    def corollary_substitution() -> Dict[str, object]:
        """
        x = y = u, z = v in the first obstruction equation with the ansatz
        f11(x, y) = f(x) y + f(y) x.

        uu = uv = 0 removes the g12 terms, leaving
        f11(f11(u, u), v) - f11(u, f11(u, v)). Both sides are expanded
        bilinearly over the pairs of {u, v}; the resulting terms are also
        checked against a direct evaluation of the ansatz.
        """
        fu, fv, u, v = sympy.symbols('fu fv u v')
        basis = (u, v)
        values = {u: fu, v: fv}

        def f(x):
            x = sympy.expand(x)
            return sum(x.coeff(s) * values[s] for s in basis)

        def f11(x, y):
            return sympy.expand(f(x) * y + f(y) * x)

        def bilinear_terms(x, y, sign=1):
            x, y = sympy.expand(x), sympy.expand(y)
            terms = []
            for s in basis:
                for t in basis:
                    c = x.coeff(s) * y.coeff(t)
                    if c != 0:
                        terms.append(sign * c * sympy.factor(f11(s, t)))
            return terms

        terms = tuple(bilinear_terms(f11(u, u), v) + bilinear_terms(u, f11(u, v), sign=-1))
        total = sympy.expand(sum(terms))
        direct = sympy.expand(f11(f11(u, u), v) - f11(u, f11(u, v)))
        expected = fu ** 2 * v - fu * fv * u
        logger.debug(f"corollary_substitution: {len(terms)} terms, sum {total}")
        return {
            'terms': terms,
            'sum': total,
            'direct': direct,
            'matches': sympy.simplify(total - direct) == 0 and sympy.simplify(total - expected) == 0,
        }
