import logging
from fractions import Fraction
from typing import Dict, List, Sequence

from tangentcone.models.jet import CurveGerm, Jet, OrderResult
from tangentcone.models.polynomial import MultiPoly, ScalarLike, to_vector
from tangentcone.utils.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)

ARITH_KINDS = ('add', 'mul', 'scale')


class PolyRingService:
    """Named polynomial and jet operations used by the other services."""

    @staticmethod
    def poly_arith(a: MultiPoly, b, kind: str) -> MultiPoly:
        """
        Exact ring operation on two polynomials.

        Args:
            a: Left operand
            b: Right operand (a MultiPoly, or a scalar when kind is 'scale')
            kind: One of 'add', 'mul', 'scale'

        Returns:
            Normalized result polynomial

        Raises:
            DimensionMismatchError: If the operands live in different rings
            ValueError: If kind is unknown
        """
        if kind == 'add':
            return a + b
        if kind == 'mul':
            if not isinstance(b, MultiPoly):
                raise TypeError("'mul' expects two polynomials; use 'scale' for scalars")
            return a * b
        if kind == 'scale':
            if isinstance(b, MultiPoly):
                if b.degree > 0:
                    raise ValueError("'scale' expects a scalar or a constant polynomial")
                b = b.constant_term
            return a.scale(b)
        raise ValueError(f"unknown arithmetic kind {kind!r}; expected one of {ARITH_KINDS}")

    @staticmethod
    def poly_eval(f: MultiPoly, point: Sequence[ScalarLike]) -> Fraction:
        return f.evaluate(point)

    @staticmethod
    def translate_to_origin(f: MultiPoly, point: Sequence[ScalarLike]) -> MultiPoly:
        """Return g(x) = f(x + p), so that g(0) = f(p)."""
        return f.translate(point)

    @staticmethod
    def homogeneous_component(f: MultiPoly, degree: int) -> MultiPoly:
        return f.homogeneous_component(degree)

    @staticmethod
    def partial_derivative(f: MultiPoly, index: int) -> MultiPoly:
        return f.partial_derivative(index)

    @staticmethod
    def gradient(f: MultiPoly, point: Sequence[ScalarLike]):
        """Values of all first partial derivatives of f at a point, in one pass over the terms."""
        point = to_vector(point)
        if len(point) != f.nvars:
            raise DimensionMismatchError(
                f"point has {len(point)} coordinates, polynomial has {f.nvars} variables"
            )
        grad = [Fraction(0)] * f.nvars
        for mono, c in f.terms():
            for i, e in enumerate(mono):
                if not e:
                    continue
                value = c * e
                for j, ej in enumerate(mono):
                    exponent = ej - 1 if j == i else ej
                    if exponent:
                        value *= point[j] ** exponent
                        if not value:
                            break
                if value:
                    grad[i] += value
        return tuple(grad)

    @staticmethod
    def jet_compose(f: MultiPoly, germ: CurveGerm) -> Jet:
        """
        Coefficients of f(G(t)) through the germ's truncation order.

        Args:
            f: Polynomial in germ.nvars variables
            germ: Curve germ G

        Returns:
            Jet of f o G, exact through degree D

        Raises:
            DimensionMismatchError: If f.nvars != germ.nvars
        """
        if f.nvars != germ.nvars:
            raise DimensionMismatchError(
                f"polynomial in {f.nvars} variables composed with a germ in {germ.nvars} coordinates"
            )
        D = germ.trunc
        powers: List[Dict[int, Jet]] = [{0: Jet.constant(1, D), 1: comp} for comp in germ.components]

        def power(i: int, e: int) -> Jet:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * germ.components[i]
            return cache[e]

        total = Jet.zero(D)
        for mono, c in f.terms():
            term = Jet.constant(c, D)
            for i, e in enumerate(mono):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    @staticmethod
    def jet_order(h: Jet) -> OrderResult:
        return h.order()
