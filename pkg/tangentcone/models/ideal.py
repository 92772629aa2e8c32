from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from tangentcone.models.jet import CurveGerm, OrderResult
from tangentcone.models.linalg import SubspaceBasis, Vector
from tangentcone.models.polynomial import MultiPoly, ScalarLike, to_vector
from tangentcone.utils.exceptions import DimensionMismatchError


class IdealPresentation:
    """Generators of an ideal in K[x_1..x_n] together with a base point.

    Multiplicities and tangent data are computed relative to these
    generators (scheme-theoretically); radicals are never taken.
    """

    __slots__ = ('nvars', 'generators', 'base_point')

    def __init__(self, nvars: int, generators: Sequence[MultiPoly],
                 base_point: Optional[Sequence[ScalarLike]] = None):
        generators = tuple(generators)
        if not generators:
            raise ValueError("an ideal presentation needs at least one generator")
        for g in generators:
            if g.nvars != nvars:
                raise DimensionMismatchError(
                    f"generator in {g.nvars} variables for an ideal in {nvars} variables"
                )
        if base_point is None:
            base_point = (0,) * nvars
        base_point = to_vector(base_point)
        if len(base_point) != nvars:
            raise DimensionMismatchError(
                f"base point has {len(base_point)} coordinates, expected {nvars}"
            )
        self.nvars = nvars
        self.generators: Tuple[MultiPoly, ...] = generators
        self.base_point: Tuple[Fraction, ...] = base_point

    def residuals(self) -> Tuple[Fraction, ...]:
        return tuple(g.evaluate(self.base_point) for g in self.generators)

    def at_origin(self) -> Tuple[MultiPoly, ...]:
        """Generators re-expressed in coordinates centred at the base point."""
        return tuple(g.translate(self.base_point) for g in self.generators)

    def with_base_point(self, point: Sequence[ScalarLike]) -> 'IdealPresentation':
        return IdealPresentation(self.nvars, self.generators, point)

    def __eq__(self, other):
        if not isinstance(other, IdealPresentation):
            return NotImplemented
        return (self.nvars, self.generators, self.base_point) == \
            (other.nvars, other.generators, other.base_point)

    def __hash__(self):
        return hash((self.nvars, self.generators, self.base_point))

    def __repr__(self):
        gens = ', '.join(g.to_text() for g in self.generators)
        return f"IdealPresentation(<{gens}> at {tuple(str(x) for x in self.base_point)})"


@dataclass(frozen=True)
class ConeTestReport:
    passed: bool
    W: SubspaceBasis
    witness: Optional[Vector] = None

    @property
    def verdict(self) -> str:
        return 'pass' if self.passed else 'fail'


@dataclass(frozen=True)
class Curve3Result:
    gamma: Vector
    curve: CurveGerm
    multiplicity: OrderResult
    kernel_dim: int = 0
    cone_test: Optional[ConeTestReport] = None


@dataclass(frozen=True)
class TheoremReport:
    cone_test: ConeTestReport
    result: Optional[Curve3Result] = None
    contact_at_least_3: bool = False
    notes: Tuple[str, ...] = field(default=())
