import logging
from typing import List, Sequence, Tuple

from tangentcone.models.ideal import ConeTestReport, Curve3Result, IdealPresentation, TheoremReport
from tangentcone.models.jet import CurveGerm, OrderResult, min_order
from tangentcone.models.linalg import ExactMatrix, SubspaceBasis, Vector, combine
from tangentcone.models.polynomial import MultiPoly, ScalarLike, to_vector
from tangentcone.services.linalg_service import ExactLinearAlgebra
from tangentcone.services.polyring_service import PolyRingService
from tangentcone.utils.constants import DEFAULT_TRUNC
from tangentcone.utils.exceptions import ConeTestFailure, DimensionMismatchError, PreconditionError
from tangentcone.utils.helpers import format_vector

logger = logging.getLogger(__name__)


def _direction(ideal: IdealPresentation, v: Sequence[ScalarLike]) -> Vector:
    v = to_vector(v)
    if len(v) != ideal.nvars:
        raise DimensionMismatchError(
            f"direction has {len(v)} coordinates, ideal has {ideal.nvars} variables"
        )
    return v


def _require_on_variety(ideal: IdealPresentation):
    bad = [f"generator {k + 1} evaluates to {r}" for k, r in enumerate(ideal.residuals()) if r]
    if bad:
        raise PreconditionError(
            [f"base point {format_vector(ideal.base_point)} is not on the variety"] + bad
        )


class ConeCurveService:
    """Intersection multiplicity, tangent spaces and the order-3 curve construction."""

    @staticmethod
    def multiplicity(ideal: IdealPresentation, germ: CurveGerm) -> OrderResult:
        """
        Intersection multiplicity I(p, C, X) relative to the given generators.

        Args:
            ideal: Ideal presentation with base point p
            germ: Smooth germ G with G(0) = p

        Returns:
            OrderResult: minimum over generators of the order of g o G

        Raises:
            DimensionMismatchError: If the germ lives in another ambient space
            PreconditionError: If the germ is not smooth or misses the base point
        """
        if germ.nvars != ideal.nvars:
            raise DimensionMismatchError(
                f"curve has {germ.nvars} coordinates, ideal has {ideal.nvars} variables"
            )
        violations = []
        if not germ.is_smooth:
            violations.append("curve parameterization is not smooth: degree-1 coefficient vector is zero")
        if germ.base_point != ideal.base_point:
            violations.append(
                f"curve passes through {format_vector(germ.base_point)}, "
                f"ideal base point is {format_vector(ideal.base_point)}"
            )
        if violations:
            raise PreconditionError(violations)

        orders = [PolyRingService.jet_order(PolyRingService.jet_compose(g, germ))
                  for g in ideal.generators]
        result = min_order(orders)
        logger.debug(f"multiplicity: generator orders {[str(o) for o in orders]} -> {result}")
        return result

    @staticmethod
    def linear_parts(ideal: IdealPresentation) -> List[Vector]:
        return [g.linear_coefficients() for g in ideal.at_origin()]

    @staticmethod
    def tangent_space(ideal: IdealPresentation) -> SubspaceBasis:
        """Kernel of the linear parts of the generators at the base point."""
        _require_on_variety(ideal)
        rows = ConeCurveService.linear_parts(ideal)
        matrix = ExactMatrix.from_rows(rows, cols=ideal.nvars)
        return ExactLinearAlgebra.rank_kernel(matrix).kernel

    @staticmethod
    def in_tangent_space(ideal: IdealPresentation, v: Sequence[ScalarLike]) -> bool:
        v = _direction(ideal, v)
        return all(g.homogeneous_component(1).evaluate(v) == 0 for g in ideal.at_origin())

    @staticmethod
    def line_meets_twice(ideal: IdealPresentation, v: Sequence[ScalarLike]) -> bool:
        """Does the line p + t*v meet X with multiplicity at least 2?"""
        v = _direction(ideal, v)
        line = CurveGerm.line(ideal.base_point, v, trunc=2)
        return ConeCurveService.multiplicity(ideal, line).at_least(2)

    @staticmethod
    def _require_tangent(ideal: IdealPresentation, v: Vector):
        _require_on_variety(ideal)
        if not ConeCurveService.in_tangent_space(ideal, v):
            raise PreconditionError(f"direction {format_vector(v)} is not in the tangent space")

    @staticmethod
    def build_W(ideal: IdealPresentation, v: Sequence[ScalarLike]) -> SubspaceBasis:
        """
        The space W = {(l_f, q_f(v))} inside K^(n+1).

        Computed from the generator images: for f = sum h_i g_i the vector
        (l_f, q_f(v)) equals sum h_i(p) (l_{g_i}, q_{g_i}(v)) once every
        l_{g_i}(v) vanishes, which is why v must be tangent.

        Raises:
            PreconditionError: If v is outside the tangent space
        """
        v = _direction(ideal, v)
        ConeCurveService._require_tangent(ideal, v)
        images = []
        for g in ideal.at_origin():
            images.append(g.linear_coefficients() + (g.homogeneous_component(2).evaluate(v),))
        return ExactLinearAlgebra.span(images, ideal.nvars + 1)

    @staticmethod
    def cone_necessary_test(ideal: IdealPresentation, v: Sequence[ScalarLike]) -> ConeTestReport:
        """
        Necessary condition for the line through v to lie in the tangent cone.

        Fails exactly when W contains (0, ..., 0, c) with c != 0; such a
        vector is returned as the witness.

        Raises:
            PreconditionError: If v is zero or outside the tangent space
        """
        v = _direction(ideal, v)
        if not any(v):
            raise PreconditionError("direction must be nonzero")
        W = ConeCurveService.build_W(ideal, v)
        n = ideal.nvars
        if W.is_zero:
            return ConeTestReport(passed=True, W=W)
        projection = ExactMatrix.from_columns([w[:n] for w in W.basis], n)
        kernel = ExactLinearAlgebra.rank_kernel(projection).kernel
        for coefficients in kernel.basis:
            candidate = combine(coefficients, W.basis, n + 1)
            # independence of the basis forces candidate[n] != 0 here
            if candidate[n]:
                logger.info(f"cone test failed for v={format_vector(v)}, witness {format_vector(candidate)}")
                return ConeTestReport(passed=False, W=W, witness=candidate)
        return ConeTestReport(passed=True, W=W)

    @staticmethod
    def construct_curve3(ideal: IdealPresentation, v: Sequence[ScalarLike],
                         trunc: int = DEFAULT_TRUNC) -> Curve3Result:
        """
        Build G(t) = p + t*v + t^2*gamma with contact order at least 3.

        Args:
            ideal: Ideal presentation with base point p on the variety
            v: Tangent direction passing the necessary cone test
            trunc: Jet truncation used to report the multiplicity

        Returns:
            Curve3Result with the canonical gamma (free variables zero) and
            the dimension of the space of alternative gammas

        Raises:
            ConeTestFailure: If v fails the necessary cone test
            PreconditionError: If trunc < 2
        """
        if trunc < 2:
            raise PreconditionError("truncation order must be at least 2 to certify contact 3")
        v = _direction(ideal, v)
        report = ConeCurveService.cone_necessary_test(ideal, v)
        if not report.passed:
            raise ConeTestFailure(report)

        n = ideal.nvars
        # (gamma, 1) . w = 0 for every basis vector w of W
        matrix = ExactMatrix.from_rows([w[:n] for w in report.W.basis], cols=n)
        solution = ExactLinearAlgebra.solve_affine(matrix, [-w[n] for w in report.W.basis])
        if not solution.consistent:
            # cannot happen once the cone test has passed
            raise ConeTestFailure(report)
        gamma = solution.particular
        curve = CurveGerm.from_taylor([ideal.base_point, v, gamma], trunc)
        mult = ConeCurveService.multiplicity(ideal, curve)
        logger.info(f"curve3: gamma={format_vector(gamma)} contact {mult}")
        return Curve3Result(gamma=gamma, curve=curve, multiplicity=mult,
                            kernel_dim=solution.kernel_dim, cone_test=report)

    @staticmethod
    def hypersurface_lowest_form(f: MultiPoly) -> MultiPoly:
        """
        Lowest-degree homogeneous form of f at the origin.

        Raises:
            PreconditionError: If f is zero or f(0) != 0
        """
        if f.is_zero:
            raise PreconditionError("the zero polynomial has no lowest form")
        if f.constant_term:
            raise PreconditionError(f"constant term {f.constant_term} is nonzero: origin is not on the hypersurface")
        return f.homogeneous_component(f.min_degree)

    @staticmethod
    def verify_theorem(ideal: IdealPresentation, v: Sequence[ScalarLike],
                       trunc: int = DEFAULT_TRUNC) -> TheoremReport:
        """Run the cone test and the curve construction, bundling the outcome."""
        notes: Tuple[str, ...] = ()
        if len(ideal.generators) == 1 and any(ConeCurveService.linear_parts(ideal)[0]):
            notes = ("base point is a smooth point of the hypersurface; the construction does not need a singular point",)
        try:
            result = ConeCurveService.construct_curve3(ideal, v, trunc)
        except ConeTestFailure as e:
            return TheoremReport(cone_test=e.report, result=None, contact_at_least_3=False,
                                 notes=notes + ("necessary cone test failed",))
        return TheoremReport(cone_test=result.cone_test, result=result,
                             contact_at_least_3=result.multiplicity.at_least(3), notes=notes)
