import logging
import random
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence

from tangentcone.config import Config
from tangentcone.models.algebra import (
    AlgebraInvariants, AlgebraPoint, BilinearMap, Splitting, TangentDecompositionReport, tensor_index
)
from tangentcone.models.ideal import IdealPresentation
from tangentcone.models.linalg import ExactMatrix, SubspaceBasis, unit_vector, zero_vector
from tangentcone.models.polynomial import MultiPoly
from tangentcone.services.linalg_service import ExactLinearAlgebra
from tangentcone.services.polyring_service import PolyRingService
from tangentcone.utils.constants import SCHEME_KINDS
from tangentcone.utils.exceptions import DimensionMismatchError, InfeasibleError, PreconditionError

logger = logging.getLogger(__name__)


def _quadric(nvars: int, terms: Dict[tuple, Fraction], a: int, b: int, c: int):
    """Accumulate c * x_a * x_b into a term map."""
    mono = [0] * nvars
    mono[a] += 1
    mono[b] += 1
    key = tuple(mono)
    terms[key] = terms.get(key, 0) + c


def _product_span(N: BilinearMap) -> SubspaceBasis:
    n = N.n
    return ExactLinearAlgebra.span(
        [N.basis_product(i, j) for i in range(n) for j in range(i, n)], n
    )


class AlgebraSchemeService:
    """Structure-constant schemes and the tangent data of their points."""

    @staticmethod
    def gen_scheme_ideal(n: int, kind: str) -> IdealPresentation:
        """
        Equations of the structure-constant scheme of commutative algebras.

        Variable c_ij^k is x_{tensor_index(i, j, k) + 1}. Commutativity
        generators come first, followed by the n^4 quadrics (zero ones
        included) in (i, j, k, l) order.

        Args:
            n: Dimension of the algebra
            kind: 'assoc' for associativity, 'nilp3' for vanishing triple products

        Returns:
            IdealPresentation in n^3 variables based at the origin

        Raises:
            PreconditionError: If n < 1 or kind is unknown
        """
        if n < 1:
            raise PreconditionError("scheme dimension n must be at least 1")
        if kind not in SCHEME_KINDS:
            raise PreconditionError(f"unknown scheme kind {kind!r}; expected one of {sorted(SCHEME_KINDS)}")
        nv = n ** 3
        generators: List[MultiPoly] = []
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    generators.append(MultiPoly.variable(nv, tensor_index(i, j, k, n))
                                      - MultiPoly.variable(nv, tensor_index(j, i, k, n)))

        for i, j, k, l in product(range(n), repeat=4):
            terms: Dict[tuple, Fraction] = {}
            for s in range(n):
                # (e_i e_j) e_k
                _quadric(nv, terms, tensor_index(i, j, s, n), tensor_index(s, k, l, n), 1)
                if kind == 'assoc':
                    # e_i (e_j e_k)
                    _quadric(nv, terms, tensor_index(i, s, l, n), tensor_index(j, k, s, n), -1)
            generators.append(MultiPoly(nv, terms))
        logger.debug(f"gen_scheme_ideal: n={n} kind={kind} {len(generators)} generators")
        return IdealPresentation(nv, generators)

    @staticmethod
    def algebra_invariants(N: AlgebraPoint) -> AlgebraInvariants:
        """N^2 as the span of all products and Ann = {x : xN = 0}."""
        if not isinstance(N, AlgebraPoint):
            N = AlgebraPoint.from_map(N)
        n = N.n
        square = _product_span(N)
        # coefficient of x_i in the e_k coordinate of x e_j is c_ij^k
        rows = [[N.coefficients[tensor_index(i, j, k, n)] for i in range(n)]
                for j in range(n) for k in range(n)]
        annihilator = ExactLinearAlgebra.rank_kernel(ExactMatrix.from_rows(rows, cols=n)).kernel
        return AlgebraInvariants(square=square, annihilator=annihilator)

    @staticmethod
    def build_splitting(N: BilinearMap) -> Splitting:
        """
        Deterministic splitting N = N1 + N2 with N2 = N^2.

        N2 keeps the first independent products e_i e_j (i <= j); N1 is
        completed greedily by standard basis vectors.
        """
        n = N.n
        square = _product_span(N)
        r = square.dim
        units = [unit_vector(n, i) for i in range(n)]
        completed = ExactLinearAlgebra.span(list(square.basis) + units, n)
        n1 = list(completed.basis[r:])
        P = ExactMatrix.from_columns(n1 + list(square.basis), n)
        Q = ExactLinearAlgebra.inverse(P)
        return Splitting(n=n, d=n - r, r=r, P=P, Q=Q)

    @staticmethod
    def scheme_tangent_space(S: IdealPresentation, N: BilinearMap) -> SubspaceBasis:
        """
        Tangent space of the scheme at N inside the symmetric tensors.

        Raises:
            DimensionMismatchError: If S does not live on n^3 structure constants
            PreconditionError: If N does not satisfy the scheme equations
        """
        n = N.n
        if S.nvars != n ** 3:
            raise DimensionMismatchError(f"scheme in {S.nvars} variables, point has {n ** 3} structure constants")
        point = N.coefficients
        bad = [k + 1 for k, g in enumerate(S.generators) if g.evaluate(point)]
        if bad:
            shown = ', '.join(str(k) for k in bad[:5])
            raise PreconditionError(f"point is not on the scheme: generators {shown}{' ...' if len(bad) > 5 else ''} do not vanish")

        rows = []
        seen = set()
        for g in S.generators:
            row = PolyRingService.gradient(g, point)
            if any(row) and row not in seen:
                seen.add(row)
                rows.append(row)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    row = [0] * n ** 3
                    row[tensor_index(i, j, k, n)] = 1
                    row[tensor_index(j, i, k, n)] = -1
                    rows.append(row)
        matrix = ExactMatrix.from_rows(rows, cols=n ** 3)
        tangent = ExactLinearAlgebra.rank_kernel(matrix).kernel
        logger.debug(f"scheme_tangent_space: {len(rows)} rows, dim {tangent.dim}")
        return tangent

    @staticmethod
    def coboundary(N: BilinearMap, phi: ExactMatrix) -> BilinearMap:
        """x o y = x phi(y) - phi(xy) + y phi(x)."""
        n = N.n
        images = [phi.column(i) for i in range(n)]

        def value(i, j):
            a = N.product(unit_vector(n, i), images[j])
            b = phi.apply(N.basis_product(i, j))
            c = N.product(unit_vector(n, j), images[i])
            return tuple(x - y + z for x, y, z in zip(a, b, c))

        return BilinearMap.from_function(n, value)

    @staticmethod
    def orbit_tangent(N: BilinearMap) -> SubspaceBasis:
        n = N.n
        tensors = []
        for a in range(n):
            for b in range(n):
                phi = ExactMatrix.from_rows(
                    [[1 if (row, col) == (a, b) else 0 for col in range(n)] for row in range(n)], cols=n
                )
                tensors.append(AlgebraSchemeService.coboundary(N, phi).coefficients)
        return ExactLinearAlgebra.span(tensors, n ** 3)

    @staticmethod
    def functional_map(n: int, f: Sequence[Fraction]) -> BilinearMap:
        """x o y = f(y) x + f(x) y for a functional f on K^n."""
        return BilinearMap.from_function(
            n, lambda i, j: tuple(
                (f[j] if k == i else 0) + (f[i] if k == j else 0) for k in range(n)
            )
        )

    @staticmethod
    def f_space(N: BilinearMap, split: Splitting) -> SubspaceBasis:
        """Maps x o y = f(y) x + f(x) y for functionals f vanishing on N^2."""
        n = N.n
        tensors = [AlgebraSchemeService.functional_map(n, split.Q.row(a)).coefficients
                   for a in range(split.d)]
        return ExactLinearAlgebra.span(tensors, n ** 3)

    @staticmethod
    def lsym_map(split: Splitting, a: int, b: int, k: int) -> BilinearMap:
        """The map S^2 N1 -> N2 sending the split pair (a, b) to the k-th N2 vector."""
        n, d = split.n, split.d
        target = unit_vector(n, d + k)
        zero = zero_vector(n)
        split_map = BilinearMap.from_function(
            n, lambda i, j: target if {i, j} == {a, b} and i < d and j < d else zero
        )
        return split.unsplit_map(split_map)

    @staticmethod
    def lsym_target_space(split: Splitting) -> SubspaceBasis:
        d, r = split.d, split.r
        tensors = [AlgebraSchemeService.lsym_map(split, a, b, k).coefficients
                   for a in range(d) for b in range(a, d) for k in range(r)]
        return ExactLinearAlgebra.span(tensors, split.n ** 3)

    @staticmethod
    def sample_generic_point(n: int, r: int, rng: Optional[random.Random] = None,
                             retries: int = Config.SAMPLE_RETRIES,
                             bound: int = Config.COEFF_BOUND) -> AlgebraPoint:
        """
        Random degree-3 nilpotent algebra with dim N^2 = r = dim Ann.

        Products of e_1..e_d land in span(e_{d+1}..e_n) with integer
        coefficients in [-bound, bound]; e_{d+1}..e_n annihilate everything.

        Raises:
            PreconditionError: If no such algebra exists for (n, r)
            InfeasibleError: If every attempt was degenerate
        """
        d = n - r
        if r < 1 or d < 1 or r > d * (d + 1) // 2:
            raise PreconditionError(f"no algebra with dim N^2 = r = dim Ann for n={n}, r={r}: need 1 <= r <= d(d+1)/2, d = n - r >= 1")
        rng = rng or random.Random(Config.SEED)
        for attempt in range(1, retries + 1):
            products = {}
            for i in range(d):
                for j in range(i, d):
                    products[(i, j)] = [0] * d + [rng.randint(-bound, bound) for _ in range(r)]
            N = AlgebraPoint.from_map(BilinearMap.from_products(n, products))
            if AlgebraSchemeService.algebra_invariants(N).in_smooth_locus(r):
                logger.info(f"sample_generic_point: n={n} r={r} found after {attempt} attempts")
                return N
        raise InfeasibleError(f"no generic point with n={n}, r={r} found in {retries} attempts")

    @staticmethod
    def tangent_decomposition_report(N: AlgebraPoint, split: Optional[Splitting] = None) -> TangentDecompositionReport:
        """
        Compare the scheme tangent space with L(S^2(N/N^2), N^2) + T_N(GN) + F.

        The projection onto the f11 block is taken in split coordinates;
        the decomposition holds with a full S^2 N1 -> N1 summand exactly
        when that projection is onto and the two kernels agree.
        """
        from tangentcone.services.obstruction_service import ObstructionService

        split = split or AlgebraSchemeService.build_splitting(N)
        n, d = N.n, split.d
        tangent = AlgebraSchemeService.scheme_tangent_space(
            AlgebraSchemeService.gen_scheme_ideal(n, 'assoc'), N
        )
        lsym = AlgebraSchemeService.lsym_target_space(split)
        orbit = AlgebraSchemeService.orbit_tangent(N)
        fspace = AlgebraSchemeService.f_space(N, split)
        known = ExactLinearAlgebra.sum_spaces(lsym, orbit)
        with_f = ExactLinearAlgebra.sum_spaces(known, fspace)

        def project(v):
            return ObstructionService.f11_block(BilinearMap(n, v), split).coefficients

        rank_tangent = ExactLinearAlgebra.image(tangent, project, d ** 3).dim
        rank_known = ExactLinearAlgebra.image(known, project, d ** 3).dim
        report = TangentDecompositionReport(
            tangent_dim=tangent.dim,
            lsym_dim=lsym.dim,
            orbit_dim=orbit.dim,
            f_dim=fspace.dim,
            sum_dim=with_f.dim,
            contains=ExactLinearAlgebra.contains_space(tangent, with_f),
            f11_surjective=rank_tangent == d * d * (d + 1) // 2,
            kernel_matches=tangent.dim - rank_tangent == known.dim - rank_known,
        )
        logger.info(f"tangent decomposition at n={n}: {report}")
        return report
