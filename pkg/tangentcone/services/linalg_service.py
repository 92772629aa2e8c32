import logging
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from tangentcone.models.linalg import (
    AffineSolution, ExactMatrix, RankKernel, SubspaceBasis, Vector, combine, unit_vector
)
from tangentcone.models.polynomial import to_vector
from tangentcone.utils.exceptions import DimensionMismatchError

logger = logging.getLogger(__name__)


def _integer_row(row: Sequence[Fraction]) -> List[int]:
    # scaling a row by a nonzero constant changes neither rank nor kernel
    scale = 1
    for x in row:
        if x.denominator != 1:
            scale = lcm(scale, x.denominator)
    return [int(x * scale) for x in row]


def _bareiss(rows: List[List[int]], ncols: int) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form.

    After k pivot steps every live entry is a (k+1)-minor of the input, so
    the division by the previous pivot is exact.
    """
    M = [list(r) for r in rows]
    m = len(M)
    pivots: List[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][c]), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        top = M[r]
        a = top[c]
        for i in range(r + 1, m):
            row = M[i]
            b = row[c]
            if b:
                for j in range(c + 1, ncols):
                    row[j] = (a * row[j] - b * top[j]) // prev
            else:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (a * row[j]) // prev
            row[c] = 0
        prev = a
        pivots.append(c)
        r += 1
    return M[:r], pivots


def _reduce(echelon: List[List[int]], pivots: Sequence[int]) -> List[List[Fraction]]:
    """Back-substitute a fraction-free echelon form to reduced row echelon form."""
    R = [[Fraction(x) for x in row] for row in echelon]
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        piv = R[k][c]
        if piv != 1:
            R[k] = [x / piv for x in R[k]]
        lead = R[k]
        for i in range(k):
            f = R[i][c]
            if f:
                R[i] = [x - f * y for x, y in zip(R[i], lead)]
    return R


def _kernel_from_rref(R: Sequence[Sequence[Fraction]], pivots: Sequence[int], ncols: int) -> SubspaceBasis:
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for k, c in enumerate(pivots):
            if c < ncols:
                vec[c] = -R[k][free]
        basis.append(tuple(vec))
    return SubspaceBasis(ncols, tuple(basis))


class ExactLinearAlgebra:
    """Exact linear algebra over the rationals."""

    @staticmethod
    def echelon(matrix: ExactMatrix) -> Tuple[List[List[Fraction]], List[int]]:
        """Reduced row echelon form (nonzero rows only) and pivot columns."""
        rows = [_integer_row(matrix.row(i)) for i in range(matrix.rows)]
        echelon, pivots = _bareiss(rows, matrix.cols)
        return _reduce(echelon, pivots), pivots

    @staticmethod
    def rank(matrix: ExactMatrix) -> int:
        rows = [_integer_row(matrix.row(i)) for i in range(matrix.rows)]
        _, pivots = _bareiss(rows, matrix.cols)
        return len(pivots)

    @staticmethod
    def rank_kernel(matrix: ExactMatrix) -> RankKernel:
        """
        Exact rank and a kernel basis of a matrix.

        Args:
            matrix: Matrix A

        Returns:
            RankKernel with rank + kernel.dim == A.cols; kernel vectors are
            indexed by free columns, pivot order equals column order
        """
        R, pivots = ExactLinearAlgebra.echelon(matrix)
        kernel = _kernel_from_rref(R, pivots, matrix.cols)
        logger.debug(f"rank_kernel: {matrix.rows}x{matrix.cols} rank {len(pivots)}")
        return RankKernel(rank=len(pivots), kernel=kernel, pivots=tuple(pivots))

    @staticmethod
    def solve_affine(matrix: ExactMatrix, rhs: Sequence) -> AffineSolution:
        """
        Solve A x = b exactly.

        Args:
            matrix: Matrix A
            rhs: Right-hand side b with one entry per row of A

        Returns:
            AffineSolution whose particular solution has every free variable
            set to zero; ``consistent`` is False when no solution exists

        Raises:
            DimensionMismatchError: If len(b) != A.rows
        """
        rhs = to_vector(rhs)
        if len(rhs) != matrix.rows:
            raise DimensionMismatchError(
                f"right-hand side has {len(rhs)} entries, matrix has {matrix.rows} rows"
            )
        n = matrix.cols
        augmented = [_integer_row(matrix.row(i) + (rhs[i],)) for i in range(matrix.rows)]
        echelon, pivots = _bareiss(augmented, n + 1)
        R = _reduce(echelon, pivots)
        coefficient_pivots = [c for c in pivots if c < n]
        kernel = _kernel_from_rref(R, coefficient_pivots, n)
        if n in pivots:
            return AffineSolution(consistent=False, particular=None, kernel=kernel,
                                  rank=len(coefficient_pivots))
        particular = [Fraction(0)] * n
        for k, c in enumerate(pivots):
            particular[c] = R[k][n]
        return AffineSolution(consistent=True, particular=tuple(particular), kernel=kernel,
                              rank=len(pivots))

    @staticmethod
    def inverse(matrix: ExactMatrix) -> ExactMatrix:
        """
        Inverse of a square matrix.

        Raises:
            DimensionMismatchError: If the matrix is not square
            ValueError: If the matrix is singular
        """
        n = matrix.rows
        if matrix.cols != n:
            raise DimensionMismatchError(f"cannot invert a {matrix.rows}x{matrix.cols} matrix")
        augmented = [_integer_row(matrix.row(i) + unit_vector(n, i)) for i in range(n)]
        echelon, pivots = _bareiss(augmented, 2 * n)
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        R = _reduce(echelon, pivots[:n])
        return ExactMatrix.from_rows([row[n:] for row in R[:n]], cols=n)

    @staticmethod
    def left_kernel(matrix: ExactMatrix) -> SubspaceBasis:
        """Basis of {y : y^T A = 0}."""
        return ExactLinearAlgebra.rank_kernel(matrix.transpose()).kernel

    @staticmethod
    def span(vectors: Sequence[Sequence], ambient_dim: int) -> SubspaceBasis:
        """Independent subset of ``vectors`` spanning the same space.

        The first vector of each new direction is kept as given (no
        normalization), so bases read back like their generators.
        """
        vectors = [to_vector(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(
                    f"vector of length {len(v)} in a space of dimension {ambient_dim}"
                )
        vectors = [v for v in vectors if any(v)]
        if not vectors:
            return SubspaceBasis(ambient_dim, ())
        matrix = ExactMatrix.from_columns(vectors, ambient_dim)
        rows = [_integer_row(matrix.row(i)) for i in range(matrix.rows)]
        _, pivots = _bareiss(rows, matrix.cols)
        return SubspaceBasis(ambient_dim, tuple(vectors[c] for c in pivots))

    @staticmethod
    def full_space(ambient_dim: int) -> SubspaceBasis:
        return SubspaceBasis(ambient_dim, tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)))

    @staticmethod
    def coordinates(space: SubspaceBasis, vector: Sequence) -> Optional[Vector]:
        """Coefficients expressing ``vector`` in the basis, or None if outside the span."""
        vector = to_vector(vector)
        if len(vector) != space.ambient_dim:
            raise DimensionMismatchError(
                f"vector of length {len(vector)} tested against a subspace of K^{space.ambient_dim}"
            )
        if not space.basis:
            return () if not any(vector) else None
        matrix = ExactMatrix.from_columns(space.basis, space.ambient_dim)
        solution = ExactLinearAlgebra.solve_affine(matrix, vector)
        return solution.particular if solution.consistent else None

    @staticmethod
    def subspace_contains(space: SubspaceBasis, vector: Sequence) -> bool:
        """
        Membership test v in span(S).

        Raises:
            DimensionMismatchError: If v does not live in the ambient space of S
        """
        return ExactLinearAlgebra.coordinates(space, vector) is not None

    @staticmethod
    def contains_space(big: SubspaceBasis, small: SubspaceBasis) -> bool:
        if big.ambient_dim != small.ambient_dim:
            raise DimensionMismatchError("subspaces of different ambient spaces")
        if small.is_zero:
            return True
        combined = ExactLinearAlgebra.span(list(big.basis) + list(small.basis), big.ambient_dim)
        return combined.dim == big.dim

    @staticmethod
    def sum_spaces(*spaces: SubspaceBasis) -> SubspaceBasis:
        if not spaces:
            raise ValueError("need at least one subspace")
        dim = spaces[0].ambient_dim
        if any(s.ambient_dim != dim for s in spaces):
            raise DimensionMismatchError("subspaces of different ambient spaces")
        return ExactLinearAlgebra.span([v for s in spaces for v in s.basis], dim)

    @staticmethod
    def image(space: SubspaceBasis, linear_map, target_dim: int) -> SubspaceBasis:
        """Span of the images of the basis under ``linear_map`` (a callable)."""
        return ExactLinearAlgebra.span([linear_map(v) for v in space.basis], target_dim)

    @staticmethod
    def element(space: SubspaceBasis, coefficients: Sequence) -> Vector:
        return combine(to_vector(coefficients), space.basis, space.ambient_dim)
