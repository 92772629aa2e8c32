"""
Tests for exact rank, kernels, affine solving and subspace operations.
"""
import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from tangentcone.models.linalg import ExactMatrix, SubspaceBasis, dot
from tangentcone.services.linalg_service import ExactLinearAlgebra
from tangentcone.utils.exceptions import DimensionMismatchError


def _determinant(rows):
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
            if not term:
                break
        total += term
    return total


def _rank_by_minors(matrix):
    for k in range(min(matrix.rows, matrix.cols), 0, -1):
        for rows in combinations(range(matrix.rows), k):
            for cols in combinations(range(matrix.cols), k):
                if _determinant([[matrix[i, j] for j in cols] for i in rows]):
                    return k
    return 0


def _random_matrix(rng):
    rows, cols = rng.randint(1, 4), rng.randint(1, 6)
    entries = [Fraction(rng.choice([0, 0, 0, 1, -1, 2, -2]), rng.choice([1, 1, 2, 3]))
               for _ in range(rows * cols)]
    return ExactMatrix(rows, cols, entries)


class TestRankKernel:
    """Test cases for rank and kernel computation."""

    def test_identity_has_full_rank(self):
        """Test the identity matrix."""
        result = ExactLinearAlgebra.rank_kernel(ExactMatrix.identity(4))
        assert result.rank == 4
        assert result.kernel.is_zero

    def test_kernel_is_indexed_by_free_columns(self):
        """Test the kernel basis of a single row."""
        matrix = ExactMatrix.from_rows([[1, 2, 3]])
        result = ExactLinearAlgebra.rank_kernel(matrix)
        assert result.rank == 1
        assert result.kernel.basis == ((-2, 1, 0), (-3, 0, 1))

    def test_matrix_without_rows(self):
        """Test that a 0 x n matrix has the whole space as kernel."""
        result = ExactLinearAlgebra.rank_kernel(ExactMatrix.from_rows([], cols=3))
        assert result.rank == 0
        assert result.kernel.dim == 3

    @pytest.mark.slow
    def test_rank_matches_minor_expansion(self):
        """Test rank against the largest nonvanishing minor on random matrices."""
        rng = random.Random(7)
        for _ in range(200):
            matrix = _random_matrix(rng)
            result = ExactLinearAlgebra.rank_kernel(matrix)
            assert result.rank == _rank_by_minors(matrix)
            assert result.rank + result.kernel.dim == matrix.cols
            for v in result.kernel.basis:
                assert not any(matrix.apply(v))


class TestAffineSolve:
    """Test cases for solve_affine and inverse."""

    def test_particular_solution_sets_free_variables_to_zero(self):
        """Test x + y = 2 gives (2, 0) with a one-dimensional kernel."""
        solution = ExactLinearAlgebra.solve_affine(ExactMatrix.from_rows([[1, 1]]), [2])
        assert solution.consistent
        assert solution.particular == (2, 0)
        assert solution.kernel_dim == 1

    def test_inconsistent_system(self):
        """Test x = 1 and x = 2 together."""
        solution = ExactLinearAlgebra.solve_affine(ExactMatrix.from_rows([[1], [1]]), [1, 2])
        assert not solution.consistent
        assert solution.particular is None

    def test_rational_solution(self):
        """Test a system with a fractional solution."""
        matrix = ExactMatrix.from_rows([[2, 1], [1, 3]])
        solution = ExactLinearAlgebra.solve_affine(matrix, [1, 0])
        assert solution.particular == (Fraction(3, 5), Fraction(-1, 5))
        assert matrix.apply(solution.particular) == (1, 0)

    def test_rhs_length_mismatch(self):
        """Test a right-hand side of the wrong length."""
        with pytest.raises(DimensionMismatchError):
            ExactLinearAlgebra.solve_affine(ExactMatrix.identity(2), [1])

    def test_inverse(self):
        """Test that the inverse multiplies back to the identity."""
        matrix = ExactMatrix.from_rows([[1, 2, 0], [0, 1, 0], [Fraction(1, 2), 0, 3]])
        inverse = ExactLinearAlgebra.inverse(matrix)
        assert matrix @ inverse == ExactMatrix.identity(3)
        assert inverse @ matrix == ExactMatrix.identity(3)

    def test_singular_inverse(self):
        """Test that a singular matrix is rejected."""
        with pytest.raises(ValueError):
            ExactLinearAlgebra.inverse(ExactMatrix.from_rows([[1, 2], [2, 4]]))


class TestSubspaces:
    """Test cases for spans, membership and sums."""

    def test_span_keeps_first_independent_vectors(self):
        """Test that span drops zero and dependent vectors without rescaling."""
        space = ExactLinearAlgebra.span([(0, 0, 0), (2, 0, 2), (1, 0, 1), (0, 3, 0)], 3)
        assert space.basis == ((2, 0, 2), (0, 3, 0))

    def test_membership(self):
        """Test subspace_contains inside and outside the span."""
        space = ExactLinearAlgebra.span([(1, 1, 0), (0, 1, 1)], 3)
        assert ExactLinearAlgebra.subspace_contains(space, (1, 2, 1))
        assert not ExactLinearAlgebra.subspace_contains(space, (1, 0, 0))
        coefficients = ExactLinearAlgebra.coordinates(space, (1, 2, 1))
        assert ExactLinearAlgebra.element(space, coefficients) == (1, 2, 1)

    def test_membership_in_wrong_ambient_space(self):
        """Test that a vector of the wrong length is rejected."""
        with pytest.raises(DimensionMismatchError):
            ExactLinearAlgebra.subspace_contains(ExactLinearAlgebra.full_space(2), (1, 0, 0))

    def test_zero_space_membership(self):
        """Test membership in the zero subspace."""
        zero = SubspaceBasis(2)
        assert ExactLinearAlgebra.subspace_contains(zero, (0, 0))
        assert not ExactLinearAlgebra.subspace_contains(zero, (0, 1))

    def test_sum_and_containment(self):
        """Test sum_spaces and contains_space."""
        a = ExactLinearAlgebra.span([(1, 0, 0)], 3)
        b = ExactLinearAlgebra.span([(0, 1, 0)], 3)
        total = ExactLinearAlgebra.sum_spaces(a, b)
        assert total.dim == 2
        assert ExactLinearAlgebra.contains_space(total, a)
        assert not ExactLinearAlgebra.contains_space(a, total)

    def test_left_kernel(self):
        """Test y^T A = 0 for the left kernel vectors."""
        matrix = ExactMatrix.from_rows([[1, 2], [2, 4], [0, 1]])
        left = ExactLinearAlgebra.left_kernel(matrix)
        assert left.dim == 1
        for y in left.basis:
            assert all(dot(y, matrix.column(j)) == 0 for j in range(matrix.cols))
