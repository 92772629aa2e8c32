"""
Tests for structure-constant schemes, invariants and tangent-space pieces.
"""
import random

import pytest

from tangentcone.models.algebra import AlgebraPoint, BilinearMap, tensor_index
from tangentcone.models.linalg import ExactMatrix
from tangentcone.schemas.algebra_schema import dump_algebra, dump_map, load_algebra, load_map
from tangentcone.services.linalg_service import ExactLinearAlgebra
from tangentcone.services.polyring_service import PolyRingService
from tangentcone.services.scheme_service import AlgebraSchemeService
from tangentcone.utils.exceptions import DimensionMismatchError, PreconditionError
from tests.test_linalg import _rank_by_minors


class TestSchemeIdeal:
    """Test cases for gen_scheme_ideal."""

    def test_generator_counts(self):
        """Test n = 2: 8 variables, 2 commutativity generators and 16 quadrics."""
        ideal = AlgebraSchemeService.gen_scheme_ideal(2, 'assoc')
        assert ideal.nvars == 8
        assert len(ideal.generators) == 2 + 16

    def test_commutativity_generators_come_first(self):
        """Test that the first generator is c_12^1 - c_21^1."""
        ideal = AlgebraSchemeService.gen_scheme_ideal(2, 'nilp3')
        first = ideal.generators[0]
        assert first.linear_coefficients()[tensor_index(0, 1, 0, 2)] == 1
        assert first.linear_coefficients()[tensor_index(1, 0, 0, 2)] == -1

    def test_one_dimensional_schemes(self):
        """Test n = 1: associativity is trivial, nilpotency is c^2 = 0."""
        assoc = AlgebraSchemeService.gen_scheme_ideal(1, 'assoc')
        nilp = AlgebraSchemeService.gen_scheme_ideal(1, 'nilp3')
        assert [g.is_zero for g in assoc.generators] == [True]
        assert nilp.generators[0].degree == 2

    def test_algebra_points_lie_on_the_scheme(self, pairing_algebra):
        """Test that an associative table satisfies every generator."""
        ideal = AlgebraSchemeService.gen_scheme_ideal(2, 'assoc')
        assert not any(g.evaluate(pairing_algebra.coefficients) for g in ideal.generators)

    @pytest.mark.parametrize('n,kind', [(0, 'assoc'), (2, 'lie')])
    def test_invalid_requests(self, n, kind):
        """Test n < 1 and an unknown kind."""
        with pytest.raises(PreconditionError):
            AlgebraSchemeService.gen_scheme_ideal(n, kind)


class TestInvariants:
    """Test cases for N^2, Ann and the splitting."""

    def test_zero_algebra(self, zero_algebra):
        """Test that the zero table has N^2 = 0 and Ann = N."""
        invariants = AlgebraSchemeService.algebra_invariants(zero_algebra)
        assert invariants.square.dim == 0
        assert invariants.annihilator.dim == 2
        assert invariants.in_anr(0)

    def test_pairing_algebra(self, pairing_algebra):
        """Test e1 e1 = e2: N^2 = Ann = span(e2)."""
        invariants = AlgebraSchemeService.algebra_invariants(pairing_algebra)
        assert invariants.square.basis == ((0, 1),)
        assert invariants.annihilator.basis == ((0, 1),)
        assert invariants.in_smooth_locus(1)

    def test_splitting_of_corollary_algebra(self, corollary_algebra, split_of):
        """Test that the splitting is the identity when N^2 is spanned by the last vectors."""
        split = split_of(corollary_algebra)
        assert (split.d, split.r) == (4, 3)
        assert split.P == ExactMatrix.identity(7)
        assert split.Q == ExactMatrix.identity(7)

    def test_splitting_round_trip(self, squares_algebra, split_of):
        """Test that split_map and unsplit_map are inverse."""
        split = split_of(squares_algebra)
        assert split.unsplit_map(split.split_map(squares_algebra)) == squares_algebra

    def test_non_commutative_table_rejected(self):
        """Test that AlgebraPoint refuses a non-commutative table."""
        m = BilinearMap.from_products(2, {(0, 1): (0, 1)}, symmetric=False)
        with pytest.raises(PreconditionError):
            AlgebraPoint.from_map(m)


class TestSchemeTangentSpace:
    """Test cases for scheme_tangent_space and its pieces."""

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_tangent_space_at_zero(self, n):
        """Test that every symmetric tensor is tangent at the zero table."""
        scheme = AlgebraSchemeService.gen_scheme_ideal(n, 'assoc')
        tangent = AlgebraSchemeService.scheme_tangent_space(scheme, BilinearMap.zero(n))
        assert tangent.dim == n * n * (n + 1) // 2

    def test_point_off_the_scheme(self):
        """Test a non-nilpotent point against the nilp3 scheme."""
        scheme = AlgebraSchemeService.gen_scheme_ideal(1, 'nilp3')
        with pytest.raises(PreconditionError):
            AlgebraSchemeService.scheme_tangent_space(scheme, BilinearMap(1, [1]))

    def test_scheme_of_wrong_size(self, pairing_algebra):
        """Test a scheme for n = 3 at a point with n = 2."""
        scheme = AlgebraSchemeService.gen_scheme_ideal(3, 'assoc')
        with pytest.raises(DimensionMismatchError):
            AlgebraSchemeService.scheme_tangent_space(scheme, pairing_algebra)

    def test_coboundary_of_identity(self, pairing_algebra):
        """Test that phi = id gives x o y = xy."""
        assert AlgebraSchemeService.coboundary(pairing_algebra, ExactMatrix.identity(2)) == pairing_algebra

    def test_orbit_of_zero_is_trivial(self, zero_algebra):
        """Test that the zero table is a fixed point."""
        assert AlgebraSchemeService.orbit_tangent(zero_algebra).is_zero

    def test_lsym_dimension(self, squares_algebra, split_of):
        """Test dim L(S^2 N1, N2) = r d(d+1)/2 for d = 2, r = 1."""
        split = split_of(squares_algebra)
        assert AlgebraSchemeService.lsym_target_space(split).dim == 3

    def test_functional_maps(self, squares_algebra, split_of):
        """Test that F has one map per functional on N1."""
        split = split_of(squares_algebra)
        assert AlgebraSchemeService.f_space(squares_algebra, split).dim == split.d

    @pytest.mark.parametrize('n', [2, 3])
    def test_known_pieces_are_tangent(self, n):
        """Test lsym + orbit + F inside the tangent space at a generic point."""
        N = AlgebraSchemeService.sample_generic_point(n, 1, random.Random(n))
        report = AlgebraSchemeService.tangent_decomposition_report(N)
        assert report.contains
        assert report.sum_dim <= report.tangent_dim

    def test_known_pieces_for_squares_algebra(self, squares_algebra):
        """Test each piece of the decomposition at e1 e1 = e2 e2 = e3."""
        tangent = AlgebraSchemeService.scheme_tangent_space(
            AlgebraSchemeService.gen_scheme_ideal(3, 'assoc'), squares_algebra)
        split = AlgebraSchemeService.build_splitting(squares_algebra)
        for piece in (AlgebraSchemeService.lsym_target_space(split),
                      AlgebraSchemeService.orbit_tangent(squares_algebra),
                      AlgebraSchemeService.f_space(squares_algebra, split)):
            assert ExactLinearAlgebra.contains_space(tangent, piece)


class TestGenericPoints:
    """Test cases for sample_generic_point."""

    def test_sampled_point_is_in_the_smooth_locus(self):
        """Test the invariants of a sampled point with n = 5, r = 2."""
        N = AlgebraSchemeService.sample_generic_point(5, 2, random.Random(3))
        invariants = AlgebraSchemeService.algebra_invariants(N)
        assert invariants.in_smooth_locus(2)
        assert N.is_nilpotent3
        assert N.is_associative

    def test_sampling_is_reproducible(self):
        """Test that equal seeds give equal points."""
        a = AlgebraSchemeService.sample_generic_point(4, 1, random.Random(9))
        b = AlgebraSchemeService.sample_generic_point(4, 1, random.Random(9))
        assert a == b

    @pytest.mark.parametrize('n,r', [(2, 0), (2, 2), (3, 2)])
    def test_impossible_shapes(self, n, r):
        """Test (n, r) pairs with no algebra of that shape."""
        with pytest.raises(PreconditionError):
            AlgebraSchemeService.sample_generic_point(n, r)


def _random_table(rng, n):
    """Sparse table; about half of them are not commutative."""
    symmetric = rng.random() < 0.5
    pairs = [(i, j) for i in range(n) for j in range(i if symmetric else 0, n)]
    products = {(i, j): [rng.choice([0, 0, 0, 0, 1, -1]) for _ in range(n)] for i, j in pairs}
    return BilinearMap.from_products(n, products, symmetric=symmetric)


def _symmetric_jacobian(scheme, point, n):
    """Gradients of the generators restricted to the coordinates c_ij^k with i <= j."""
    columns = [(i, j, k) for i in range(n) for j in range(i, n) for k in range(n)]
    rows = set()
    for g in scheme.generators:
        grad = PolyRingService.gradient(g, point)
        row = tuple(grad[tensor_index(i, j, k, n)] + (grad[tensor_index(j, i, k, n)] if i != j else 0)
                    for i, j, k in columns)
        if any(row):
            rows.add(row)
    return ExactMatrix.from_rows(sorted(rows), cols=len(columns))


class TestSchemeAgainstDirectChecks:
    """Test cases comparing the scheme equations with direct table checks."""

    @pytest.mark.parametrize('kind', ['assoc', 'nilp3'])
    def test_generators_vanish_exactly_on_the_scheme(self, kind):
        """Test that the generators vanish iff the table is commutative and associative (or nilpotent)."""
        rng = random.Random(41)
        outcomes = set()
        for n in (1, 2, 3):
            scheme = AlgebraSchemeService.gen_scheme_ideal(n, kind)
            for attempt in range(30):
                if n > 1 and attempt % 5 == 0:
                    m = AlgebraSchemeService.sample_generic_point(n, 1, rng)
                else:
                    m = _random_table(rng, n)
                vanish = not any(g.evaluate(m.coefficients) for g in scheme.generators)
                direct = m.is_associative if kind == 'assoc' else m.is_nilpotent3
                assert vanish == (m.is_symmetric and direct)
                outcomes.add(vanish)
        assert outcomes == {True, False}

    def test_tangent_space_of_pairing_algebra(self, pairing_algebra):
        """Test dim 4 at e1 e1 = e2 against the rank of the Jacobian computed from minors."""
        scheme = AlgebraSchemeService.gen_scheme_ideal(2, 'assoc')
        tangent = AlgebraSchemeService.scheme_tangent_space(scheme, pairing_algebra)
        jacobian = _symmetric_jacobian(scheme, pairing_algebra.coefficients, 2)
        assert tangent.dim == jacobian.cols - _rank_by_minors(jacobian)
        assert tangent.dim == 4

    @pytest.mark.slow
    @pytest.mark.parametrize('n', [2, 3])
    def test_known_pieces_are_tangent_at_sampled_points(self, n):
        """Test lsym + orbit + F inside the tangent space at 20 sampled points."""
        rng = random.Random(50 + n)
        for _ in range(20):
            N = AlgebraSchemeService.sample_generic_point(n, 1, rng)
            report = AlgebraSchemeService.tangent_decomposition_report(N)
            assert report.contains
            assert report.sum_dim <= report.tangent_dim


class TestFileWriters:
    """Test cases for dump_algebra and dump_map."""

    def test_dumped_algebra_reloads(self, corollary_algebra):
        """Test that a written table parses back to the same algebra."""
        assert load_algebra(dump_algebra(corollary_algebra)) == corollary_algebra

    def test_dump_map_lists_nonzero_products(self, obstructed_circ):
        """Test the exact text of a written map."""
        text = dump_map(obstructed_circ)
        assert text == 'map 2\nprod 1 1 : 0 1\nprod 2 2 : 1 0\n'
        assert load_map(text) == obstructed_circ

    def test_zero_algebra_has_header_only(self, zero_algebra):
        """Test that a zero table writes just its dimension."""
        assert dump_algebra(zero_algebra) == 'dim 2\n'
