"""
Tests for the command-line surface: reports, exit codes and input errors.
"""
import pytest

from tangentcone.commands.dispatch import dispatch
from tangentcone.config import TestingConfig, get_config
from tangentcone.middleware import ErrorRegistry, register_error_handlers
from tangentcone.models.request import CommandRequest
from tangentcone.schemas.algebra_schema import load_map
from tangentcone.utils.exceptions import InfeasibleError, ObstructionInfeasible, PreconditionError
from tests.fixtures.algebra_fixtures import (
    COROLLARY_ALGEBRA, F11_MINUS_ONE, NONCOMMUTATIVE_ALGEBRA, OBSTRUCTED_CIRC, PAIRING_ALGEBRA,
    SQUARES_ALGEBRA, ZERO_ALGEBRA
)
from tests.fixtures.ideal_fixtures import (
    BAD_GENERATOR_IDEAL, CUSP_IDEAL, CUSP_PARAMETERIZATION_CURVE, FLOAT_IDEAL, OFF_VARIETY_IDEAL,
    PARABOLA_IDEAL, UNKNOWN_KEYWORD_IDEAL, VERTICAL_LINE_CURVE
)


class TestConeCommands:
    """Test cases for imult, tspace, conetest, curve3 and lowestform."""

    @pytest.fixture
    def cusp_file(self, write_file):
        """Write the cusp ideal file."""
        return write_file('cusp.ideal', CUSP_IDEAL)

    def test_imult(self, cli, runner, write_file, cusp_file):
        """Test the multiplicity of the line (0, t) with the cusp."""
        curve = write_file('line.curve', VERTICAL_LINE_CURVE)
        result = runner.invoke(cli, ['imult', '--ideal', cusp_file, '--curve', curve])
        assert result.exit_code == 0
        assert 'multiplicity: 3' in result.output

    def test_imult_with_lower_truncation(self, cli, runner, write_file, cusp_file):
        """Test that --trunc 2 reports a lower bound."""
        curve = write_file('line.curve', VERTICAL_LINE_CURVE)
        result = runner.invoke(cli, ['imult', '--ideal', cusp_file, '--curve', curve, '--trunc', '2'])
        assert result.exit_code == 0
        assert 'above truncation' in result.output
        assert 'trunc: 2' in result.output

    def test_imult_singular_germ(self, cli, runner, write_file, cusp_file):
        """Test that a germ with zero velocity exits with status 2."""
        curve = write_file('cusp.curve', CUSP_PARAMETERIZATION_CURVE)
        result = runner.invoke(cli, ['imult', '--ideal', cusp_file, '--curve', curve])
        assert result.exit_code == 2
        assert 'precondition violated' in result.output

    def test_tspace(self, cli, runner, write_file):
        """Test the tangent line of the parabola."""
        ideal = write_file('parabola.ideal', PARABOLA_IDEAL)
        result = runner.invoke(cli, ['tspace', '--ideal', ideal])
        assert result.exit_code == 0
        assert 'dimension: 1' in result.output
        assert 'basis: {(1, 0)}' in result.output

    def test_tspace_off_the_variety(self, cli, runner, write_file):
        """Test a base point outside the variety."""
        ideal = write_file('off.ideal', OFF_VARIETY_IDEAL)
        result = runner.invoke(cli, ['tspace', '--ideal', ideal])
        assert result.exit_code == 2
        assert 'not on the variety' in result.output

    def test_conetest_failure(self, cli, runner, cusp_file):
        """Test that (1, 0) fails on the cusp with exit status 1."""
        result = runner.invoke(cli, ['conetest', '--ideal', cusp_file, '--v', '1,0'])
        assert result.exit_code == 1
        assert 'verdict: fail' in result.output
        assert 'witness: (0, 0, 1)' in result.output

    def test_conetest_pass(self, cli, runner, cusp_file):
        """Test that (0, 1) passes with W = 0."""
        result = runner.invoke(cli, ['conetest', '--ideal', cusp_file, '--v', '0,1'])
        assert result.exit_code == 0
        assert 'verdict: pass' in result.output
        assert 'W: {}' in result.output

    def test_curve3_failure(self, cli, runner, cusp_file):
        """Test that curve3 reports the failing cone test with status 1."""
        result = runner.invoke(cli, ['curve3', '--ideal', cusp_file, '--v', '1,0'])
        assert result.exit_code == 1
        assert 'verdict: fail' in result.output

    def test_curve3_emit_round_trip(self, cli, runner, write_file, tmp_path):
        """Test that the emitted curve file feeds back into imult."""
        ideal = write_file('parabola.ideal', PARABOLA_IDEAL)
        emitted = str(tmp_path / 'out.curve')
        result = runner.invoke(cli, ['curve3', '--ideal', ideal, '--v', '1,0', '--emit', emitted])
        assert result.exit_code == 0
        assert 'gamma: (0, 1)' in result.output
        again = runner.invoke(cli, ['imult', '--ideal', ideal, '--curve', emitted])
        assert again.exit_code == 0
        assert 'multiplicity: ≥ 9 (above truncation)' in again.output

    def test_lowestform(self, cli, runner, cusp_file):
        """Test the lowest form of the cusp."""
        result = runner.invoke(cli, ['lowestform', '--ideal', cusp_file])
        assert result.exit_code == 0
        assert 'degree: 2' in result.output
        assert 'form: x1^2' in result.output

    def test_malformed_direction(self, cli, runner, cusp_file):
        """Test that a decimal in --v is an input error."""
        result = runner.invoke(cli, ['conetest', '--ideal', cusp_file, '--v', '0.5,1'])
        assert result.exit_code == 2
        assert 'not an exact rational' in result.output


class TestSchemeCommands:
    """Test cases for scheme-gen, scheme-tangent and spaces."""

    def test_scheme_gen(self, cli, runner):
        """Test the generator counts for n = 2."""
        result = runner.invoke(cli, ['scheme-gen', '--n', '2'])
        assert result.exit_code == 0
        for line in ('variables: 8', 'commutativity: 2', 'quadrics: 16', 'generators: 18'):
            assert line in result.output

    def test_scheme_gen_unknown_kind(self, cli, runner):
        """Test an unknown scheme kind."""
        result = runner.invoke(cli, ['scheme-gen', '--n', '2', '--kind', 'lie'])
        assert result.exit_code == 2

    def test_scheme_tangent_at_zero(self, cli, runner, write_file):
        """Test dim = n^2(n+1)/2 at the zero table."""
        algebra = write_file('zero.alg', ZERO_ALGEBRA)
        result = runner.invoke(cli, ['scheme-tangent', '--algebra', algebra])
        assert result.exit_code == 0
        assert 'dimension: 6' in result.output

    def test_spaces(self, cli, runner, write_file):
        """Test the decomposition report at e1 e1 = e2."""
        algebra = write_file('pairing.alg', PAIRING_ALGEBRA)
        result = runner.invoke(cli, ['spaces', '--algebra', algebra])
        assert result.exit_code == 0
        assert 'smooth locus: yes' in result.output
        assert 'contained in tangent: yes' in result.output

    def test_spaces_emit_split_table(self, cli, runner, write_file, tmp_path):
        """Test that spaces writes the table in the basis N1 + N2 and it reloads."""
        algebra = write_file('squares.alg', SQUARES_ALGEBRA)
        emitted = tmp_path / 'split.alg'
        result = runner.invoke(cli, ['spaces', '--algebra', algebra, '--emit', str(emitted)])
        assert result.exit_code == 0
        assert f'emitted: {emitted}' in result.output
        assert emitted.read_text() == SQUARES_ALGEBRA
        again = runner.invoke(cli, ['spaces', '--algebra', str(emitted)])
        assert again.exit_code == 0
        assert 'd: 2' in again.output
        assert 'r: 1' in again.output

    def test_conflicting_products(self, cli, runner, write_file):
        """Test that e1 e2 != e2 e1 is a parse error on line 3."""
        algebra = write_file('bad.alg', NONCOMMUTATIVE_ALGEBRA)
        result = runner.invoke(cli, ['spaces', '--algebra', algebra])
        assert result.exit_code == 2
        assert f'{algebra}:3:' in result.output
        assert 'conflicting values' in result.output


class TestObstructionCommands:
    """Test cases for chain, obstruct, thm1, dimcheck and corollary."""

    def test_chain(self, cli, runner, write_file):
        """Test a solvable chain at e1 e1 = e2."""
        algebra = write_file('pairing.alg', PAIRING_ALGEBRA)
        f11 = write_file('f11.map', F11_MINUS_ONE)
        result = runner.invoke(cli, ['chain', '--algebra', algebra, '--f11', f11])
        assert result.exit_code == 0
        assert 'f12 kernel: 1' in result.output
        assert 'ob2 residual zero: yes' in result.output
        assert 'g22 symmetric: yes' in result.output

    def test_chain_emit_g22(self, cli, runner, write_file, tmp_path):
        """Test that chain writes g22 as a map file on N2."""
        algebra = write_file('pairing.alg', PAIRING_ALGEBRA)
        f11 = write_file('f11.map', F11_MINUS_ONE)
        emitted = tmp_path / 'g22.map'
        result = runner.invoke(cli, ['chain', '--algebra', algebra, '--f11', f11, '--emit', str(emitted)])
        assert result.exit_code == 0
        assert f'emitted: {emitted}' in result.output
        g22 = load_map(emitted.read_text())
        assert g22.n == 1
        assert g22.is_symmetric

    def test_obstruct_infeasible(self, cli, runner, write_file):
        """Test that an obstructed direction exits with status 1."""
        algebra = write_file('zero.alg', ZERO_ALGEBRA)
        circ = write_file('circ.map', OBSTRUCTED_CIRC)
        result = runner.invoke(cli, ['obstruct', '--algebra', algebra, '--circ', circ])
        assert result.exit_code == 1
        assert 'feasible: no' in result.output

    def test_thm1_vacuous(self, cli, runner, write_file):
        """Test the vacuous certificate at e1 e1 = e2."""
        algebra = write_file('pairing.alg', PAIRING_ALGEBRA)
        result = runner.invoke(cli, ['thm1', '--algebra', algebra])
        assert result.exit_code == 0
        assert 'verdict: true' in result.output
        assert 'certificate: vacuous' in result.output

    def test_thm1_witness_exits_zero(self, cli, runner, write_file):
        """Test that a false verdict is still a successful run."""
        algebra = write_file('zero.alg', ZERO_ALGEBRA)
        result = runner.invoke(cli, ['thm1', '--algebra', algebra])
        assert result.exit_code == 0
        assert 'verdict: false' in result.output
        assert 'witness f11: (1,1)->(1, 0)' in result.output

    def test_dimcheck(self, cli, runner):
        """Test d = 4, r = 5."""
        result = runner.invoke(cli, ['dimcheck', '--d', '4', '--r', '5'])
        assert result.exit_code == 0
        assert 'identity: 20 = 20 : identity holds' in result.output

    def test_dimcheck_inequality(self, cli, runner):
        """Test d = 4, r = 4."""
        result = runner.invoke(cli, ['dimcheck', '--d', '4', '--r', '4'])
        assert result.exit_code == 0
        assert 'identity: 24 != 20 : identity fails' in result.output

    def test_corollary(self, cli, runner, write_file):
        """Test that the paired algebra forces every functional to vanish."""
        algebra = write_file('corollary.alg', COROLLARY_ALGEBRA)
        result = runner.invoke(cli, ['corollary', '--algebra', algebra, '--pairs', '1:2,2:1,3:4,4:3'])
        assert result.exit_code == 0
        assert 'verdict: true' in result.output
        assert 'forced: f1, f2, f3, f4' in result.output
        assert 'substitution identity: yes' in result.output

    def test_corollary_bad_pairs(self, cli, runner, write_file):
        """Test a malformed --pairs value."""
        algebra = write_file('corollary.alg', COROLLARY_ALGEBRA)
        result = runner.invoke(cli, ['corollary', '--algebra', algebra, '--pairs', '1;2'])
        assert result.exit_code == 2
        assert 'malformed generator pair' in result.output


class TestInputErrors:
    """Test cases for file parsing errors and request validation."""

    @pytest.mark.parametrize('text,line', [(BAD_GENERATOR_IDEAL, 3), (UNKNOWN_KEYWORD_IDEAL, 2)])
    def test_parse_errors_name_the_line(self, cli, runner, write_file, text, line):
        """Test that parse errors carry the offending line number."""
        ideal = write_file('bad.ideal', text)
        result = runner.invoke(cli, ['tspace', '--ideal', ideal])
        assert result.exit_code == 2
        assert f'error: parse error: {ideal}:{line}:' in result.output

    def test_float_coefficient(self, cli, runner, write_file):
        """Test that a float coefficient is rejected."""
        ideal = write_file('float.ideal', FLOAT_IDEAL)
        result = runner.invoke(cli, ['tspace', '--ideal', ideal])
        assert result.exit_code == 2
        assert 'floating point' in result.output

    def test_missing_file(self, cli, runner, tmp_path):
        """Test an unreadable input path."""
        result = runner.invoke(cli, ['tspace', '--ideal', str(tmp_path / 'missing.ideal')])
        assert result.exit_code == 2
        assert 'cannot read' in result.output

    def test_missing_required_option(self, cli, runner):
        """Test click's own usage error for a missing flag."""
        result = runner.invoke(cli, ['dimcheck', '--d', '4'])
        assert result.exit_code == 2


class TestDispatch:
    """Test cases for dispatch without the click layer."""

    def test_dimcheck(self):
        """Test a successful request."""
        code, report = dispatch(CommandRequest('dimcheck', {'d': '4', 'r': '5'}), TestingConfig)
        assert code == 0
        assert 'identity: 20 = 20 : identity holds' in report

    def test_unknown_flag(self):
        """Test that unknown flags are rejected before any computation."""
        code, report = dispatch(CommandRequest('dimcheck', {'d': '4', 'r': '5', 'verbose': 'true'}))
        assert code == 2
        assert 'verbose' in report

    def test_unknown_subcommand(self):
        """Test a subcommand that does not exist."""
        code, report = dispatch(CommandRequest('frobnicate', {}))
        assert code == 2
        assert 'unknown subcommand' in report

    def test_invalid_integer(self):
        """Test a non-integer dimension."""
        code, _ = dispatch(CommandRequest('dimcheck', {'d': 'four', 'r': '5'}))
        assert code == 2

    def test_input_paths(self):
        """Test the file flags of a request."""
        request = CommandRequest('chain', {'algebra': 'a.alg', 'f11': 'f.map'})
        assert request.input_paths == ('a.alg', 'f.map')


class TestErrorRegistry:
    """Test cases for the exception to exit status mapping."""

    @pytest.fixture
    def registry(self):
        return register_error_handlers(ErrorRegistry())

    def test_obstruction_stage_is_reported(self, registry):
        """Test that an infeasible chain stage exits 1 with its stage and reason."""
        code, report = registry.handle(ObstructionInfeasible('e:co', 'no f12 solves the system'))
        assert code == 1
        assert report == 'infeasible: e:co\nreason: no f12 solves the system'

    def test_most_specific_handler_wins(self, registry):
        """Test that a subclass handler is preferred over its base class."""
        _, report = registry.handle(InfeasibleError('no solution'))
        assert report == 'infeasible: no solution'

    def test_every_violation_is_listed(self, registry):
        """Test one error line per violated precondition."""
        code, report = registry.handle(PreconditionError(['N is not associative', 'N^3 != 0']))
        assert code == 2
        assert report.splitlines() == [
            'error: precondition violated: N is not associative',
            'error: precondition violated: N^3 != 0',
        ]

    def test_unhandled_errors_propagate(self, registry):
        """Test that exceptions outside the hierarchy are re-raised."""
        with pytest.raises(ZeroDivisionError):
            registry.handle(ZeroDivisionError())


class TestConfig:
    """Test cases for configuration lookup."""

    def test_testing_config(self):
        """Test the testing configuration values."""
        config = get_config('testing')
        assert config.TESTING
        assert config.TRUNC >= 2

    def test_unknown_config(self):
        """Test an unknown configuration name."""
        with pytest.raises(KeyError):
            get_config('staging')
