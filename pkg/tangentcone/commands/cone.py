import click

from tangentcone.commands.common import read_text, run_request, write_text
from tangentcone.models.jet import CurveGerm, Jet
from tangentcone.schemas.ideal_schema import dump_curve, load_curve, load_ideal, variable_names
from tangentcone.services.cone_service import ConeCurveService
from tangentcone.utils.constants import EXIT_CODES
from tangentcone.utils.exceptions import PreconditionError
from tangentcone.utils.helpers import format_basis, format_report, format_vector


def _ideal(path):
    return load_ideal(read_text(path), source=path)


def _retruncate(germ: CurveGerm, trunc: int) -> CurveGerm:
    return CurveGerm([Jet(c.coeffs, trunc) for c in germ.components])


def run_imult(params, config):
    ideal = _ideal(params['ideal'])
    germ = load_curve(read_text(params['curve']), source=params['curve'])
    if params.get('trunc') is not None:
        germ = _retruncate(germ, params['trunc'])
    result = ConeCurveService.multiplicity(ideal, germ)
    return EXIT_CODES['OK'], format_report([
        ('multiplicity', str(result)),
        ('trunc', germ.trunc),
    ])


def run_tspace(params, config):
    space = ConeCurveService.tangent_space(_ideal(params['ideal']))
    return EXIT_CODES['OK'], format_report([
        ('dimension', space.dim),
        ('basis', format_basis(space.basis)),
    ])


def run_conetest(params, config):
    report = ConeCurveService.cone_necessary_test(_ideal(params['ideal']), params['v'])
    items = [('verdict', report.verdict), ('W', format_basis(report.W.basis))]
    if not report.passed:
        items.append(('witness', format_vector(report.witness)))
        return EXIT_CODES['INFEASIBLE'], format_report(items)
    return EXIT_CODES['OK'], format_report(items)


def run_curve3(params, config):
    ideal = _ideal(params['ideal'])
    trunc = params['trunc'] if params.get('trunc') is not None else config.TRUNC
    result = ConeCurveService.construct_curve3(ideal, params['v'], trunc)
    items = [
        ('gamma', format_vector(result.gamma)),
        ('alternatives', result.kernel_dim),
        ('curve', '(' + ', '.join(c.to_text() for c in result.curve.components) + ')'),
        ('contact', str(result.multiplicity)),
    ]
    if params.get('emit'):
        write_text(params['emit'], dump_curve(result.curve))
        items.append(('emitted', params['emit']))
    return EXIT_CODES['OK'], format_report(items)


def run_lowestform(params, config):
    ideal = _ideal(params['ideal'])
    if len(ideal.generators) != 1:
        raise PreconditionError(f"lowestform needs a hypersurface (one generator), got {len(ideal.generators)}")
    form = ConeCurveService.hypersurface_lowest_form(ideal.at_origin()[0])
    return EXIT_CODES['OK'], format_report([
        ('degree', form.degree),
        ('form', form.to_text(variable_names(ideal.nvars))),
    ])


@click.command('imult')
@click.option('--ideal', required=True, help='Ideal file')
@click.option('--curve', required=True, help='Curve file')
@click.option('--trunc', default=None, help='Truncation order D')
@click.pass_context
def imult_command(ctx, **options):
    """Intersection multiplicity of a curve germ with the ideal."""
    run_request(ctx, 'imult', **options)


@click.command('tspace')
@click.option('--ideal', required=True, help='Ideal file')
@click.pass_context
def tspace_command(ctx, **options):
    """Tangent space at the base point."""
    run_request(ctx, 'tspace', **options)


@click.command('conetest')
@click.option('--ideal', required=True, help='Ideal file')
@click.option('--v', 'v', required=True, help='Direction, comma-separated rationals')
@click.pass_context
def conetest_command(ctx, **options):
    """Necessary tangent cone test for a direction."""
    run_request(ctx, 'conetest', **options)


@click.command('curve3')
@click.option('--ideal', required=True, help='Ideal file')
@click.option('--v', 'v', required=True, help='Direction, comma-separated rationals')
@click.option('--trunc', default=None, help='Truncation order D')
@click.option('--emit', default=None, help='Write the curve file here')
@click.pass_context
def curve3_command(ctx, **options):
    """Curve p + t v + t^2 gamma with contact at least 3."""
    run_request(ctx, 'curve3', **options)


@click.command('lowestform')
@click.option('--ideal', required=True, help='Ideal file with one generator')
@click.pass_context
def lowestform_command(ctx, **options):
    """Lowest-degree form of a hypersurface at its base point."""
    run_request(ctx, 'lowestform', **options)


commands = [imult_command, tspace_command, conetest_command, curve3_command, lowestform_command]
