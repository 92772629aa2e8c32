import click

from tangentcone.commands.common import read_text, run_request, write_text
from tangentcone.schemas.algebra_schema import dump_algebra, load_algebra
from tangentcone.schemas.ideal_schema import dump_ideal
from tangentcone.services.scheme_service import AlgebraSchemeService
from tangentcone.utils.constants import EXIT_CODES
from tangentcone.utils.helpers import format_report


def load_algebra_file(path):
    return load_algebra(read_text(path), source=path)


def run_scheme_gen(params, config):
    n, kind = params['n'], params['kind']
    ideal = AlgebraSchemeService.gen_scheme_ideal(n, kind)
    commutativity = n * n * (n - 1) // 2
    items = [
        ('variables', ideal.nvars),
        ('commutativity', commutativity),
        ('quadrics', len(ideal.generators) - commutativity),
        ('generators', len(ideal.generators)),
    ]
    if params.get('emit'):
        write_text(params['emit'], dump_ideal(ideal))
        items.append(('emitted', params['emit']))
    return EXIT_CODES['OK'], format_report(items)


def run_scheme_tangent(params, config):
    N = load_algebra_file(params['algebra'])
    scheme = AlgebraSchemeService.gen_scheme_ideal(N.n, params['kind'])
    tangent = AlgebraSchemeService.scheme_tangent_space(scheme, N)
    return EXIT_CODES['OK'], format_report([
        ('kind', params['kind']),
        ('dimension', tangent.dim),
    ])


def run_spaces(params, config):
    N = load_algebra_file(params['algebra'])
    invariants = AlgebraSchemeService.algebra_invariants(N)
    split = AlgebraSchemeService.build_splitting(N)
    report = AlgebraSchemeService.tangent_decomposition_report(N, split)
    items = [
        ('n', N.n),
        ('d', split.d),
        ('r', split.r),
        ('dim square', invariants.square.dim),
        ('dim annihilator', invariants.annihilator.dim),
        ('smooth locus', invariants.in_smooth_locus(split.r)),
        ('dim lsym', report.lsym_dim),
        ('dim orbit', report.orbit_dim),
        ('dim F', report.f_dim),
        ('dim lsym+orbit+F', report.sum_dim),
        ('dim tangent', report.tangent_dim),
        ('contained in tangent', report.contains),
        ('f11 projection onto', report.f11_surjective),
        ('kernels match', report.kernel_matches),
        ('decomposition with S2N1->N1 summand', report.equality_holds),
    ]
    if params.get('emit'):
        # table in the basis N1 + N2
        write_text(params['emit'], dump_algebra(split.split_map(N)))
        items.append(('emitted', params['emit']))
    return EXIT_CODES['OK'], format_report(items)


@click.command('scheme-gen')
@click.option('--n', 'n', required=True, help='Algebra dimension')
@click.option('--kind', default=None, help='assoc or nilp3')
@click.option('--emit', default=None, help='Write the ideal file here')
@click.pass_context
def scheme_gen_command(ctx, **options):
    """Generators of the structure-constant scheme."""
    run_request(ctx, 'scheme-gen', **options)


@click.command('scheme-tangent')
@click.option('--algebra', required=True, help='Algebra file')
@click.option('--kind', default=None, help='assoc or nilp3')
@click.pass_context
def scheme_tangent_command(ctx, **options):
    """Tangent space of the scheme at an algebra."""
    run_request(ctx, 'scheme-tangent', **options)


@click.command('spaces')
@click.option('--algebra', required=True, help='Algebra file')
@click.option('--emit', default=None, help='Write the table in split coordinates here')
@click.pass_context
def spaces_command(ctx, **options):
    """Invariants and the tangent-space decomposition at an algebra."""
    run_request(ctx, 'spaces', **options)


commands = [scheme_gen_command, scheme_tangent_command, spaces_command]
