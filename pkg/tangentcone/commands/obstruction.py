import click

from tangentcone.commands.common import read_text, run_request, write_text
from tangentcone.commands.scheme import load_algebra_file
from tangentcone.models.algebra import BilinearMap, BlockMap, ChainInfeasible
from tangentcone.schemas.algebra_schema import dump_map, load_map
from tangentcone.services.obstruction_service import ObstructionService
from tangentcone.services.scheme_service import AlgebraSchemeService
from tangentcone.services.symbolic_service import SymbolicService
from tangentcone.utils.constants import EXIT_CODES
from tangentcone.utils.exceptions import DimensionMismatchError, ObstructionInfeasible, PreconditionError
from tangentcone.utils.helpers import format_report, format_scalar


def _map(path):
    return load_map(read_text(path), source=path)


def _block_text(block: BlockMap) -> str:
    parts = []
    for a in range(block.left):
        for b in range(a if block.left == block.right else 0, block.right):
            value = block.basis_value(a, b)
            if any(value):
                parts.append(f"({a + 1},{b + 1})->(" + ', '.join(format_scalar(c) for c in value) + ')')
    return ' '.join(parts) or '0'


def run_chain(params, config):
    N = load_algebra_file(params['algebra'])
    split = AlgebraSchemeService.build_splitting(N)
    m = _map(params['f11'])
    if m.n != split.d:
        raise DimensionMismatchError(f"f11 map is on K^{m.n}, N1 has dimension {split.d}")
    if not m.is_symmetric:
        raise PreconditionError("f11 must be symmetric")
    f11 = BlockMap.from_function(split.d, split.d, split.d, m.basis_product)
    chain = ObstructionService.solve_chain(N, split, f11)
    if isinstance(chain, ChainInfeasible):
        raise ObstructionInfeasible(chain.stage, chain.detail)
    ob2 = ObstructionService.check_ob2(N, split, chain)
    g22_symmetric = ObstructionService.g22_commutativity_check(N, split, chain)
    items = [
        ('stages', 'e:co e:ob1 e:ob2 g22 solved'),
        ('f12 kernel', chain.f12_kernel_dim),
        ('f12', _block_text(chain.f12)),
        ('g12', _block_text(chain.g12)),
        ('g22', _block_text(chain.g22)),
        ('ob2 residual zero', not any(ob2)),
        ('g22 symmetric', g22_symmetric),
    ]
    if params.get('emit'):
        if not g22_symmetric:
            raise PreconditionError("g22 is not symmetric and cannot be written as a map file")
        g22 = BilinearMap.from_function(split.r, chain.g22.basis_value)
        write_text(params['emit'], dump_map(g22))
        items.append(('emitted', params['emit']))
    return EXIT_CODES['OK'], format_report(items)


def run_obstruct(params, config):
    N = load_algebra_file(params['algebra'])
    circ = _map(params['circ'])
    result = ObstructionService.quadratic_obstruction(N, circ)
    items = [('feasible', result.feasible)]
    if result.feasible:
        items.append(('star kernel', result.kernel_dim))
    if params.get('linearized'):
        split = AlgebraSchemeService.build_splitting(N)
        constraints = ObstructionService.linearized_system(N, circ, split)
        solvable = sum(1 for c in constraints if ObstructionService.solve_constraint(c).consistent)
        items.append(('linearized constraints', len(constraints)))
        items.append(('linearized solvable', solvable))
    return (EXIT_CODES['OK'] if result.feasible else EXIT_CODES['INFEASIBLE']), format_report(items)


def run_thm1(params, config):
    N = load_algebra_file(params['algebra'])
    split = AlgebraSchemeService.build_splitting(N)
    limit = params['witness_limit'] if params.get('witness_limit') is not None else config.WITNESS_LIMIT
    report = ObstructionService.thm1_test(N, split, witness_limit=limit)
    items = [
        ('verdict', 'true' if report.verdict else 'false'),
        ('certificate', report.certificate),
        ('dim ker mu', report.kernel_dim),
        ('dim hull', report.hull_dim),
        ('restricted rank', report.restricted_rank),
        ('witnesses checked', report.checked),
    ]
    if report.witness is not None:
        items.append(('witness f11', _block_text(report.witness)))
    return EXIT_CODES['OK'], format_report(items)


def run_dimcheck(params, config):
    d, r = params['d'], params['r']
    report = ObstructionService.dim_identity_check(d, r)
    relation = '=' if report.equal else '!='
    verdict = 'identity holds' if report.equal else 'identity fails'
    items = [
        ('lhs', report.lhs),
        ('rhs', report.rhs),
        ('identity', f"{report.lhs} {relation} {report.rhs} : {verdict}"),
    ]
    if d >= 1 and r >= 1:
        items.append(('regimes', '; '.join(ObstructionService.known_regime(d + r, r))))
    return EXIT_CODES['OK'], format_report(items)


def run_corollary(params, config):
    N = load_algebra_file(params['algebra'])
    split = AlgebraSchemeService.build_splitting(N)
    report = ObstructionService.corollary_report(N, split, params['pairs'])
    items = [
        ('verdict', 'true' if report.holds else 'false'),
        ('substitution identity', SymbolicService.corollary_substitution()['matches']),
        ('forced', ', '.join(f"f{a}" for a in report.forced) or 'none'),
    ]
    items += [('equation', eq) for eq in report.equations]
    return EXIT_CODES['OK'], format_report(items)


@click.command('chain')
@click.option('--algebra', required=True, help='Algebra file')
@click.option('--f11', required=True, help='Map file (header "map d") in split N1 coordinates')
@click.option('--emit', default=None, help='Write g22 as a map file here')
@click.pass_context
def chain_command(ctx, **options):
    """Solve the obstruction chain for a given f11."""
    run_request(ctx, 'chain', **options)


@click.command('obstruct')
@click.option('--algebra', required=True, help='Algebra file')
@click.option('--circ', required=True, help='Map file of the first-order direction')
@click.option('--linearized', is_flag=True, default=False, help='Also solve the linearized family')
@click.pass_context
def obstruct_command(ctx, **options):
    """Second-order obstruction of a first-order direction."""
    run_request(ctx, 'obstruct', **options)


@click.command('thm1')
@click.option('--algebra', required=True, help='Algebra file')
@click.option('--witness-limit', 'witness_limit', default=None, help='Hull elements to check')
@click.pass_context
def thm1_command(ctx, **options):
    """Does every admissible f11 vanish on ker mu?"""
    run_request(ctx, 'thm1', **options)


@click.command('dimcheck')
@click.option('--d', 'd', required=True, help='dim N1')
@click.option('--r', 'r', required=True, help='dim N2')
@click.pass_context
def dimcheck_command(ctx, **options):
    """Dimension count d(d(d+1)/2 - r) against d(d+1)(d+2)/6."""
    run_request(ctx, 'dimcheck', **options)


@click.command('corollary')
@click.option('--algebra', required=True, help='Algebra file')
@click.option('--pairs', required=True, help='Generator pairs u:v,...')
@click.pass_context
def corollary_command(ctx, **options):
    """Force f = 0 from the paired generators."""
    run_request(ctx, 'corollary', **options)


commands = [chain_command, obstruct_command, thm1_command, dimcheck_command, corollary_command]
