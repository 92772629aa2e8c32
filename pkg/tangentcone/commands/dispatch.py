import logging
from typing import Tuple

from marshmallow import ValidationError

from tangentcone.commands.cone import run_conetest, run_curve3, run_imult, run_lowestform, run_tspace
from tangentcone.commands.obstruction import run_chain, run_corollary, run_dimcheck, run_obstruct, run_thm1
from tangentcone.commands.scheme import run_scheme_gen, run_scheme_tangent, run_spaces
from tangentcone.config import Config
from tangentcone.middleware.error_handler import ErrorRegistry, register_error_handlers
from tangentcone.models.request import CommandRequest
from tangentcone.schemas.request_schema import REQUEST_SCHEMAS
from tangentcone.utils.exceptions import InputError, TangentConeError

logger = logging.getLogger(__name__)

HANDLERS = {
    'imult': run_imult,
    'tspace': run_tspace,
    'conetest': run_conetest,
    'curve3': run_curve3,
    'lowestform': run_lowestform,
    'scheme-gen': run_scheme_gen,
    'scheme-tangent': run_scheme_tangent,
    'spaces': run_spaces,
    'chain': run_chain,
    'obstruct': run_obstruct,
    'thm1': run_thm1,
    'dimcheck': run_dimcheck,
    'corollary': run_corollary,
}

errors = register_error_handlers(ErrorRegistry())


def dispatch(request: CommandRequest, config=None) -> Tuple[int, str]:
    """
    Validate a request's flags and run its subcommand.

    Args:
        request: Subcommand name and raw flag strings
        config: Configuration class (defaults to Config)

    Returns:
        (exit status, report text): 0 on success, 1 on mathematical
        infeasibility, 2 on input errors
    """
    config = config or Config
    try:
        if request.subcommand not in HANDLERS:
            raise InputError(f"unknown subcommand {request.subcommand!r}")
        params = REQUEST_SCHEMAS[request.subcommand]().load(dict(request.flags))
        logger.debug(f"dispatch {request.subcommand} with {sorted(params)}")
        return HANDLERS[request.subcommand](params, config)
    except (TangentConeError, ValidationError) as e:
        return errors.handle(e)
