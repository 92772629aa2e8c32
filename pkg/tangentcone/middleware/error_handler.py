import logging

from marshmallow import ValidationError

from tangentcone.utils.constants import EXIT_CODES
from tangentcone.utils.exceptions import (
    ConeTestFailure, InfeasibleError, InputError, ObstructionInfeasible, ParseError, PreconditionError
)
from tangentcone.utils.helpers import format_basis, format_report, format_vector

logger = logging.getLogger(__name__)


def _flatten(messages, prefix=''):
    if isinstance(messages, dict):
        out = []
        for key in sorted(messages, key=str):
            name = f"{prefix}.{key}" if prefix else str(key)
            out.extend(_flatten(messages[key], name))
        return out
    if isinstance(messages, list):
        return [f"{prefix}: {m}" if prefix else str(m) for m in messages]
    return [f"{prefix}: {messages}" if prefix else str(messages)]


class ErrorRegistry:
    """Maps exception classes to (exit status, report) handlers, most specific class first."""

    def __init__(self):
        self._handlers = []

    def errorhandler(self, exc_class):
        def decorator(fn):
            self._handlers.append((exc_class, fn))
            return fn
        return decorator

    def handle(self, error):
        for exc_class in sorted((c for c, _ in self._handlers), key=lambda c: -len(c.__mro__)):
            if isinstance(error, exc_class):
                handler = dict(self._handlers)[exc_class]
                return handler(error)
        raise error


def register_error_handlers(registry):
    @registry.errorhandler(ValidationError)
    def handle_validation(e):
        return EXIT_CODES['INPUT_ERROR'], '\n'.join(f"error: {m}" for m in _flatten(e.messages))

    @registry.errorhandler(ParseError)
    def handle_parse(e):
        return EXIT_CODES['INPUT_ERROR'], f"error: parse error: {e}"

    @registry.errorhandler(PreconditionError)
    def handle_precondition(e):
        return EXIT_CODES['INPUT_ERROR'], '\n'.join(f"error: precondition violated: {v}" for v in e.violations)

    @registry.errorhandler(InputError)
    def handle_input(e):
        return EXIT_CODES['INPUT_ERROR'], f"error: {e}"

    @registry.errorhandler(ConeTestFailure)
    def handle_cone_failure(e):
        logger.info(f"cone test failure: {e}")
        return EXIT_CODES['INFEASIBLE'], format_report([
            ('verdict', 'fail'),
            ('W', format_basis(e.report.W.basis)),
            ('witness', format_vector(e.report.witness)),
        ])

    @registry.errorhandler(ObstructionInfeasible)
    def handle_obstruction(e):
        logger.info(f"obstruction chain stopped at {e.stage}")
        items = [('infeasible', e.stage)]
        if e.detail:
            items.append(('reason', e.detail))
        return EXIT_CODES['INFEASIBLE'], format_report(items)

    @registry.errorhandler(InfeasibleError)
    def handle_infeasible(e):
        return EXIT_CODES['INFEASIBLE'], f"infeasible: {e}"

    return registry
