import logging
from typing import Dict, Optional

import click

from tangentcone.utils.exceptions import InputError

logger = logging.getLogger(__name__)


def read_text(path: str) -> str:
    try:
        with open(path, encoding='utf-8') as handle:
            return handle.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}")


def write_text(path: str, text: str):
    try:
        with open(path, 'w', encoding='utf-8') as handle:
            handle.write(text)
    except OSError as e:
        raise InputError(f"cannot write {path}: {e.strerror or e}")
    logger.info(f"wrote {path}")


def collect_flags(**options: Optional[object]) -> Dict[str, str]:
    """Click options as the raw string flag map of a CommandRequest (unset options dropped)."""
    flags = {}
    for name, value in options.items():
        if value is None or value is False:
            continue
        flags[name] = 'true' if value is True else str(value)
    return flags


def run_request(ctx: click.Context, subcommand: str, **options):
    from tangentcone.commands.dispatch import dispatch
    from tangentcone.models.request import CommandRequest

    request = CommandRequest(subcommand=subcommand, flags=collect_flags(**options))
    code, report = dispatch(request, ctx.obj.get('config') if ctx.obj else None)
    if report:
        click.echo(report, err=code == 2)
    ctx.exit(code)
