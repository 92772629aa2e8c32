import click

from .config import get_config
from .extensions import init_logging


def create_app(config_name=None):
    """Create and configure the command-line application"""
    config = get_config(config_name)

    @click.group(name='tangentcone')
    @click.pass_context
    def cli(ctx):
        """Exact tangent cone, curve and algebra-scheme computations."""
        ctx.ensure_object(dict)
        ctx.obj.setdefault('config', config)

    init_logging(config)

    from .commands import register_commands
    register_commands(cli)

    return cli
