import logging

from rich.console import Console
from rich.logging import RichHandler

# reports go to stdout, so diagnostics must stay on stderr
console = Console(stderr=True)


def init_logging(config):
    """Attach a single rich handler to the package logger at the configured level."""
    logger = logging.getLogger('tangentcone')
    level = getattr(logging, str(config.LOG_LEVEL).upper(), logging.WARNING)
    logger.setLevel(level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=console, show_time=False, show_path=False, markup=False)
        handler.setFormatter(logging.Formatter('%(name)s: %(message)s'))
        logger.addHandler(handler)
    logger.propagate = False
    return logger
