import logging

from rich.console import Console
from rich.logging import RichHandler

from gkm_core.settings import Settings, get_settings


def configure_logging(level: str | None = None, settings: Settings | None = None):
    """Installs a rich handler on the `gkm_core` logger. Only the CLI calls this;
    importing the library leaves logging untouched."""

    settings = settings or get_settings()
    logger = logging.getLogger("gkm_core")
    logger.setLevel(level or settings.LOG_LEVEL)

    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            markup=False,
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
    logger.propagate = False
    return logger
