import logging
import sys

from multiseg.errors import ConfigurationError

LOG_FORMAT: str = "[{asctime}] [{levelname:<8}] {name}: {message}"
DATE_FORMAT: str = "%Y-%m-%d %H:%M:%S"


def setup_logging(level_name: str) -> None:
    """Send every log record to stderr so stdout only carries command output."""
    level = logging.getLevelName(level_name)
    if not isinstance(level, int):
        raise ConfigurationError(f"MULTISEG_LOG_LEVEL {level_name!r} is not a log level")

    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        datefmt=DATE_FORMAT,
        style="{",
        stream=sys.stderr,
        force=True,
    )
