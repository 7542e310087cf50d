import os
from dataclasses import dataclass
from typing import Final, Union

from multiseg.errors import ConfigurationError

DEFAULT_MAX_CONTENT: Final[int] = 14
DEFAULT_PARTITION_CAP: Final[int] = 10
DEFAULT_RANDOM_COUNT: Final[int] = 200
DEFAULT_SEED: Final[int] = 0
DEFAULT_LOG_LEVEL: Final[str] = "WARNING"


@dataclass(frozen=True)
class Settings:
    max_content: int
    partition_cap: int
    random_count: int
    seed: int
    log_level: str


def _int_setting(key: str, default: int) -> int:
    raw: Union[str, None] = os.getenv(key)
    if raw is None or raw.strip() == "":
        return default

    try:
        value: int = int(raw)
    except ValueError:
        raise ConfigurationError(f"{key} must be an integer, got {raw!r}") from None

    if value < 0:
        raise ConfigurationError(f"{key} must not be negative, got {value}")
    return value


def get_settings() -> Settings:
    """Read settings from the environment (call `load_dotenv()` first to include `.env`)."""
    return Settings(
        max_content=_int_setting("MULTISEG_MAX_CONTENT", DEFAULT_MAX_CONTENT),
        partition_cap=_int_setting("MULTISEG_PARTITION_CAP", DEFAULT_PARTITION_CAP),
        random_count=_int_setting("MULTISEG_RANDOM_COUNT", DEFAULT_RANDOM_COUNT),
        seed=_int_setting("MULTISEG_SEED", DEFAULT_SEED),
        log_level=os.getenv("MULTISEG_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper(),
    )
