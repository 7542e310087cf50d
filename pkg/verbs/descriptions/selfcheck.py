from typing import Final

# fmt: off
CMD_SELFCHECK_DESC: Final[str] = "Run every invariant suite over small exhaustive classes and a seeded random corpus."
CMD_SELFCHECK_ARTHUR_REACH: Final[str] = "Arthur-type sweeps use supports up to this value around zero, e.g. 2 or 3/2."
CMD_SELFCHECK_RANDOM_COUNT: Final[str] = "Size of the random corpus."
