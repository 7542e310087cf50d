from typing import Final

# fmt: off
CMD_DUAL_DESC: Final[str] = "Compute the Zelevinskii dual of a multisegment."
CMD_DUAL_DOT: Final[str] = "Write the precedence graph used by the flow engine to this DOT file."

CMD_RANKS_DESC: Final[str] = "Print the rank triangle of a multisegment."
CMD_RANKS_DUAL: Final[str] = "Print the rank triangle of the dual instead."
