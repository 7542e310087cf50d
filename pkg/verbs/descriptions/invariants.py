from typing import Final

# fmt: off
CMD_INVARIANTS_DESC: Final[str] = "Print e, L, n, c, S and C together with an endoscopic decomposition."
CMD_CLASSIFY_DESC: Final[str] = "Report whether a multisegment is simple, a ladder, symmetric or of Arthur type."
