from typing import Final

# fmt: off
PROG_DESC: Final[str] = "Exact duals, rank triangles and rigidity checks for multisegments."

ARG_MULTISEGMENT: Final[str] = "A multisegment such as '{[1,3],[2],[5/2,7/2]}', or @path to read it from a file."
ARG_ALG: Final[str] = "Which dual engine to run; 'both' fails with exit 2 when they disagree."
ARG_TRACE: Final[str] = "Also print the Moeglin-Waldspurger iterations."
ARG_FORMAT: Final[str] = "Print plain text or one JSON document per line."
ARG_MAX_CONTENT: Final[str] = "Cap on the total content of any enumerated weight class."
ARG_SUPPORT: Final[str] = "Value range written as a..b, e.g. 1..5 or -7/2..7/2."
ARG_SEED: Final[str] = "Seed of the random corpus."
