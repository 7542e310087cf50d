from typing import Final

# fmt: off
CMD_ABOVE_DESC: Final[str] = "List every multisegment of the same weight lying above the given one."
CMD_ENUMERATE_DESC: Final[str] = "List every multisegment of a weight such as '{1:2, 2:1}'."
CMD_ENUMERATE_WEIGHT: Final[str] = "The weight, written as {value:count, ...}."

CMD_RIGID_DESC: Final[str] = "Check that nothing above a multisegment also has its dual above the dual."
CMD_RIGID_MULTISEGMENT: Final[str] = "The multisegment to check; leave out together with --family to sweep."
CMD_RIGID_FAMILY: Final[str] = "Sweep a whole family inside --support instead of one multisegment."
CMD_RIGID_METHOD: Final[str] = "Draw candidates from the full upper set or from the action closure."
CMD_RIGID_TIMING: Final[str] = "Add the wall time to the sweep summary."
