from enum import Enum


class Algorithm(Enum):
    MW = "mw"
    FLOW = "flow"
    BOTH = "both"
