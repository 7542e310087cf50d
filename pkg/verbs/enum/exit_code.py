from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    PROPERTY_VIOLATION = 2
    CAP_EXCEEDED = 3
