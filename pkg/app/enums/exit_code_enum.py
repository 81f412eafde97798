from enum import IntEnum

class ExitCodeEnum(IntEnum):
    OK = 0
    FAILED = 1
    USAGE = 2
    INCONCLUSIVE = 3
