from enum import Enum

class OutputModeEnum(str, Enum):
    HUMAN = "human"
    MACHINE = "machine"
