from enum import Enum

class TermKindEnum(str, Enum):
    MALTSEV = "maltsev"
    E_SUBTRACTIVE = "e-subtractive"
