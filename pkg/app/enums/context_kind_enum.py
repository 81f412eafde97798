from enum import Enum

class ContextKindEnum(str, Enum):
    TOTAL = "total"
    POINTED = "pointed"
    PROTO = "proto"
