from enum import Enum

class CommandEnum(str, Enum):
    AUDIT = "audit"
    CHECK_RELATION = "check-relation"
    CHECK_IDENTITIES = "check-identities"
    FIND_TERMS = "find-terms"
    CONGRUENCES = "congruences"
