from enum import Enum

class RelationPropertyEnum(str, Enum):
    LEFT_STAR_SYMMETRIC = "left-star-symmetric"
    STAR_SYMMETRIC = "star-symmetric"
    REFLEXIVE = "reflexive"
    SYMMETRIC = "symmetric"
    TRANSITIVE = "transitive"
    COMPATIBLE = "compatible"
