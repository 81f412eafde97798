from functools import cached_property
from typing import Iterable, List, Optional, Tuple

import numpy as np

from app.models.algebra_model import FiniteAlgebra
from app.utils.encoding import frozen
from app.utils.exceptions import RelationError

Pair = Tuple[int, int]


class Relation:
    """A relation from `source` to `target`, stored as a boolean matrix.

    `compatible` is a certificate: when not supplied it is derived on first
    access by checking closure of the pair set under every operation.
    """

    SHAPE_MISMATCH = "Pair matrix has shape {}, expected {}."
    PAIR_OUT_OF_RANGE = "Pair ({}, {}) lies outside {} x {}."

    def __init__(
        self,
        source: FiniteAlgebra,
        target: FiniteAlgebra,
        matrix: np.ndarray,
        compatible: Optional[bool] = None
    ):
        matrix = np.asarray(matrix, dtype=bool)
        expected = (source.size, target.size)
        if matrix.shape != expected:
            raise RelationError(self.SHAPE_MISMATCH.format(matrix.shape, expected))
        self.source = source
        self.target = target
        self.matrix = frozen(matrix, dtype=bool)
        if compatible is not None:
            self.__dict__["compatible"] = compatible

    @classmethod
    def from_pairs(
        cls,
        source: FiniteAlgebra,
        target: FiniteAlgebra,
        pairs: Iterable[Pair],
        compatible: Optional[bool] = None
    ) -> "Relation":
        matrix = np.zeros((source.size, target.size), dtype=bool)
        for left, right in pairs:
            if not (0 <= left < source.size and 0 <= right < target.size):
                raise RelationError(cls.PAIR_OUT_OF_RANGE.format(left, right, source.size, target.size))
            matrix[left, right] = True
        return cls(source, target, matrix, compatible)

    @property
    def certificate(self) -> Optional[bool]:
        """The compatibility flag if already known, without computing it."""
        return self.__dict__.get("compatible")

    @property
    def is_square(self) -> bool:
        return self.source == self.target

    @property
    def algebra(self) -> FiniteAlgebra:
        if not self.is_square:
            raise RelationError("Relation is not on a single algebra.")
        return self.source

    def pairs(self) -> List[Pair]:
        return [(int(a), int(b)) for a, b in np.argwhere(self.matrix)]

    def __contains__(self, pair: Pair) -> bool:
        left, right = pair
        return bool(self.matrix[left, right])

    def __len__(self) -> int:
        return int(self.matrix.sum())

    def __le__(self, other: "Relation") -> bool:
        return not (self.matrix & ~other.matrix).any()

    @cached_property
    def compatible(self) -> bool:
        if self.source.signature != self.target.signature:
            return False
        lefts, rights = np.nonzero(self.matrix)
        for symbol in self.source.signature:
            if symbol.arity == 0:
                left = int(self.source.table(symbol.name)[()])
                right = int(self.target.table(symbol.name)[()])
                if not self.matrix[left, right]:
                    return False
                continue
            if lefts.size == 0:
                continue
            grid = np.ix_(*([np.arange(lefts.size)] * symbol.arity))
            left_values = self.source.table(symbol.name)[tuple(lefts[axis] for axis in grid)]
            right_values = self.target.table(symbol.name)[tuple(rights[axis] for axis in grid)]
            if not self.matrix[left_values, right_values].all():
                return False
        return True

    def key(self) -> Tuple:
        """Canonical ordering key: cardinality, then the sorted pair list."""
        return (len(self), tuple(self.pairs()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Relation)
            and self.source == other.source
            and self.target == other.target
            and np.array_equal(self.matrix, other.matrix)
        )

    def __hash__(self) -> int:
        return hash((self.source.size, self.target.size, self.matrix.tobytes()))

    def __str__(self) -> str:
        return "{" + ",".join(f"({a},{b})" for a, b in self.pairs()) + "}"

    def __repr__(self) -> str:
        return f"Relation({self})"
