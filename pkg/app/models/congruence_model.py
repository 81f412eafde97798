from typing import Dict, List, Sequence, Tuple

import numpy as np

from app.models.algebra_model import FiniteAlgebra
from app.utils.disjoint_subsets import DisjointSubsets


class Congruence:
    """A partition of the carrier stored as its canonical block labelling."""

    def __init__(self, algebra: FiniteAlgebra, partition: Sequence[int]):
        blocks = DisjointSubsets(algebra.size)
        first_of: Dict[int, int] = {}
        for element, label in enumerate(partition):
            if label in first_of:
                blocks.unify(first_of[label], element)
            else:
                first_of[label] = element
        self.algebra = algebra
        self.partition: Tuple[int, ...] = blocks.labels()

    @property
    def block_count(self) -> int:
        return max(self.partition) + 1

    def blocks(self) -> List[Tuple[int, ...]]:
        grouped: Dict[int, List[int]] = {}
        for element, label in enumerate(self.partition):
            grouped.setdefault(label, []).append(element)
        return [tuple(grouped[label]) for label in sorted(grouped)]

    def related(self, left: int, right: int) -> bool:
        return self.partition[left] == self.partition[right]

    def matrix(self) -> np.ndarray:
        labels = np.asarray(self.partition)
        return labels[:, None] == labels[None, :]

    def sort_key(self) -> Tuple:
        return (-self.block_count, self.partition)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Congruence)
            and self.algebra == other.algebra
            and self.partition == other.partition
        )

    def __hash__(self) -> int:
        return hash(self.partition)

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, block)) + "}" for block in self.blocks()) + "}"

    def __repr__(self) -> str:
        return f"Congruence({self})"
