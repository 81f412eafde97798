from typing import FrozenSet, Iterable

import numpy as np

from app.models.algebra_model import FiniteAlgebra


class NullClass:
    """The trivial elements K_X of an algebra in a given context."""

    def __init__(self, algebra: FiniteAlgebra, elements: Iterable[int]):
        self.algebra = algebra
        self.elements: FrozenSet[int] = frozenset(int(e) for e in elements)

    def mask(self) -> np.ndarray:
        members = np.zeros(self.algebra.size, dtype=bool)
        members[sorted(self.elements)] = True
        return members

    def __contains__(self, element: int) -> bool:
        return element in self.elements

    def __iter__(self):
        return iter(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NullClass)
            and self.algebra == other.algebra
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"NullClass({sorted(self.elements)})"
