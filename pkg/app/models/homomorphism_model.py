from typing import Optional, Sequence, Tuple

import numpy as np

from app.models.algebra_model import FiniteAlgebra
from app.utils.encoding import frozen
from app.utils.exceptions import HomomorphismError


class HomomorphismViolation:
    """First (symbol, argument tuple) where a map fails to commute with an operation."""

    def __init__(self, symbol: str, arguments: Tuple[int, ...], expected: int, actual: int):
        self.symbol = symbol
        self.arguments = arguments
        self.expected = expected
        self.actual = actual

    def __repr__(self) -> str:
        return (
            f"HomomorphismViolation(symbol={self.symbol!r}, arguments={self.arguments}, "
            f"expected={self.expected}, actual={self.actual})"
        )


class Homomorphism:
    SIGNATURE_MISMATCH = "Domain and codomain have different signatures."
    LENGTH_MISMATCH = "Map has length {}, expected {}."
    VALUE_OUT_OF_RANGE = "Map sends {} to {}, outside the codomain of size {}."
    NOT_A_HOMOMORPHISM = "Map does not commute with '{}' at arguments {}."

    def __init__(self, domain: FiniteAlgebra, codomain: FiniteAlgebra, mapping: Sequence[int]):
        values = validate_map(domain, codomain, mapping)
        violation = first_violation(domain, codomain, values)
        if violation is not None:
            raise HomomorphismError(
                self.NOT_A_HOMOMORPHISM.format(violation.symbol, violation.arguments)
            )
        self.domain = domain
        self.codomain = codomain
        self.map = frozen(values)

    def __call__(self, element: int) -> int:
        return int(self.map[element])

    def image(self) -> Tuple[int, ...]:
        return tuple(int(value) for value in np.unique(self.map))

    def is_injective(self) -> bool:
        return np.unique(self.map).size == self.domain.size

    def is_surjective(self) -> bool:
        return np.unique(self.map).size == self.codomain.size

    def then(self, other: "Homomorphism") -> "Homomorphism":
        """Diagram-order composite: first self, then other."""
        if self.codomain != other.domain:
            raise HomomorphismError("Composite of non-composable homomorphisms.")
        return Homomorphism(self.domain, other.codomain, other.map[self.map])

    @classmethod
    def identity(cls, algebra: FiniteAlgebra) -> "Homomorphism":
        return cls(algebra, algebra, np.arange(algebra.size))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Homomorphism)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and np.array_equal(self.map, other.map)
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self.map.tobytes()))

    def __repr__(self) -> str:
        return f"Homomorphism({self.domain.name} -> {self.codomain.name}, {self.map.tolist()})"


def validate_map(domain: FiniteAlgebra, codomain: FiniteAlgebra, mapping: Sequence[int]) -> np.ndarray:
    if domain.signature != codomain.signature:
        raise HomomorphismError(Homomorphism.SIGNATURE_MISMATCH)
    values = np.asarray(mapping, dtype=np.int64).reshape(-1)
    if values.size != domain.size:
        raise HomomorphismError(Homomorphism.LENGTH_MISMATCH.format(values.size, domain.size))
    for element, value in enumerate(values):
        if not 0 <= value < codomain.size:
            raise HomomorphismError(
                Homomorphism.VALUE_OUT_OF_RANGE.format(element, int(value), codomain.size)
            )
    return values


def first_violation(
    domain: FiniteAlgebra,
    codomain: FiniteAlgebra,
    values: np.ndarray
) -> Optional[HomomorphismViolation]:
    for symbol in domain.signature:
        source = domain.table(symbol.name)
        target = codomain.table(symbol.name)
        if symbol.arity == 0:
            expected, actual = int(target[()]), int(values[source[()]])
            if expected != actual:
                return HomomorphismViolation(symbol.name, (), expected, actual)
            continue
        mapped_after = values[source]
        mapped_before = target[np.ix_(*([values] * symbol.arity))]
        mismatches = np.argwhere(mapped_after != mapped_before)
        if mismatches.size:
            arguments = tuple(int(a) for a in mismatches[0])
            return HomomorphismViolation(
                symbol.name, arguments, int(mapped_before[arguments]), int(mapped_after[arguments])
            )
    return None


class ImageFactorization:
    """f = inclusion after surjection, with the image as a subalgebra of the codomain."""

    def __init__(self, surjection: Homomorphism, image: FiniteAlgebra, inclusion: Homomorphism):
        self.surjection = surjection
        self.image = image
        self.inclusion = inclusion

    def composite(self) -> Homomorphism:
        return self.surjection.then(self.inclusion)
