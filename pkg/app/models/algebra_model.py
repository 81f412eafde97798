from typing import Dict, Iterable, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from app.utils.encoding import frozen
from app.utils.exceptions import AlgebraValidationError

TableLike = Union[np.ndarray, Sequence[int]]


class OperationSymbol(NamedTuple):
    name: str
    arity: int


class Signature:
    DUPLICATE_SYMBOL = "Symbol '{}' declared more than once."
    NEGATIVE_ARITY = "Symbol '{}' has negative arity {}."
    UNKNOWN_SYMBOL = "Unknown symbol '{}'."

    def __init__(self, symbols: Iterable[Tuple[str, int]] = ()):
        checked = []
        seen = set()
        for name, arity in symbols:
            if name in seen:
                raise AlgebraValidationError(self.DUPLICATE_SYMBOL.format(name))
            if arity < 0:
                raise AlgebraValidationError(self.NEGATIVE_ARITY.format(name, arity))
            seen.add(name)
            checked.append(OperationSymbol(name, int(arity)))
        self.symbols: Tuple[OperationSymbol, ...] = tuple(checked)
        self._by_name = {symbol.name: symbol for symbol in self.symbols}

    @property
    def constants(self) -> Tuple[OperationSymbol, ...]:
        return tuple(symbol for symbol in self.symbols if symbol.arity == 0)

    @property
    def operations(self) -> Tuple[OperationSymbol, ...]:
        return tuple(symbol for symbol in self.symbols if symbol.arity > 0)

    @property
    def max_arity(self) -> int:
        return max((symbol.arity for symbol in self.symbols), default=0)

    def arity(self, name: str) -> int:
        return self[name].arity

    def __getitem__(self, name: str) -> OperationSymbol:
        try:
            return self._by_name[name]
        except KeyError:
            raise AlgebraValidationError(self.UNKNOWN_SYMBOL.format(name)) from None

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Signature) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return "Signature({})".format(", ".join(f"{s.name}/{s.arity}" for s in self.symbols))


class FiniteAlgebra:
    """A finite algebra on the carrier {0..size-1}.

    Each table is an ndarray of shape (size,)*arity indexed by the argument
    tuple; flattened in C order it is the lexicographic listing with the
    leftmost argument most significant.
    """

    EMPTY_CARRIER = "Algebra size must be at least 1, got {}."
    MISSING_TABLE = "No table given for symbol '{}'."
    EXTRA_TABLE = "Table given for undeclared symbol '{}'."
    TABLE_LENGTH_MISMATCH = "Operation {}/{} expects {} entries, got {}."
    ENTRY_OUT_OF_RANGE = "Operation '{}' has entry {} outside the carrier of size {}."

    def __init__(
        self,
        signature: Signature,
        size: int,
        tables: Mapping[str, TableLike],
        name: str = "algebra"
    ):
        if size < 1:
            raise AlgebraValidationError(self.EMPTY_CARRIER.format(size))

        for symbol_name in tables:
            if symbol_name not in signature:
                raise AlgebraValidationError(self.EXTRA_TABLE.format(symbol_name))

        checked: Dict[str, np.ndarray] = {}
        for symbol in signature:
            if symbol.name not in tables:
                raise AlgebraValidationError(self.MISSING_TABLE.format(symbol.name))
            flat = np.asarray(tables[symbol.name], dtype=np.int64).reshape(-1)
            expected = size ** symbol.arity
            if flat.size != expected:
                raise AlgebraValidationError(
                    self.TABLE_LENGTH_MISMATCH.format(symbol.name, symbol.arity, expected, flat.size)
                )
            bad = flat[(flat < 0) | (flat >= size)]
            if bad.size:
                raise AlgebraValidationError(
                    self.ENTRY_OUT_OF_RANGE.format(symbol.name, int(bad[0]), size)
                )
            checked[symbol.name] = frozen(flat.reshape((size,) * symbol.arity))

        self.name = name
        self.signature = signature
        self.size = int(size)
        self._tables = checked
        self._hash: Optional[int] = None

    @property
    def carrier(self) -> range:
        return range(self.size)

    def table(self, name: str) -> np.ndarray:
        self.signature[name]
        return self._tables[name]

    @property
    def constants(self) -> Dict[str, int]:
        return {symbol.name: int(self._tables[symbol.name][()]) for symbol in self.signature.constants}

    def apply(self, name: str, *arguments) -> np.ndarray:
        """Pointwise application of a basic operation to equally shaped index arrays."""
        table = self.table(name)
        if table.ndim == 0:
            shape = np.broadcast_shapes(*(np.shape(a) for a in arguments)) if arguments else ()
            return np.full(shape, int(table[()]), dtype=np.int64)
        return table[tuple(np.asarray(argument) for argument in arguments)]

    def is_closed(self, elements: Iterable[int]) -> bool:
        members = np.zeros(self.size, dtype=bool)
        subset = np.fromiter(elements, dtype=np.int64)
        members[subset] = True
        for symbol in self.signature:
            table = self._tables[symbol.name]
            if symbol.arity == 0:
                if not members[int(table[()])]:
                    return False
                continue
            if subset.size == 0:
                continue
            values = table[np.ix_(*([subset] * symbol.arity))]
            if not members[values].all():
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        if self is other:
            return True
        return (
            self.size == other.size
            and self.signature == other.signature
            and all(np.array_equal(self._tables[s.name], other._tables[s.name]) for s in self.signature)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((
                self.size,
                self.signature,
                tuple(self._tables[s.name].tobytes() for s in self.signature),
            ))
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteAlgebra(name={self.name!r}, size={self.size}, signature={self.signature!r})"
