from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from app.models.algebra_model import FiniteAlgebra
from app.utils.encoding import coordinate_arrays, encode_tuple, frozen
from app.utils.exceptions import AlgebraValidationError, BudgetExceededError

Tables = Mapping[str, np.ndarray]


def variable_names(arity: int) -> Tuple[str, ...]:
    if arity <= 3:
        return ("x", "y", "z")[:arity]
    return tuple(f"x{position}" for position in range(1, arity + 1))


class Term:
    """Syntax tree over a signature. Subtrees may be shared."""

    def evaluate(
        self,
        algebra: FiniteAlgebra,
        variables: Mapping[str, np.ndarray],
        operations: Optional[Tables] = None
    ) -> np.ndarray:
        """Pointwise value for index arrays bound to the variables.

        `operations` supplies tables for symbols outside the signature.
        """
        return self._evaluate(algebra, variables, operations or {}, {})

    def _evaluate(self, algebra, variables, operations, cache) -> np.ndarray:
        raise NotImplementedError

    def variables(self) -> List[str]:
        """Variable names in order of first occurrence."""
        found: List[str] = []
        self._collect(found)
        return found

    def _collect(self, found: List[str]) -> None:
        pass

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class Variable(Term):
    def __init__(self, name: str):
        self.name = name

    def _evaluate(self, algebra, variables, operations, cache) -> np.ndarray:
        return np.asarray(variables[self.name])

    def _collect(self, found: List[str]) -> None:
        if self.name not in found:
            found.append(self.name)

    def __str__(self) -> str:
        return self.name


class Literal(Term):
    """A carrier element written directly into an identity."""

    def __init__(self, value: int):
        self.value = int(value)

    def _evaluate(self, algebra, variables, operations, cache) -> np.ndarray:
        if not 0 <= self.value < algebra.size:
            raise AlgebraValidationError(
                f"Literal {self.value} lies outside the carrier of '{algebra.name}'."
            )
        return np.asarray(self.value)

    def __str__(self) -> str:
        return str(self.value)


class Constant(Term):
    def __init__(self, symbol: str):
        self.symbol = symbol

    def _evaluate(self, algebra, variables, operations, cache) -> np.ndarray:
        return np.asarray(algebra.table(self.symbol)[()])

    def __str__(self) -> str:
        return self.symbol


class Application(Term):
    def __init__(self, symbol: str, arguments: Sequence[Term]):
        self.symbol = symbol
        self.arguments = tuple(arguments)

    def _evaluate(self, algebra, variables, operations, cache) -> np.ndarray:
        key = id(self)
        if key not in cache:
            table = operations[self.symbol] if self.symbol in operations else algebra.table(self.symbol)
            values = [argument._evaluate(algebra, variables, operations, cache) for argument in self.arguments]
            cache[key] = table[tuple(values)]
        return cache[key]

    def _collect(self, found: List[str]) -> None:
        for argument in self.arguments:
            argument._collect(found)

    def __str__(self) -> str:
        return "{}({})".format(self.symbol, ", ".join(str(argument) for argument in self.arguments))


class TermOperation:
    """An n-ary term operation of an algebra together with one term inducing it."""

    TABLE_MISMATCH = "Term {} does not induce the given table."

    def __init__(self, algebra: FiniteAlgebra, arity: int, table: Sequence[int], term: Term):
        flat = np.asarray(table, dtype=np.int64).reshape(-1)
        expected = algebra.size ** arity
        if flat.size != expected:
            raise AlgebraValidationError(
                FiniteAlgebra.TABLE_LENGTH_MISMATCH.format("term", arity, expected, flat.size)
            )
        coordinates = coordinate_arrays(algebra.size, arity)
        values = dict(zip(variable_names(arity), coordinates))
        induced = np.broadcast_to(term.evaluate(algebra, values), flat.shape)
        if not np.array_equal(induced, flat):
            raise AlgebraValidationError(self.TABLE_MISMATCH.format(term))
        self.algebra = algebra
        self.arity = arity
        self.table = frozen(flat)
        self.term = term

    def shaped(self) -> np.ndarray:
        """The table indexed by argument tuples."""
        return self.table.reshape((self.algebra.size,) * self.arity)

    def __call__(self, *arguments: int) -> int:
        return int(self.table[encode_tuple(arguments, self.algebra.size)])

    def __str__(self) -> str:
        return str(self.term)

    def __repr__(self) -> str:
        return f"TermOperation({self.term}, {self.table.tolist()})"


class FreeAlgebraModel:
    """The n-ary term operations of `base` found by a breadth-first closure.

    Element i is stored as the row `rows[i]` (its table) and a derivation: either
    a leaf term, or a basic symbol applied to earlier elements. Term trees are
    built on demand from the derivations.
    """

    def __init__(self, base: FiniteAlgebra, generators: int):
        self.base = base
        self.generators = generators
        self.width = base.size ** generators
        self.complete = False
        self._rows: List[np.ndarray] = []
        self._derivations: List[Tuple[Optional[str], Tuple[int, ...], Optional[Term]]] = []
        self._index: Dict[bytes, int] = {}
        self._terms: Dict[int, Term] = {}

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> np.ndarray:
        if not self._rows:
            return np.empty((0, self.width), dtype=np.int64)
        return np.vstack(self._rows)

    def row(self, element: int) -> np.ndarray:
        return self._rows[element]

    def find(self, table: Sequence[int]) -> Optional[int]:
        return self._index.get(np.asarray(table, dtype=np.int64).reshape(-1).tobytes())

    def add(self, row: np.ndarray, symbol: Optional[str], arguments: Tuple[int, ...], leaf: Optional[Term] = None) -> Optional[int]:
        """Record a new table; None when the table is already present."""
        row = frozen(row)
        key = row.tobytes()
        if key in self._index:
            return None
        element = len(self._rows)
        self._index[key] = element
        self._rows.append(row)
        self._derivations.append((symbol, arguments, leaf))
        return element

    def term(self, element: int) -> Term:
        cached = self._terms.get(element)
        if cached is not None:
            return cached
        pending = [element]
        while pending:
            current = pending[-1]
            symbol, arguments, leaf = self._derivations[current]
            if leaf is not None:
                self._terms[current] = leaf
                pending.pop()
                continue
            missing = [argument for argument in arguments if argument not in self._terms]
            if missing:
                pending.extend(missing)
                continue
            self._terms[current] = Application(symbol, [self._terms[argument] for argument in arguments])
            pending.pop()
        return self._terms[element]

    def operation(self, element: int) -> TermOperation:
        return TermOperation(self.base, self.generators, self._rows[element], self.term(element))

    @property
    def elements(self) -> List[TermOperation]:
        return [self.operation(element) for element in range(len(self))]

    def substitute(self, element: int, picker: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
        """Apply `picker` to the table of an element viewed with one axis per variable."""
        shaped = self._rows[element].reshape((self.base.size,) * self.generators)
        return np.asarray(picker(shaped)).reshape(-1)

    def as_algebra(self, max_table_size: int) -> FiniteAlgebra:
        """The model as a finite algebra on the element indices."""
        if not self.complete:
            raise AlgebraValidationError(f"The free model over '{self.base.name}' is not closed.")
        count = len(self)
        largest = count ** self.base.signature.max_arity
        if largest > max_table_size:
            raise BudgetExceededError(
                f"Free model of size {count} needs tables of {largest} entries, "
                f"over the budget of {max_table_size}.",
                max_table_size
            )

        rows = self.rows
        keys = {row.tobytes(): element for element, row in enumerate(rows)}
        everything = np.arange(count)
        tables = {}
        for symbol in self.base.signature:
            table = self.base.table(symbol.name)
            if symbol.arity == 0:
                tables[symbol.name] = [keys[np.full(self.width, int(table[()]), dtype=np.int64).tobytes()]]
                continue
            grid = np.ix_(*([everything] * symbol.arity))
            produced = table[tuple(rows[axis] for axis in grid)]
            flat = produced.reshape(-1, self.width)
            tables[symbol.name] = [keys[value.tobytes()] for value in flat]
        name = f"F{self.generators}({self.base.name})"
        return FiniteAlgebra(self.base.signature, count, tables, name=name)
