import logging
import re
from typing import Dict, List, Mapping, NamedTuple, Sequence, Tuple

import numpy as np

from app.models.algebra_model import FiniteAlgebra, Signature
from app.models.term_model import Application, Constant, Literal, Term, Variable
from app.schemas.verdict_schema import IdentityVerdict
from app.utils.encoding import coordinate_arrays, decode_tuple
from app.utils.exceptions import IdentitySyntaxError

logger = logging.getLogger(__name__)

TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<symbol>[(),=]))")


class Equation(NamedTuple):
    left: Term
    right: Term
    text: str

    def variables(self) -> List[str]:
        names = self.left.variables()
        names += [name for name in self.right.variables() if name not in names]
        return names


class _Parser:
    def __init__(self, text: str, signature: Signature, operations: Mapping[str, int]):
        self.text = text
        self.signature = signature
        self.operations = operations
        self.tokens = self._tokenize(text)
        self.position = 0

    def _tokenize(self, text: str) -> List[Tuple[str, str, int]]:
        tokens = []
        index = 0
        while index < len(text):
            if text[index:].strip() == "":
                break
            match = TOKEN.match(text, index)
            if not match:
                column = index + len(text[index:]) - len(text[index:].lstrip()) + 1
                raise IdentitySyntaxError(f"Unexpected character at column {column} of '{text}'.")
            kind = match.lastgroup
            tokens.append((kind, match.group(kind), match.start(kind) + 1))
            index = match.end()
        return tokens

    def _peek(self) -> Tuple[str, str, int]:
        if self.position < len(self.tokens):
            return self.tokens[self.position]
        return ("end", "", len(self.text) + 1)

    def _expect(self, value: str) -> None:
        kind, found, column = self._peek()
        if found != value:
            shown = found or "end of input"
            raise IdentitySyntaxError(f"Expected '{value}' at column {column} of '{self.text}', found {shown}.")
        self.position += 1

    def equation(self) -> Equation:
        left = self.term()
        self._expect("=")
        right = self.term()
        kind, found, column = self._peek()
        if kind != "end":
            raise IdentitySyntaxError(f"Unexpected '{found}' at column {column} of '{self.text}'.")
        return Equation(left, right, self.text.strip())

    def term(self) -> Term:
        kind, value, column = self._peek()
        if kind == "number":
            self.position += 1
            return Literal(int(value))
        if kind != "name":
            shown = value or "end of input"
            raise IdentitySyntaxError(f"Expected a term at column {column} of '{self.text}', found {shown}.")
        self.position += 1

        if self._peek()[1] != "(":
            if value in self.signature and self.signature.arity(value) == 0:
                return Constant(value)
            if value in self.signature or value in self.operations:
                raise IdentitySyntaxError(f"Symbol '{value}' at column {column} needs arguments.")
            return Variable(value)

        arity = self._arity(value, column)
        self._expect("(")
        arguments = [self.term()]
        while self._peek()[1] == ",":
            self.position += 1
            arguments.append(self.term())
        self._expect(")")
        if len(arguments) != arity:
            raise IdentitySyntaxError(
                f"Symbol '{value}' at column {column} takes {arity} arguments, got {len(arguments)}."
            )
        return Application(value, arguments)

    def _arity(self, name: str, column: int) -> int:
        if name in self.operations:
            return self.operations[name]
        if name in self.signature:
            return self.signature.arity(name)
        raise IdentitySyntaxError(f"Unknown operation '{name}' at column {column} of '{self.text}'.")


class IdentityService:
    def parse_equation(
        self,
        text: str,
        signature: Signature,
        operations: Mapping[str, int] = None
    ) -> Equation:
        """Read `left = right`; identifiers that are neither symbols nor extra operations are variables."""
        return _Parser(text, signature, operations or {}).equation()

    def verify(
        self,
        algebra: FiniteAlgebra,
        identities: Sequence[str],
        operations: Mapping[str, np.ndarray] = None
    ) -> IdentityVerdict:
        """Evaluate every identity under every assignment; report the first failure."""
        operations = dict(operations or {})
        arities = {name: table.ndim for name, table in operations.items()}
        for text in identities:
            equation = self.parse_equation(text, algebra.signature, arities)
            names = equation.variables()
            values = dict(zip(names, coordinate_arrays(algebra.size, len(names))))
            shape = (algebra.size ** len(names),)
            left = np.broadcast_to(equation.left.evaluate(algebra, values, operations), shape)
            right = np.broadcast_to(equation.right.evaluate(algebra, values, operations), shape)
            mismatches = np.flatnonzero(left != right)
            if mismatches.size:
                point = decode_tuple(int(mismatches[0]), algebra.size, len(names))
                assignment: Dict[str, int] = dict(zip(names, point))
                logger.debug("Identity %s fails at %s", equation.text, assignment)
                return IdentityVerdict(holds=False, identity=equation.text, assignment=assignment)
        return IdentityVerdict(holds=True)
