import logging
import re
from pathlib import Path
from typing import List, Optional, Tuple

from app.models.algebra_model import FiniteAlgebra, Signature
from app.models.relation_model import Relation
from app.utils.exceptions import AlgebraSyntaxError, AlgebraValidationError

logger = logging.getLogger(__name__)

TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*|\d+|[\[\]=/]|\S")

Token = Tuple[str, int]


class _Line:
    """The tokens of one source line, consumed left to right."""

    def __init__(self, text: str, number: int, source: Optional[str]):
        self.line_number = number
        self.source = source
        code = text.split("#", 1)[0]
        self.tokens: List[Token] = [(m.group(), m.start() + 1) for m in TOKEN.finditer(code)]
        self.end = len(code.rstrip()) + 1
        self.position = 0

    @property
    def blank(self) -> bool:
        return not self.tokens

    def error(self, message: str, column: Optional[int] = None) -> AlgebraSyntaxError:
        if column is None:
            column = self.tokens[self.position][1] if self.position < len(self.tokens) else self.end
        return AlgebraSyntaxError(message, self.line_number, column, self.source)

    def peek(self) -> Optional[str]:
        return self.tokens[self.position][0] if self.position < len(self.tokens) else None

    def take(self, what: str) -> Token:
        if self.position >= len(self.tokens):
            raise self.error(f"Expected {what}, found end of line.")
        token = self.tokens[self.position]
        self.position += 1
        return token

    def keyword(self, value: str) -> None:
        text, column = self.take(f"'{value}'")
        if text != value:
            raise self.error(f"Expected '{value}', found '{text}'.", column)

    def name(self, what: str) -> str:
        text, column = self.take(what)
        if not (text[0].isalpha() or text[0] == "_"):
            raise self.error(f"Expected {what}, found '{text}'.", column)
        return text

    def number(self, what: str) -> Tuple[int, int]:
        text, column = self.take(what)
        if not text.isdigit():
            raise self.error(f"Expected {what}, found '{text}'.", column)
        return int(text), column

    def finish(self) -> None:
        if self.position < len(self.tokens):
            text, column = self.tokens[self.position]
            raise self.error(f"Unexpected '{text}'.", column)


class ParserService:
    ALGEBRA_HEADER = "algebra"
    SIZE = "size"
    CONSTANT = "const"
    OPERATION = "op"
    RELATION_HEADER = "relation"
    PAIR = "pair"

    def parse_algebra(self, text: str, source: Optional[str] = None) -> FiniteAlgebra:
        lines = [line for line in self._lines(text, source) if not line.blank]
        if not lines:
            raise AlgebraSyntaxError("Empty algebra description.", 1, 1, source)

        header = lines[0]
        header.keyword(self.ALGEBRA_HEADER)
        name = header.name("an algebra name")
        header.finish()

        if len(lines) < 2:
            raise AlgebraSyntaxError("Missing 'size' line.", header.line_number + 1, 1, source)
        size_line = lines[1]
        size_line.keyword(self.SIZE)
        size, column = size_line.number("the carrier size")
        size_line.finish()
        if size < 1:
            raise size_line.error("Algebra size must be at least 1.", column)

        symbols: List[Tuple[str, int]] = []
        tables = {}
        seen_operation = False
        for line in lines[2:]:
            keyword = line.peek()
            if keyword == self.CONSTANT:
                if seen_operation:
                    raise line.error("Constants must be declared before operations.")
                symbol, value = self._constant(line, size)
                symbols.append((symbol, 0))
                tables[symbol] = [value]
            elif keyword == self.OPERATION:
                seen_operation = True
                symbol, arity, table = self._operation(line, size)
                symbols.append((symbol, arity))
                tables[symbol] = table
            else:
                raise line.error(f"Expected 'const' or 'op', found '{keyword}'.")
            if symbols[-1][0] in (s for s, _ in symbols[:-1]):
                raise line.error(f"Symbol '{symbols[-1][0]}' declared more than once.", line.tokens[1][1])

        try:
            return FiniteAlgebra(Signature(symbols), size, tables, name=name)
        except AlgebraValidationError as error:
            raise AlgebraSyntaxError(str(error), header.line_number, 1, source) from error

    def _constant(self, line: _Line, size: int) -> Tuple[str, int]:
        line.keyword(self.CONSTANT)
        symbol = line.name("a constant name")
        line.keyword("=")
        value, column = line.number("an element")
        line.finish()
        if value >= size:
            raise line.error(f"Element {value} lies outside the carrier of size {size}.", column)
        return symbol, value

    def _operation(self, line: _Line, size: int) -> Tuple[str, int, List[int]]:
        line.keyword(self.OPERATION)
        symbol = line.name("an operation name")
        line.keyword("/")
        arity, column = line.number("an arity")
        if arity == 0:
            raise line.error(f"Nullary symbol '{symbol}' must be declared with 'const'.", column)
        line.keyword("=")
        line.keyword("[")
        table = []
        while line.peek() != "]":
            value, column = line.number("an element or ']'")
            if value >= size:
                raise line.error(f"Element {value} lies outside the carrier of size {size}.", column)
            table.append(value)
        line.keyword("]")
        line.finish()
        expected = size ** arity
        if len(table) != expected:
            raise line.error(
                FiniteAlgebra.TABLE_LENGTH_MISMATCH.format(symbol, arity, expected, len(table)),
                line.tokens[1][1]
            )
        return symbol, arity, table

    def serialize_algebra(self, algebra: FiniteAlgebra) -> str:
        lines = [f"{self.ALGEBRA_HEADER} {algebra.name}", f"{self.SIZE} {algebra.size}"]
        for symbol in algebra.signature.constants:
            lines.append(f"{self.CONSTANT} {symbol.name} = {int(algebra.table(symbol.name)[()])}")
        for symbol in algebra.signature.operations:
            entries = " ".join(str(value) for value in algebra.table(symbol.name).reshape(-1).tolist())
            lines.append(f"{self.OPERATION} {symbol.name}/{symbol.arity} = [{entries}]")
        return "\n".join(lines) + "\n"

    def parse_relation(self, text: str, algebra: FiniteAlgebra, source: Optional[str] = None) -> Relation:
        lines = [line for line in self._lines(text, source) if not line.blank]
        if not lines:
            raise AlgebraSyntaxError("Empty relation description.", 1, 1, source)

        header = lines[0]
        header.keyword(self.RELATION_HEADER)
        header.keyword("on")
        name = header.name("an algebra name")
        header.finish()
        if name != algebra.name:
            logger.warning("Relation %s is declared on '%s' but read against '%s'", source or "", name, algebra.name)

        pairs = []
        seen = set()
        for line in lines[1:]:
            line.keyword(self.PAIR)
            left, left_column = line.number("an element")
            right, right_column = line.number("an element")
            line.finish()
            for value, column in ((left, left_column), (right, right_column)):
                if value >= algebra.size:
                    raise line.error(
                        f"Element {value} lies outside the carrier of size {algebra.size}.", column
                    )
            if (left, right) in seen:
                logger.warning("Duplicate pair (%d, %d) on line %d ignored", left, right, line.line_number)
                continue
            seen.add((left, right))
            pairs.append((left, right))

        relation = Relation.from_pairs(algebra, algebra, pairs)
        if not relation.compatible:
            logger.info("Relation %s is not compatible with '%s'", source or "", algebra.name)
        return relation

    def serialize_relation(self, relation: Relation) -> str:
        lines = [f"{self.RELATION_HEADER} on {relation.source.name}"]
        lines += [f"{self.PAIR} {left} {right}" for left, right in relation.pairs()]
        return "\n".join(lines) + "\n"

    def read_algebra(self, path: str) -> FiniteAlgebra:
        return self.parse_algebra(Path(path).read_text(encoding="utf-8"), source=path)

    def read_relation(self, path: str, algebra: FiniteAlgebra) -> Relation:
        return self.parse_relation(Path(path).read_text(encoding="utf-8"), algebra, source=path)

    @staticmethod
    def _lines(text: str, source: Optional[str]) -> List[_Line]:
        return [_Line(line, number, source) for number, line in enumerate(text.splitlines(), start=1)]
