import logging
from typing import Tuple

import numpy as np

from app.models.algebra_model import FiniteAlgebra
from app.models.homomorphism_model import Homomorphism
from app.models.relation_model import Relation
from app.schemas.context_schema import IdealContext
from app.schemas.relation_schema import RelationPredicates
from app.services.context_service import ContextService
from app.utils.exceptions import RelationError

logger = logging.getLogger(__name__)


class RelationAlgebra:
    """The pair set of a compatible relation as an algebra, with its two legs."""

    def __init__(self, relation: Relation, algebra: FiniteAlgebra, first: Homomorphism, second: Homomorphism):
        self.relation = relation
        self.algebra = algebra
        self.first = first
        self.second = second

    def index(self, left: int, right: int) -> int:
        matches = np.flatnonzero((self.first.map == left) & (self.second.map == right))
        if matches.size == 0:
            raise RelationError(f"Pair ({left}, {right}) is not in the relation.")
        return int(matches[0])


class RelationService:
    CARRIER_MISMATCH = "Relations do not compose: the carrier of '{}' is not the carrier of '{}'."
    NOT_SQUARE = "Relation from '{}' to '{}' is not a relation on one algebra."
    INCOMPATIBLE_RELATION = "Relation on '{}' is not compatible with its operations."
    LEGS_MISMATCH = "Both legs of a graph must share domain and codomain."
    EMPTY_RELATION = "The empty relation has no pair algebra."

    def __init__(self, context_service: ContextService):
        self.context_service = context_service

    def compose(self, first: Relation, second: Relation) -> Relation:
        """Diagram order: first, then second. In the product notation of relations this is `second first`."""
        if first.target != second.source:
            raise RelationError(self.CARRIER_MISMATCH.format(first.target.name, second.source.name))
        product = first.matrix.astype(np.int64) @ second.matrix.astype(np.int64)
        certified = True if self._certified(first) and self._certified(second) else None
        return Relation(first.source, second.target, product > 0, compatible=certified)

    def opposite(self, relation: Relation) -> Relation:
        certified = relation.certificate
        return Relation(relation.target, relation.source, relation.matrix.T, compatible=certified)

    def diagonal(self, algebra: FiniteAlgebra) -> Relation:
        return Relation(algebra, algebra, np.eye(algebra.size, dtype=bool), compatible=True)

    def full(self, algebra: FiniteAlgebra) -> Relation:
        return Relation(algebra, algebra, np.ones((algebra.size, algebra.size), dtype=bool), compatible=True)

    def kernel_pair(self, morphism: Homomorphism) -> Relation:
        values = morphism.map
        return Relation(
            morphism.domain, morphism.domain, values[:, None] == values[None, :], compatible=True
        )

    def inverse_image(self, morphism: Homomorphism, relation: Relation) -> Relation:
        if relation.source != morphism.codomain or relation.target != morphism.codomain:
            raise RelationError(self.CARRIER_MISMATCH.format(morphism.codomain.name, relation.source.name))
        values = morphism.map
        certified = True if self._certified(relation) else None
        return Relation(
            morphism.domain, morphism.domain, relation.matrix[np.ix_(values, values)], compatible=certified
        )

    def star(self, context: IdealContext, relation: Relation) -> Relation:
        """Pairs of the relation whose first component is trivial."""
        algebra = self._square_algebra(relation)
        self._require_compatible(relation)
        trivial = self.context_service.null_class(context, algebra).mask()
        certified = relation.certificate
        return Relation(algebra, algebra, relation.matrix & trivial[:, None], compatible=certified)

    def star_via_pullback(self, context: IdealContext, relation: Relation) -> Relation:
        """The star as the image of the N-kernel of the first leg of the relation."""
        algebra = self._square_algebra(relation)
        self._require_compatible(relation)
        self.context_service.validate(context, algebra)
        if len(relation) == 0:
            return Relation(algebra, algebra, relation.matrix, compatible=True)

        pair_algebra = self.relation_algebra(relation)
        kernel = self.context_service.n_kernel(context, pair_algebra.first)
        matrix = np.zeros_like(relation.matrix)
        for element in kernel:
            matrix[pair_algebra.first(element), pair_algebra.second(element)] = True
        return Relation(algebra, algebra, matrix)

    def star_kernel(self, context: IdealContext, morphism: Homomorphism) -> Relation:
        return self.star(context, self.kernel_pair(morphism))

    def graph_image(self, first: Homomorphism, second: Homomorphism) -> Relation:
        if first.domain != second.domain or first.codomain != second.codomain:
            raise RelationError(self.LEGS_MISMATCH)
        matrix = np.zeros((first.codomain.size, second.codomain.size), dtype=bool)
        matrix[first.map, second.map] = True
        return Relation(first.codomain, second.codomain, matrix, compatible=True)

    def relation_algebra(self, relation: Relation) -> RelationAlgebra:
        self._require_compatible(relation)
        if len(relation) == 0:
            raise RelationError(self.EMPTY_RELATION)

        source, target = relation.source, relation.target
        pairs = np.argwhere(relation.matrix)
        lefts, rights = pairs[:, 0], pairs[:, 1]
        count = len(pairs)
        position = np.full(relation.matrix.shape, -1, dtype=np.int64)
        position[lefts, rights] = np.arange(count)

        tables = {}
        everything = np.arange(count)
        for symbol in source.signature:
            left_table = source.table(symbol.name)
            right_table = target.table(symbol.name)
            if symbol.arity == 0:
                tables[symbol.name] = [int(position[left_table[()], right_table[()]])]
                continue
            grid = np.ix_(*([everything] * symbol.arity))
            left_values = left_table[tuple(lefts[axis] for axis in grid)]
            right_values = right_table[tuple(rights[axis] for axis in grid)]
            tables[symbol.name] = position[left_values, right_values]

        algebra = FiniteAlgebra(source.signature, count, tables, name=f"pairs({source.name})")
        return RelationAlgebra(
            relation,
            algebra,
            Homomorphism(algebra, source, lefts),
            Homomorphism(algebra, target, rights),
        )

    def relation_predicates(self, relation: Relation) -> RelationPredicates:
        self._square_algebra(relation)
        matrix = relation.matrix
        squared = (matrix.astype(np.int64) @ matrix.astype(np.int64)) > 0
        return RelationPredicates(
            reflexive=bool(np.diagonal(matrix).all()),
            symmetric=bool(np.array_equal(matrix, matrix.T)),
            transitive=bool(not (squared & ~matrix).any()),
            compatible=relation.compatible,
        )

    def diagonal_pullback_check(self, relation: Relation) -> Tuple[bool, bool]:
        """For reflexive E with legs e0, e1 and diagonal d: whether d^-1(Eq(e0) then Eq(e1)) = E
        and d^-1(Eq(e1) then Eq(e0)) = E opposite."""
        algebra = self._square_algebra(relation)
        legs = self.relation_algebra(relation)
        diagonal = Homomorphism(
            algebra, legs.algebra, [legs.index(element, element) for element in algebra.carrier]
        )
        first_kernel = self.kernel_pair(legs.first)
        second_kernel = self.kernel_pair(legs.second)
        forward = self.inverse_image(diagonal, self.compose(first_kernel, second_kernel))
        backward = self.inverse_image(diagonal, self.compose(second_kernel, first_kernel))
        return (
            bool(np.array_equal(forward.matrix, relation.matrix)),
            bool(np.array_equal(backward.matrix, relation.matrix.T)),
        )

    def _square_algebra(self, relation: Relation) -> FiniteAlgebra:
        if not relation.is_square:
            raise RelationError(self.NOT_SQUARE.format(relation.source.name, relation.target.name))
        return relation.source

    def _require_compatible(self, relation: Relation) -> None:
        # relations on plain sets are subobjects whatever their pairs
        if len(relation.source.signature) and not relation.compatible:
            raise RelationError(self.INCOMPATIBLE_RELATION.format(relation.source.name))

    @staticmethod
    def _certified(relation: Relation) -> bool:
        return relation.certificate is True
