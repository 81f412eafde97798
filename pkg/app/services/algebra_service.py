import itertools
import logging
from collections import deque
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np

from app.config.settings import settings
from app.models.algebra_model import FiniteAlgebra
from app.models.congruence_model import Congruence
from app.models.homomorphism_model import (
    Homomorphism,
    HomomorphismViolation,
    ImageFactorization,
    first_violation,
    validate_map,
)
from app.utils.disjoint_subsets import DisjointSubsets
from app.utils.encoding import coordinate_arrays, encode_tuple
from app.utils.exceptions import AlgebraValidationError, BudgetExceededError

logger = logging.getLogger(__name__)


class AlgebraService:
    POWER_BUDGET_EXCEEDED = "Direct power of size {}^{} = {} exceeds the budget of {}."
    CONGRUENCE_BUDGET_EXCEEDED = "Congruence enumeration on size {} exceeds the budget of {}."
    MAP_BUDGET_EXCEEDED = "Enumerating {}^{} maps exceeds the budget of {}."
    NOT_CLOSED = "Elements {} are not closed under the operations of '{}'."
    ELEMENT_OUT_OF_RANGE = "Element {} lies outside the carrier of size {}."

    def __init__(
        self,
        max_power_size: int = settings.max_power_size,
        max_congruence_size: int = settings.max_congruence_size,
        max_table_size: int = settings.max_table_size
    ):
        self.max_power_size = max_power_size
        self.max_congruence_size = max_congruence_size
        self.max_table_size = max_table_size

    def direct_power(self, algebra: FiniteAlgebra, exponent: int) -> FiniteAlgebra:
        if exponent < 1:
            raise AlgebraValidationError("Exponent of a direct power must be positive.")
        base = algebra.size
        size = base ** exponent
        if size > self.max_power_size:
            raise BudgetExceededError(
                self.POWER_BUDGET_EXCEEDED.format(base, exponent, size, self.max_power_size),
                self.max_power_size
            )

        digits = coordinate_arrays(base, exponent)
        everything = np.arange(size)
        tables = {}
        for symbol in algebra.signature:
            table = algebra.table(symbol.name)
            if symbol.arity == 0:
                tables[symbol.name] = [encode_tuple([int(table[()])] * exponent, base)]
                continue
            grid = np.ix_(*([everything] * symbol.arity))
            result = np.zeros((size,) * symbol.arity, dtype=np.int64)
            for position in range(exponent):
                coordinates = tuple(digits[position][axis] for axis in grid)
                result = result * base + table[coordinates]
            tables[symbol.name] = result

        return FiniteAlgebra(algebra.signature, size, tables, name=f"{algebra.name}^{exponent}")

    def subalgebra_closure(
        self,
        algebra: FiniteAlgebra,
        seed: Iterable[int],
        closed: Iterable[int] = ()
    ) -> FrozenSet[int]:
        """Least subuniverse containing `seed`.

        `closed` may name a subset of the seed already known to be closed; only
        argument tuples touching the remaining elements are then evaluated.
        """
        members = np.zeros(algebra.size, dtype=bool)
        old = np.zeros(algebra.size, dtype=bool)
        for element in seed:
            self._check_element(algebra, element)
            members[element] = True
        for element in closed:
            old[element] = True
        members |= old
        for value in algebra.constants.values():
            members[value] = True

        fresh = members & ~old
        while fresh.any():
            grown = members.copy()
            old_elements = np.flatnonzero(old)
            fresh_elements = np.flatnonzero(fresh)
            all_elements = np.flatnonzero(members)
            for symbol in algebra.signature.operations:
                table = algebra.table(symbol.name)
                for position in range(symbol.arity):
                    ranges = (
                        [old_elements] * position
                        + [fresh_elements]
                        + [all_elements] * (symbol.arity - position - 1)
                    )
                    if any(r.size == 0 for r in ranges):
                        continue
                    grown[table[np.ix_(*ranges)].ravel()] = True
            old = members
            fresh = grown & ~members
            members = grown

        return frozenset(int(e) for e in np.flatnonzero(members))

    def constants_subalgebra(self, algebra: FiniteAlgebra) -> FrozenSet[int]:
        return self.subalgebra_closure(algebra, ())

    def check_homomorphism(
        self,
        domain: FiniteAlgebra,
        codomain: FiniteAlgebra,
        mapping: Sequence[int]
    ) -> Union[Homomorphism, HomomorphismViolation]:
        values = validate_map(domain, codomain, mapping)
        violation = first_violation(domain, codomain, values)
        if violation is not None:
            return violation
        return Homomorphism(domain, codomain, values)

    def all_homomorphisms(
        self,
        domain: FiniteAlgebra,
        codomain: FiniteAlgebra,
        budget: Optional[int] = None
    ) -> List[Homomorphism]:
        """Every homomorphism, in lexicographic order of the maps; `budget` bounds the maps tried."""
        budget = budget or self.max_table_size
        count = codomain.size ** domain.size
        if count > budget:
            raise BudgetExceededError(
                self.MAP_BUDGET_EXCEEDED.format(codomain.size, domain.size, budget), budget
            )
        found = []
        for mapping in itertools.product(range(codomain.size), repeat=domain.size):
            values = np.asarray(mapping, dtype=np.int64)
            if first_violation(domain, codomain, values) is None:
                found.append(Homomorphism(domain, codomain, values))
        return found

    def induced_subalgebra(
        self,
        algebra: FiniteAlgebra,
        elements: Iterable[int]
    ) -> Tuple[FiniteAlgebra, Homomorphism]:
        chosen = sorted(set(int(e) for e in elements))
        if not chosen or not algebra.is_closed(chosen):
            raise AlgebraValidationError(self.NOT_CLOSED.format(chosen, algebra.name))

        position = np.full(algebra.size, -1, dtype=np.int64)
        position[chosen] = np.arange(len(chosen))
        subset = np.asarray(chosen)
        tables = {}
        for symbol in algebra.signature:
            table = algebra.table(symbol.name)
            if symbol.arity == 0:
                tables[symbol.name] = [int(position[table[()]])]
            else:
                tables[symbol.name] = position[table[np.ix_(*([subset] * symbol.arity))]]

        sub = FiniteAlgebra(algebra.signature, len(chosen), tables, name=f"{algebra.name}|sub")
        return sub, Homomorphism(sub, algebra, subset)

    def image_factorization(self, morphism: Homomorphism) -> ImageFactorization:
        image, inclusion = self.induced_subalgebra(morphism.codomain, morphism.image())
        position = {int(value): index for index, value in enumerate(inclusion.map)}
        surjection = Homomorphism(
            morphism.domain, image, [position[int(value)] for value in morphism.map]
        )
        return ImageFactorization(surjection, image, inclusion)

    def congruence_generated(
        self,
        algebra: FiniteAlgebra,
        pairs: Iterable[Tuple[int, int]]
    ) -> Congruence:
        blocks = DisjointSubsets(algebra.size)
        pending = deque()

        def merge(left: int, right: int) -> None:
            low, high = blocks.unify(left, right)
            if low != high:
                pending.append((low, high))

        for left, right in pairs:
            self._check_element(algebra, left)
            self._check_element(algebra, right)
            merge(int(left), int(right))

        # every merged pair is pushed through each basic translation
        operations = [(algebra.table(s.name), s.arity) for s in algebra.signature.operations]
        while pending:
            left, right = pending.popleft()
            for table, arity in operations:
                for position in range(arity):
                    lefts = np.take(table, left, axis=position).ravel()
                    rights = np.take(table, right, axis=position).ravel()
                    for u, v in zip(lefts.tolist(), rights.tolist()):
                        if u != v:
                            merge(u, v)

        return Congruence(algebra, blocks.labels())

    def join(self, first: Congruence, second: Congruence) -> Congruence:
        blocks = DisjointSubsets(first.algebra.size)
        for congruence in (first, second):
            representative = {}
            for element, label in enumerate(congruence.partition):
                blocks.unify(representative.setdefault(label, element), element)
        return Congruence(first.algebra, blocks.labels())

    def all_congruences(self, algebra: FiniteAlgebra) -> List[Congruence]:
        if algebra.size > self.max_congruence_size:
            raise BudgetExceededError(
                self.CONGRUENCE_BUDGET_EXCEEDED.format(algebra.size, self.max_congruence_size),
                self.max_congruence_size
            )

        discrete = Congruence(algebra, range(algebra.size))
        principals = []
        for left, right in itertools.combinations(algebra.carrier, 2):
            principal = self.congruence_generated(algebra, [(left, right)])
            if principal not in principals:
                principals.append(principal)

        found = {discrete, *principals}
        frontier = list(principals)
        while frontier:
            discovered = []
            for congruence in frontier:
                for principal in principals:
                    joined = self.join(congruence, principal)
                    if joined not in found:
                        found.add(joined)
                        discovered.append(joined)
            frontier = discovered

        logger.debug("Algebra %s has %d congruences", algebra.name, len(found))
        return sorted(found, key=Congruence.sort_key)

    def is_compatible_partition(self, algebra: FiniteAlgebra, partition: Sequence[int]) -> bool:
        candidate = Congruence(algebra, partition)
        pairs = [(a, b) for a in algebra.carrier for b in algebra.carrier if candidate.related(a, b)]
        return self.congruence_generated(algebra, pairs) == candidate

    def preimage_congruence(self, morphism: Homomorphism, congruence: Congruence) -> Congruence:
        labels = np.asarray(congruence.partition)[morphism.map]
        return Congruence(morphism.domain, labels.tolist())

    def _check_element(self, algebra: FiniteAlgebra, element: int) -> None:
        if not 0 <= element < algebra.size:
            raise AlgebraValidationError(self.ELEMENT_OUT_OF_RANGE.format(element, algebra.size))
