import logging
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence

import numpy as np

from app.config.settings import settings
from app.enums.term_kind_enum import TermKindEnum
from app.enums.verdict_enum import VerdictEnum
from app.models.algebra_model import FiniteAlgebra
from app.models.homomorphism_model import Homomorphism
from app.models.term_model import Constant, FreeAlgebraModel, TermOperation, Variable, variable_names
from app.schemas.term_schema import FoundTerm, TermSearchCertificate
from app.schemas.verdict_schema import IdentityVerdict
from app.services.algebra_service import AlgebraService
from app.services.identity_service import IdentityService
from app.utils.encoding import coordinate_arrays
from app.utils.exceptions import AlgebraValidationError, BudgetExceededError

logger = logging.getLogger(__name__)

# called with the model and a newly added element; True stops the closure
StopRule = Callable[[FreeAlgebraModel, int], bool]


class TermSearch:
    """Outcome of a search for term operations satisfying fixed identities."""

    def __init__(
        self,
        kind: TermKindEnum,
        model: FreeAlgebraModel,
        found: Dict[str, TermOperation],
        missing: List[str],
        identities: Dict[str, List[str]]
    ):
        self.kind = kind
        self.model = model
        self.found = found
        self.missing = missing
        self.identities = identities

    @property
    def verdict(self) -> VerdictEnum:
        if not self.missing:
            return VerdictEnum.PASS
        if self.model.complete:
            return VerdictEnum.FAIL
        return VerdictEnum.INCONCLUSIVE


class CorollaryGraph(NamedTuple):
    """The reflexive graph F(x,y) => F(x) given by y -> e and y -> x, split by x -> x."""

    binary: FreeAlgebraModel
    unary: FreeAlgebraModel
    first: Homomorphism
    second: Homomorphism
    splitting: Homomorphism


class TermService:
    ARITY_BUDGET_EXCEEDED = "Term operations of arity {} on size {} need {} entries, over the budget of {}."
    NO_CONSTANTS = "Algebra '{}' has no constants, so no E-subtractive terms are sought."
    NOT_IN_CONSTANTS = "Element {} is not generated by the constants of '{}'."
    INCOMPLETE_MODEL = "The {}-generated free model over '{}' did not close within {} elements."

    def __init__(
        self,
        algebra_service: AlgebraService,
        identity_service: IdentityService,
        clone_budget: int = settings.clone_budget,
        max_table_size: int = settings.max_table_size
    ):
        self.algebra_service = algebra_service
        self.identity_service = identity_service
        self.clone_budget = clone_budget
        self.max_table_size = max_table_size

    def free_term_operations(
        self,
        algebra: FiniteAlgebra,
        arity: int,
        budget: Optional[int] = None,
        stop: Optional[StopRule] = None
    ) -> FreeAlgebraModel:
        """Close projections and constants under the basic operations, round by round.

        Within a round, symbols are taken in signature order and argument tuples in
        lexicographic index order; only tuples touching an element of the previous
        round are evaluated.
        """
        budget = budget or self.clone_budget
        width = algebra.size ** arity
        if width > self.max_table_size:
            raise BudgetExceededError(
                self.ARITY_BUDGET_EXCEEDED.format(arity, algebra.size, width, self.max_table_size),
                self.max_table_size
            )

        model = FreeAlgebraModel(algebra, arity)
        leaves = [
            (row, Variable(name))
            for row, name in zip(coordinate_arrays(algebra.size, arity), variable_names(arity))
        ]
        leaves += [
            (np.full(width, value, dtype=np.int64), Constant(name))
            for name, value in algebra.constants.items()
        ]
        for row, leaf in leaves:
            element = model.add(row, None, (), leaf)
            if element is not None and stop is not None and stop(model, element):
                return model

        start = 0
        rounds = 0
        while start < len(model):
            end = len(model)
            rounds += 1
            for symbol in algebra.signature.operations:
                table = algebra.table(symbol.name)
                if self._close_symbol(model, table, symbol.name, symbol.arity, start, end, budget, stop):
                    return model
            logger.debug(
                "Clone of %s in %d variables: round %d added %d elements",
                algebra.name, arity, rounds, len(model) - end
            )
            start = end

        model.complete = True
        logger.info("Clone of %s in %d variables closed at %d elements", algebra.name, arity, len(model))
        return model

    def _close_symbol(
        self,
        model: FreeAlgebraModel,
        table: np.ndarray,
        symbol: str,
        arity: int,
        start: int,
        end: int,
        budget: int,
        stop: Optional[StopRule]
    ) -> bool:
        """One symbol of one round; True when the closure must stop."""
        rows = model.rows[:end]
        everything = np.arange(end)
        rest = np.ix_(*([everything] * (arity - 1))) if arity > 1 else ()
        for leading in range(end):
            arguments = (np.full((1,) * (arity - 1), leading),) + tuple(rest) if arity > 1 else (np.asarray(leading),)
            produced = table[tuple(rows[axis] for axis in arguments)].reshape(-1, model.width)
            if leading < start:
                # all-old tuples were evaluated in an earlier round
                touched = np.zeros((end,) * (arity - 1), dtype=bool)
                for axis in rest:
                    touched |= axis >= start
                candidates = np.flatnonzero(touched.reshape(-1))
            else:
                candidates = np.arange(produced.shape[0])
            for position in candidates.tolist():
                row = produced[position]
                if model.find(row) is not None:
                    continue
                if len(model) >= budget:
                    logger.warning("Clone of %s stopped at the budget of %d elements", model.base.name, budget)
                    return True
                tail = np.unravel_index(position, (end,) * (arity - 1)) if arity > 1 else ()
                element = model.add(row, symbol, (leading,) + tuple(int(i) for i in tail))
                if stop is not None and stop(model, element):
                    return True
        return False

    def find_e_subtractive_terms(
        self,
        algebra: FiniteAlgebra,
        elements: Optional[Iterable[int]] = None,
        budget: Optional[int] = None
    ) -> TermSearch:
        """For every e, the first binary term with s(x,x)=e and s(x,e)=x.

        `elements` defaults to the subalgebra generated by the constants.
        """
        generated = self.algebra_service.constants_subalgebra(algebra)
        if elements is None:
            if not algebra.signature.constants:
                raise AlgebraValidationError(self.NO_CONSTANTS.format(algebra.name))
            wanted = sorted(generated)
        else:
            wanted = sorted(set(int(e) for e in elements))
            for element in wanted:
                if generated and element not in generated:
                    raise AlgebraValidationError(self.NOT_IN_CONSTANTS.format(element, algebra.name))

        size = algebra.size
        carrier = np.arange(size)
        diagonal = carrier * size + carrier
        labels = {e: f"s_{e}" for e in wanted}

        def matches(row: np.ndarray, e: int) -> bool:
            return bool((row[diagonal] == e).all() and (row[carrier * size + e] == carrier).all())

        found_elements: Dict[int, int] = {}

        def stop(model: FreeAlgebraModel, element: int) -> bool:
            row = model.row(element)
            for e in wanted:
                if e not in found_elements and matches(row, e):
                    found_elements[e] = element
            return len(found_elements) == len(wanted)

        model = self.free_term_operations(algebra, 2, budget, stop)
        identities = {labels[e]: [f"s(x,x)={e}", f"s(x,{e})=x"] for e in wanted}
        search = TermSearch(
            TermKindEnum.E_SUBTRACTIVE,
            model,
            {labels[e]: model.operation(found_elements[e]) for e in wanted if e in found_elements},
            [labels[e] for e in wanted if e not in found_elements],
            identities,
        )
        logger.debug("E-subtractive search on %s: %s", algebra.name, search.verdict.value)
        return search

    def find_maltsev_term(self, algebra: FiniteAlgebra, budget: Optional[int] = None) -> TermSearch:
        size = algebra.size
        first, second, third = coordinate_arrays(size, 3)
        left = first == second
        right = second == third
        found: List[int] = []

        def stop(model: FreeAlgebraModel, element: int) -> bool:
            row = model.row(element)
            if (row[left] == third[left]).all() and (row[right] == first[right]).all():
                found.append(element)
                return True
            return False

        model = self.free_term_operations(algebra, 3, budget, stop)
        return TermSearch(
            TermKindEnum.MALTSEV,
            model,
            {"p": model.operation(found[0])} if found else {},
            [] if found else ["p"],
            {"p": ["p(x,x,y)=y", "p(x,y,y)=x"]},
        )

    def corollary_graph(
        self,
        algebra: FiniteAlgebra,
        element: int,
        budget: Optional[int] = None
    ) -> CorollaryGraph:
        """The substitutions t(x,y) -> t(x,e) and t(x,y) -> t(x,x) between the free models."""
        if element not in self.algebra_service.constants_subalgebra(algebra):
            raise AlgebraValidationError(self.NOT_IN_CONSTANTS.format(element, algebra.name))
        budget = min(budget or self.clone_budget, self._materializable_size(algebra))
        binary = self.free_term_operations(algebra, 2, budget)
        unary = self.free_term_operations(algebra, 1, budget)
        for model in (binary, unary):
            if not model.complete:
                raise BudgetExceededError(
                    self.INCOMPLETE_MODEL.format(model.generators, algebra.name, budget), budget
                )
        binary_algebra = binary.as_algebra(self.max_table_size)
        unary_algebra = unary.as_algebra(self.max_table_size)

        def image(model: FreeAlgebraModel, source: FreeAlgebraModel, picker) -> List[int]:
            return [model.find(source.substitute(t, picker)) for t in range(len(source))]

        first = Homomorphism(binary_algebra, unary_algebra, image(unary, binary, lambda t: t[:, element]))
        second = Homomorphism(binary_algebra, unary_algebra, image(unary, binary, np.diagonal))
        splitting = Homomorphism(
            unary_algebra,
            binary_algebra,
            image(binary, unary, lambda u: np.repeat(u[:, None], algebra.size, axis=1)),
        )
        return CorollaryGraph(binary, unary, first, second, splitting)

    def _materializable_size(self, algebra: FiniteAlgebra) -> int:
        """Largest model whose operation tables fit the table budget."""
        arity = algebra.signature.max_arity
        if arity == 0:
            return self.clone_budget
        limit = 1
        while (limit + 1) ** arity <= self.max_table_size:
            limit += 1
        return limit

    def verify_term_identities(
        self,
        operation: TermOperation,
        identities: Sequence[str],
        name: str = "s"
    ) -> IdentityVerdict:
        return self.identity_service.verify(
            operation.algebra, identities, {name: operation.shaped()}
        )

    def verify_search(self, search: TermSearch) -> Dict[str, IdentityVerdict]:
        """Re-check every found term against its identities by total evaluation."""
        verdicts = {}
        for label, operation in search.found.items():
            name = "p" if search.kind == TermKindEnum.MALTSEV else "s"
            verdicts[label] = self.verify_term_identities(operation, search.identities[label], name)
        return verdicts

    def certificate(self, algebra: FiniteAlgebra, search: TermSearch) -> TermSearchCertificate:
        return TermSearchCertificate(
            kind=search.kind,
            algebra=algebra.name,
            verdict=search.verdict,
            clone_size=len(search.model),
            complete=search.model.complete,
            found=[
                FoundTerm(label=label, term=str(operation), table=operation.table.tolist())
                for label, operation in search.found.items()
            ],
            missing=search.missing,
        )
