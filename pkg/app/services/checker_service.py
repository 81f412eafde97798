import logging
from collections import deque
from typing import List, NamedTuple, Optional

import numpy as np

from app.config.settings import settings
from app.enums.verdict_enum import VerdictEnum
from app.models.algebra_model import FiniteAlgebra
from app.models.homomorphism_model import Homomorphism
from app.models.relation_model import Relation
from app.schemas.audit_schema import AuditReport, ConditionResult, Counterexample
from app.schemas.context_schema import IdealContext
from app.schemas.verdict_schema import GraphSymmetryVerdict, PermutabilityVerdict, SymmetryVerdict
from app.services.algebra_service import AlgebraService
from app.services.context_service import ContextService
from app.services.relation_service import RelationService
from app.utils.exceptions import BudgetExceededError, RelationError

logger = logging.getLogger(__name__)


class RelationEnumeration(NamedTuple):
    relations: List[Relation]
    truncated: bool


class _SearchExhausted(Exception):
    pass


class CheckerService:
    LEGS_MISMATCH = "Both legs of a graph must share domain and codomain."
    CONDITION_NAMES = {
        1: "congruence-star-permutable",
        2: "equivalence-star-permutable",
        3: "reflexive-left-star-symmetric",
        4: "reflexive-star-symmetric",
    }
    EQUIVALENCE_NOTE = "compatible equivalence relations coincide with congruences in a variety"
    CONGRUENCE_BUDGET_NOTE = "congruence enumeration skipped: {}"
    PASS_SCOPE = "verdicts hold for {name} itself; a FAIL would refute the variety generated by {name}"
    FAIL_SCOPE = "the failure refutes 2-star-permutability of the variety generated by {name}"

    def __init__(
        self,
        algebra_service: AlgebraService,
        context_service: ContextService,
        relation_service: RelationService,
        max_relations: int = settings.max_relations,
        sigma_budget: int = settings.sigma_budget
    ):
        self.algebra_service = algebra_service
        self.context_service = context_service
        self.relation_service = relation_service
        self.max_relations = max_relations
        self.sigma_budget = sigma_budget

    def is_left_star_symmetric(self, context: IdealContext, relation: Relation) -> SymmetryVerdict:
        starred = self.relation_service.star(context, relation)
        violations = np.argwhere(starred.matrix & ~relation.matrix.T)
        if violations.size:
            return SymmetryVerdict(holds=False, witness=tuple(int(v) for v in violations[0]))
        return SymmetryVerdict(holds=True)

    def is_star_symmetric(self, context: IdealContext, relation: Relation) -> SymmetryVerdict:
        verdict = self.is_left_star_symmetric(context, relation)
        if not verdict.holds:
            return verdict
        return self.is_left_star_symmetric(context, self.relation_service.opposite(relation))

    def check_star_permutes(
        self,
        context: IdealContext,
        first: Relation,
        second: Relation
    ) -> PermutabilityVerdict:
        compose, star = self.relation_service.compose, self.relation_service.star
        # R S* is "S* then R" in diagram order
        left = compose(star(context, second), first)
        right = compose(star(context, first), second)
        difference = np.argwhere(left.matrix ^ right.matrix)
        witness = tuple(int(v) for v in difference[0]) if difference.size else None
        return PermutabilityVerdict(
            holds=witness is None,
            witness=witness,
            first_composite=left.pairs(),
            second_composite=right.pairs(),
        )

    def graph_left_star_symmetric(
        self,
        context: IdealContext,
        first: Homomorphism,
        second: Homomorphism,
        budget: Optional[int] = None
    ) -> GraphSymmetryVerdict:
        """Search a homomorphism sigma between the N-kernels of the legs that swaps them."""
        if first.domain != second.domain or first.codomain != second.codomain:
            raise RelationError(self.LEGS_MISMATCH)
        budget = budget or self.sigma_budget
        graph = first.domain
        source = sorted(self.context_service.n_kernel(context, first))
        target = sorted(self.context_service.n_kernel(context, second))

        # admissible[t, u]: u may serve as sigma(t)
        first_map, second_map = first.map, second.map
        admissible = np.zeros((graph.size, graph.size), dtype=bool)
        if target:
            targets = np.asarray(target)
            for element in source:
                admissible[element, targets] = (
                    (first_map[targets] == second_map[element])
                    & (second_map[targets] == first_map[element])
                )
        for element in source:
            if not admissible[element].any():
                return GraphSymmetryVerdict(verdict=VerdictEnum.FAIL, witness=element)

        sigma = np.full(graph.size, -1, dtype=np.int64)
        forced = sorted(set(graph.constants.values()))
        for value in forced:
            if not admissible[value, value]:
                return GraphSymmetryVerdict(verdict=VerdictEnum.FAIL, witness=value)
            sigma[value] = value
        if not self._propagate(graph, sigma, np.asarray(forced, dtype=np.int64), admissible):
            return GraphSymmetryVerdict(verdict=VerdictEnum.FAIL)

        nodes = 0

        def search(current: np.ndarray) -> Optional[np.ndarray]:
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise _SearchExhausted()
            pending = next((element for element in source if current[element] < 0), None)
            if pending is None:
                return current
            for image in np.flatnonzero(admissible[pending]).tolist():
                trial = current.copy()
                trial[pending] = image
                if self._propagate(graph, trial, np.asarray([pending]), admissible):
                    found = search(trial)
                    if found is not None:
                        return found
            return None

        try:
            solution = search(sigma)
        except _SearchExhausted:
            logger.info("Sigma search stopped after %d nodes", budget)
            return GraphSymmetryVerdict(verdict=VerdictEnum.INCONCLUSIVE, nodes=budget)

        if solution is None:
            logger.debug("No sigma exists; %d nodes visited", nodes)
            return GraphSymmetryVerdict(verdict=VerdictEnum.FAIL, nodes=nodes)
        return GraphSymmetryVerdict(
            verdict=VerdictEnum.PASS,
            sigma={element: int(solution[element]) for element in source},
            nodes=nodes,
        )

    def _propagate(
        self,
        graph: FiniteAlgebra,
        sigma: np.ndarray,
        fresh: np.ndarray,
        admissible: np.ndarray
    ) -> bool:
        """Extend `sigma` in place along every operation applied to assigned elements,
        starting from the newly assigned `fresh`; False on a conflict."""
        old = np.flatnonzero(sigma >= 0)
        old = old[~np.isin(old, fresh)]
        while fresh.size:
            assigned = np.flatnonzero(sigma >= 0)
            discovered = []
            for symbol in graph.signature.operations:
                table = graph.table(symbol.name)
                for position in range(symbol.arity):
                    ranges = [old] * position + [fresh] + [assigned] * (symbol.arity - position - 1)
                    if any(r.size == 0 for r in ranges):
                        continue
                    results = table[np.ix_(*ranges)].ravel()
                    images = table[np.ix_(*(sigma[r] for r in ranges))].ravel()
                    known = sigma[results]
                    if ((known >= 0) & (known != images)).any():
                        return False
                    unknown = known < 0
                    results, images = results[unknown], images[unknown]
                    if not admissible[results, images].all():
                        return False
                    sigma[results] = images
                    if (sigma[results] != images).any():
                        return False
                    discovered.append(results)
            old = assigned
            fresh = np.unique(np.concatenate(discovered)) if discovered else np.empty(0, dtype=np.int64)
        return True

    def enumerate_reflexive_compatible(
        self,
        algebra: FiniteAlgebra,
        budget: Optional[int] = None
    ) -> RelationEnumeration:
        return self.enumerate_compatible(algebra, budget, reflexive=True)

    def enumerate_compatible(
        self,
        algebra: FiniteAlgebra,
        budget: Optional[int] = None,
        reflexive: bool = False
    ) -> RelationEnumeration:
        """Every subuniverse of A x A (containing the diagonal when `reflexive`),
        breadth first from the least one by adding one pair at a time and closing."""
        budget = budget or self.max_relations
        size = algebra.size
        square = self.algebra_service.direct_power(algebra, 2)
        seed = [element * size + element for element in algebra.carrier] if reflexive else []
        start = self.algebra_service.subalgebra_closure(square, seed)

        seen = {start}
        queue = deque([start])
        truncated = False
        while queue and not truncated:
            current = queue.popleft()
            for code in square.carrier:
                if code in current:
                    continue
                grown = self.algebra_service.subalgebra_closure(square, current | {code}, closed=current)
                if grown in seen:
                    continue
                if len(seen) >= budget:
                    truncated = True
                    logger.warning(
                        "Relation enumeration on %s truncated at %d relations", algebra.name, budget
                    )
                    break
                seen.add(grown)
                queue.append(grown)

        relations = []
        for codes in seen:
            matrix = np.zeros((size, size), dtype=bool)
            for code in codes:
                matrix[divmod(code, size)] = True
            relations.append(Relation(algebra, algebra, matrix, compatible=True))
        relations.sort(key=Relation.key)
        return RelationEnumeration(relations, truncated)

    def audit_algebra(
        self,
        context: IdealContext,
        algebra: FiniteAlgebra,
        max_relations: Optional[int] = None
    ) -> AuditReport:
        self.context_service.validate(context, algebra)
        conditions = []

        try:
            congruences = [
                Relation(algebra, algebra, congruence.matrix(), compatible=True)
                for congruence in self.algebra_service.all_congruences(algebra)
            ]
            conditions.append(self._permutability_condition(1, context, congruences, truncated=False))
        except BudgetExceededError as error:
            conditions.append(ConditionResult(
                condition=1,
                name=self.CONDITION_NAMES[1],
                verdict=VerdictEnum.INCONCLUSIVE,
                truncated=True,
                note=self.CONGRUENCE_BUDGET_NOTE.format(error),
            ))

        enumeration = self.enumerate_reflexive_compatible(algebra, max_relations)
        equivalences = [
            relation for relation in enumeration.relations
            if self._is_equivalence(relation)
        ]
        second = self._permutability_condition(2, context, equivalences, enumeration.truncated)
        second.note = self.EQUIVALENCE_NOTE
        conditions.append(second)
        conditions.append(self._symmetry_condition(
            3, enumeration, lambda relation: self.is_left_star_symmetric(context, relation)
        ))
        conditions.append(self._symmetry_condition(
            4, enumeration, lambda relation: self.is_star_symmetric(context, relation)
        ))

        failed = any(condition.verdict == VerdictEnum.FAIL for condition in conditions)
        scope = (self.FAIL_SCOPE if failed else self.PASS_SCOPE).format(name=algebra.name)
        return AuditReport(
            algebra=algebra.name,
            context=str(context),
            conditions=conditions,
            relations_examined=len(enumeration.relations),
            truncated=any(condition.truncated for condition in conditions),
            scope=scope,
        )

    def _is_equivalence(self, relation: Relation) -> bool:
        predicates = self.relation_service.relation_predicates(relation)
        return predicates.reflexive and predicates.symmetric and predicates.transitive

    def _permutability_condition(
        self,
        condition: int,
        context: IdealContext,
        relations: List[Relation],
        truncated: bool
    ) -> ConditionResult:
        counterexamples = []
        for first in relations:
            for second in relations:
                verdict = self.check_star_permutes(context, first, second)
                if not verdict.holds:
                    counterexamples.append(Counterexample(
                        relation=first.pairs(), other=second.pairs(), witness=verdict.witness
                    ))
        return ConditionResult(
            condition=condition,
            name=self.CONDITION_NAMES[condition],
            verdict=self._verdict(counterexamples, truncated),
            examined=len(relations) ** 2,
            truncated=truncated,
            counterexamples=counterexamples,
        )

    def _symmetry_condition(self, condition: int, enumeration: RelationEnumeration, check) -> ConditionResult:
        counterexamples = []
        for relation in enumeration.relations:
            verdict = check(relation)
            if not verdict.holds:
                counterexamples.append(Counterexample(relation=relation.pairs(), witness=verdict.witness))
        return ConditionResult(
            condition=condition,
            name=self.CONDITION_NAMES[condition],
            verdict=self._verdict(counterexamples, enumeration.truncated),
            examined=len(enumeration.relations),
            truncated=enumeration.truncated,
            counterexamples=counterexamples,
        )

    @staticmethod
    def _verdict(counterexamples: List[Counterexample], truncated: bool) -> VerdictEnum:
        if counterexamples:
            return VerdictEnum.FAIL
        if truncated:
            return VerdictEnum.INCONCLUSIVE
        return VerdictEnum.PASS
