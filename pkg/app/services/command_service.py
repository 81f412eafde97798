import logging
from typing import Dict, List, NamedTuple, Tuple

from app.enums.command_enum import CommandEnum
from app.enums.context_kind_enum import ContextKindEnum
from app.enums.exit_code_enum import ExitCodeEnum
from app.enums.relation_property_enum import RelationPropertyEnum
from app.enums.term_kind_enum import TermKindEnum
from app.enums.verdict_enum import VerdictEnum
from app.models.algebra_model import FiniteAlgebra
from app.schemas.audit_schema import Counterexample
from app.schemas.context_schema import IdealContext
from app.schemas.report_schema import Check, Report
from app.schemas.run_config_schema import RunConfiguration
from app.services.algebra_service import AlgebraService
from app.services.checker_service import CheckerService
from app.services.context_service import ContextService
from app.services.law_service import LawService
from app.services.parser_service import ParserService
from app.services.relation_service import RelationService
from app.services.report_service import ReportService
from app.schemas.verdict_schema import IdentityVerdict
from app.services.term_service import TermSearch, TermService
from app.utils.encoding import coordinate_arrays
from app.utils.exceptions import BudgetExceededError, ContextError

logger = logging.getLogger(__name__)


class CommandOutcome(NamedTuple):
    exit_code: ExitCodeEnum
    lines: List[str]


def _pairs(pairs) -> str:
    return "{" + ",".join(f"({a},{b})" for a, b in pairs) + "}"


def _pair(pair) -> str:
    return f"({pair[0]},{pair[1]})"


class CommandService:
    TOTAL_CONTEXT_TERMS = "E-subtractive terms need a pointed or proto context, not 'total'."
    VARIETY_SCOPE = "scope: terms are certified for the variety generated by {}"
    COROLLARY_SKIPPED = "corollary graph for e={} not checked: {}"

    def __init__(
        self,
        parser_service: ParserService,
        algebra_service: AlgebraService,
        context_service: ContextService,
        relation_service: RelationService,
        checker_service: CheckerService,
        term_service: TermService,
        law_service: LawService,
        report_service: ReportService
    ):
        self.parser_service = parser_service
        self.algebra_service = algebra_service
        self.context_service = context_service
        self.relation_service = relation_service
        self.checker_service = checker_service
        self.term_service = term_service
        self.law_service = law_service
        self.report_service = report_service

    def run_command(self, config: RunConfiguration) -> CommandOutcome:
        algebra = self.parser_service.read_algebra(config.algebra)
        logger.info("Running %s on %s", config.command.value, algebra.name)
        builders = {
            CommandEnum.AUDIT: self._audit,
            CommandEnum.CHECK_RELATION: self._check_relation,
            CommandEnum.CHECK_IDENTITIES: self._check_identities,
            CommandEnum.FIND_TERMS: self._find_terms,
            CommandEnum.CONGRUENCES: self._congruences,
        }
        report = builders[config.command](config, algebra)
        return CommandOutcome(
            self.report_service.exit_code(report),
            self.report_service.render(report, config.output),
        )

    def _audit(self, config: RunConfiguration, algebra: FiniteAlgebra) -> Report:
        context = config.ideal_context(IdealContext.total())
        audit = self.checker_service.audit_algebra(context, algebra, config.max_relations)
        checks = []
        for condition in audit.conditions:
            first = condition.counterexamples[0] if condition.counterexamples else None
            details = [self._counterexample(example) for example in condition.counterexamples]
            if condition.note:
                details.append(f"note: {condition.note}")
            checks.append(Check(
                name=condition.name,
                verdict=condition.verdict,
                witness=self._witness(first) if first else None,
                details=details,
            ))
        notes = [f"reflexive compatible relations examined: {audit.relations_examined}"]
        if audit.truncated:
            notes.append("warning: an enumeration stopped at its budget")
        notes.append(f"scope: {audit.scope}")
        return Report(
            title=f"audit of {algebra.name} in context {audit.context}",
            checks=checks,
            notes=notes,
        )

    @staticmethod
    def _witness(example: Counterexample) -> str:
        if example.other is None:
            return f"{_pairs(example.relation)}:{_pair(example.witness)}"
        return f"{_pairs(example.relation)}|{_pairs(example.other)}:{_pair(example.witness)}"

    @staticmethod
    def _counterexample(example: Counterexample) -> str:
        if example.other is None:
            return f"R={_pairs(example.relation)} fails at {_pair(example.witness)}"
        return f"R={_pairs(example.relation)} S={_pairs(example.other)} differ at {_pair(example.witness)}"

    def _check_relation(self, config: RunConfiguration, algebra: FiniteAlgebra) -> Report:
        context = config.ideal_context(IdealContext.total())
        self.context_service.validate(context, algebra)
        relation = self.parser_service.read_relation(config.relation, algebra)
        predicates = self.relation_service.relation_predicates(relation)
        properties = config.properties or list(RelationPropertyEnum)

        checks = []
        for prop in properties:
            if prop == RelationPropertyEnum.LEFT_STAR_SYMMETRIC:
                verdict = self.checker_service.is_left_star_symmetric(context, relation)
            elif prop == RelationPropertyEnum.STAR_SYMMETRIC:
                verdict = self.checker_service.is_star_symmetric(context, relation)
            else:
                holds = getattr(predicates, prop.value)
                checks.append(Check(name=prop.value, verdict=VerdictEnum.PASS if holds else VerdictEnum.FAIL))
                continue
            checks.append(Check(
                name=prop.value,
                verdict=VerdictEnum.PASS if verdict.holds else VerdictEnum.FAIL,
                witness=_pair(verdict.witness) if verdict.witness else None,
            ))

        notes = [
            f"pairs: {relation}",
            f"compatible: {str(predicates.compatible).lower()}",
        ]
        if predicates.compatible:
            notes.append(f"star: {self.relation_service.star(context, relation)}")
        return Report(
            title=f"check-relation on {algebra.name} in context {context}",
            checks=checks,
            notes=notes,
        )

    def _check_identities(self, config: RunConfiguration, algebra: FiniteAlgebra) -> Report:
        context = config.ideal_context(IdealContext.total())
        laws = self.law_service.check_laws(context, algebra, config.max_relations)
        checks = [
            Check(
                name=law.name,
                verdict=law.verdict,
                witness=law.witness,
                details=[f"instances: {law.examined}"] + (["truncated"] if law.truncated else []),
            )
            for law in laws.laws
        ]
        return Report(
            title=f"check-identities on {algebra.name} in context {laws.context}",
            checks=checks,
            notes=[f"compatible relations: {laws.relations}", f"endomorphisms: {laws.morphisms}"],
        )

    def _find_terms(self, config: RunConfiguration, algebra: FiniteAlgebra) -> Report:
        skipped: List[str] = []
        if config.kind == TermKindEnum.MALTSEV:
            search = self.term_service.find_maltsev_term(algebra, config.clone_budget)
            verified = self.term_service.verify_search(search)
            checks = [self._term_check("maltsev", "p", search, verified)]
        else:
            context = config.ideal_context(IdealContext.proto())
            if context.kind == ContextKindEnum.TOTAL:
                raise ContextError(self.TOTAL_CONTEXT_TERMS)
            elements = list(self.context_service.null_class(context, algebra))
            search = self.term_service.find_e_subtractive_terms(algebra, elements, config.clone_budget)
            verified = self.term_service.verify_search(search)
            checks = [
                self._term_check(f"e-subtractive[e={e}]", f"s_{e}", search, verified)
                for e in elements
            ]
            corollary_checks, skipped = self._corollary_checks(config, algebra, search, elements)
            checks += corollary_checks

        certificate = self.term_service.certificate(algebra, search)
        notes = skipped + [
            f"clone size: {certificate.clone_size} ({'complete' if certificate.complete else 'not closed'})",
            self.VARIETY_SCOPE.format(algebra.name),
        ]
        return Report(
            title=f"find-terms {search.kind.value} on {algebra.name}",
            checks=checks,
            notes=notes,
        )

    def _term_check(
        self,
        name: str,
        label: str,
        search: TermSearch,
        verified: Dict[str, IdentityVerdict]
    ) -> Check:
        size = len(search.model)
        if label in search.found:
            operation = search.found[label]
            verdict = verified[label]
            if not verdict.holds:
                logger.error("Term %s for %s fails %s", operation, label, verdict.identity)
                return Check(
                    name=name,
                    verdict=VerdictEnum.FAIL,
                    witness=str(operation),
                    details=[f"identity {verdict.identity} fails at {verdict.assignment}"],
                )
            return Check(
                name=name,
                verdict=VerdictEnum.PASS,
                witness=str(operation),
                details=[f"table: {operation.table.tolist()}", "satisfies " + ", ".join(search.identities[label])],
            )
        identities = " and ".join(search.identities[label])
        if search.model.complete:
            return Check(
                name=name,
                verdict=VerdictEnum.FAIL,
                witness=f"exhausted-clone({size})",
                details=[f"none of the {size} term operations satisfies {identities}"],
            )
        return Check(
            name=name,
            verdict=VerdictEnum.INCONCLUSIVE,
            witness=f"incomplete-clone({size})",
            details=[f"the clone was not closed within {size} term operations"],
        )

    def _corollary_checks(
        self,
        config: RunConfiguration,
        algebra: FiniteAlgebra,
        search: TermSearch,
        elements: List[int]
    ) -> Tuple[List[Check], List[str]]:
        """Left star-symmetry of the graph F(x,y) => F(x) in the proto context, once every term is found.

        Returns the checks and one note per element whose free models exceed the clone budget.
        """
        if search.verdict != VerdictEnum.PASS or not algebra.signature.constants:
            return [], []
        checks, skipped = [], []
        for element in elements:
            try:
                graph = self.term_service.corollary_graph(algebra, element, config.clone_budget)
            except BudgetExceededError as error:
                logger.info("Corollary graph for e=%d skipped: %s", element, error)
                skipped.append(self.COROLLARY_SKIPPED.format(element, error))
                continue
            verdict = self.checker_service.graph_left_star_symmetric(
                IdealContext.proto(), graph.first, graph.second, config.sigma_budget
            )
            if verdict.verdict == VerdictEnum.PASS:
                y = graph.binary.find(coordinate_arrays(algebra.size, 2)[1])
                witness = f"sigma(y)={graph.binary.term(verdict.sigma[y])}" if y in verdict.sigma else None
            elif verdict.witness is not None:
                witness = str(graph.binary.term(verdict.witness))
            else:
                witness = None
            checks.append(Check(
                name=f"corollary-graph[e={element}]",
                verdict=verdict.verdict,
                witness=witness,
                details=[f"free models of sizes {len(graph.binary)} and {len(graph.unary)}; {verdict.nodes} search nodes"],
            ))
        return checks, skipped

    def _congruences(self, config: RunConfiguration, algebra: FiniteAlgebra) -> Report:
        congruences = self.algebra_service.all_congruences(algebra)
        return Report(
            title=f"congruences of {algebra.name} ({len(congruences)})",
            listing=[f"CONGRUENCE {congruence}" for congruence in congruences],
        )
