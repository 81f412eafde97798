import logging
from typing import Iterable, List, Optional

from app.config.settings import settings
from app.enums.verdict_enum import VerdictEnum
from app.models.algebra_model import FiniteAlgebra
from app.models.homomorphism_model import Homomorphism
from app.models.relation_model import Relation
from app.schemas.context_schema import IdealContext
from app.schemas.law_schema import LawReport, LawResult
from app.services.algebra_service import AlgebraService
from app.services.checker_service import CheckerService
from app.services.context_service import ContextService
from app.services.relation_service import RelationService
from app.utils.exceptions import BudgetExceededError

logger = logging.getLogger(__name__)


class LawService:
    """Checks the laws of the star calculus on every relation of one algebra."""

    STAR_OF_COMPOSITE = "star-of-composite"
    STAR_VIA_PULLBACK = "star-via-pullback"
    STAR_IDEMPOTENT = "star-idempotent"
    INVERSE_IMAGE_STAR = "inverse-image-star"
    KERNEL_PAIR_INVERSE_IMAGE = "kernel-pair-inverse-image"
    DIAGONAL_PULLBACK = "diagonal-pullback"

    def __init__(
        self,
        algebra_service: AlgebraService,
        context_service: ContextService,
        relation_service: RelationService,
        checker_service: CheckerService,
        max_relations: int = settings.max_relations
    ):
        self.algebra_service = algebra_service
        self.context_service = context_service
        self.relation_service = relation_service
        self.checker_service = checker_service
        self.max_relations = max_relations

    def check_laws(
        self,
        context: IdealContext,
        algebra: FiniteAlgebra,
        max_relations: Optional[int] = None
    ) -> LawReport:
        budget = max_relations or self.max_relations
        self.context_service.validate(context, algebra)
        enumeration = self.checker_service.enumerate_compatible(algebra, budget)
        relations = enumeration.relations
        truncated = enumeration.truncated
        stars = [self.relation_service.star(context, relation) for relation in relations]
        reflexive = [
            relation for relation in relations
            if self.relation_service.relation_predicates(relation).reflexive
        ]

        morphisms: List[Homomorphism] = []
        maps_truncated = False
        try:
            morphisms = [
                morphism for morphism in self.algebra_service.all_homomorphisms(
                    algebra, algebra, self.algebra_service.max_table_size
                )
                if self.context_service.preserves_base(context, morphism)
            ]
        except BudgetExceededError as error:
            logger.warning("Endomorphism laws skipped: %s", error)
            maps_truncated = True

        laws = [
            self._law(
                self.STAR_OF_COMPOSITE,
                truncated,
                self._star_of_composite(context, relations, stars),
                len(relations) ** 2,
            ),
            self._law(self.STAR_VIA_PULLBACK, truncated, (
                f"R={relation}"
                for relation, star in zip(relations, stars)
                if self.relation_service.star_via_pullback(context, relation) != star
            ), len(relations)),
            self._law(self.STAR_IDEMPOTENT, truncated, (
                f"R={relation}"
                for relation, star in zip(relations, stars)
                if self.relation_service.star(context, star) != star or not star <= relation
            ), len(relations)),
            self._law(
                self.INVERSE_IMAGE_STAR,
                truncated or maps_truncated,
                self._inverse_image_star(context, morphisms, relations, stars),
                len(morphisms) * len(relations),
            ),
            self._law(self.KERNEL_PAIR_INVERSE_IMAGE, maps_truncated, (
                f"f={morphism.map.tolist()}"
                for morphism in morphisms
                if self.relation_service.kernel_pair(morphism)
                != self.relation_service.inverse_image(morphism, self.relation_service.diagonal(algebra))
            ), len(morphisms)),
            self._law(self.DIAGONAL_PULLBACK, truncated, self._diagonal_pullback(reflexive), len(reflexive)),
        ]
        return LawReport(
            algebra=algebra.name,
            context=str(context),
            relations=len(relations),
            morphisms=len(morphisms),
            laws=laws,
        )

    def _star_of_composite(self, context: IdealContext, relations: List[Relation], stars: List[Relation]):
        compose, star = self.relation_service.compose, self.relation_service.star
        for first in relations:
            for second, second_star in zip(relations, stars):
                # (RS)* = R S* with RS the composite "S then R"
                if star(context, compose(second, first)) != compose(second_star, first):
                    yield f"R={first} S={second}"

    def _inverse_image_star(
        self,
        context: IdealContext,
        morphisms: List[Homomorphism],
        relations: List[Relation],
        stars: List[Relation]
    ):
        inverse_image, star = self.relation_service.inverse_image, self.relation_service.star
        for morphism in morphisms:
            for relation, relation_star in zip(relations, stars):
                if star(context, inverse_image(morphism, relation)) != star(
                    context, inverse_image(morphism, relation_star)
                ):
                    yield f"f={morphism.map.tolist()} S={relation}"

    def _diagonal_pullback(self, reflexive: List[Relation]):
        for relation in reflexive:
            forward, backward = self.relation_service.diagonal_pullback_check(relation)
            if not (forward and backward):
                yield f"E={relation}"

    def _law(
        self,
        name: str,
        truncated: bool,
        failures: Iterable[str],
        examined: int
    ) -> LawResult:
        """Stops at the first witness produced by `failures`; `examined` counts all instances."""
        for witness in failures:
            return LawResult(name=name, verdict=VerdictEnum.FAIL, examined=examined, truncated=truncated, witness=witness)
        verdict = VerdictEnum.INCONCLUSIVE if truncated else VerdictEnum.PASS
        return LawResult(name=name, verdict=verdict, examined=examined, truncated=truncated)
