import logging
from collections import OrderedDict
from typing import FrozenSet, Tuple

from app.enums.context_kind_enum import ContextKindEnum
from app.models.algebra_model import FiniteAlgebra
from app.models.homomorphism_model import Homomorphism
from app.models.null_class_model import NullClass
from app.schemas.context_schema import IdealContext
from app.services.algebra_service import AlgebraService
from app.utils.exceptions import ContextError

logger = logging.getLogger(__name__)


class ContextService:
    UNKNOWN_BASE = "Base point '{}' is neither an element index nor a constant of '{}'."
    BASE_OUT_OF_RANGE = "Base point {} lies outside the carrier of '{}' (size {})."
    BASE_NOT_SUBALGEBRA = "Base point {} of '{}' is not a one-element subalgebra."
    NO_CONSTANTS = "The proto-pointed context needs at least one constant; '{}' has none."
    BASE_NOT_PRESERVED = "Morphism {} -> {} does not send the base point to the base point."

    def __init__(self, algebra_service: AlgebraService, cache_size: int = 64):
        self.algebra_service = algebra_service
        self.cache_size = cache_size
        # least recently used entry first
        self._null_classes: "OrderedDict[Tuple[IdealContext, FiniteAlgebra], NullClass]" = OrderedDict()

    def base_element(self, context: IdealContext, algebra: FiniteAlgebra) -> int:
        base = context.base
        if base.isdigit():
            element = int(base)
            if element >= algebra.size:
                raise ContextError(self.BASE_OUT_OF_RANGE.format(element, algebra.name, algebra.size))
            return element
        constants = algebra.constants
        if base not in constants:
            raise ContextError(self.UNKNOWN_BASE.format(base, algebra.name))
        return constants[base]

    def validate(self, context: IdealContext, algebra: FiniteAlgebra) -> None:
        self.null_class(context, algebra)

    def null_class(self, context: IdealContext, algebra: FiniteAlgebra) -> NullClass:
        key = (context, algebra)
        cached = self._null_classes.get(key)
        if cached is not None and cached.algebra is algebra:
            self._null_classes.move_to_end(key)
            return cached

        if context.kind == ContextKindEnum.TOTAL:
            elements = algebra.carrier
        elif context.kind == ContextKindEnum.POINTED:
            base = self.base_element(context, algebra)
            if not algebra.is_closed([base]):
                raise ContextError(self.BASE_NOT_SUBALGEBRA.format(base, algebra.name))
            elements = [base]
        else:
            if not algebra.signature.constants:
                raise ContextError(self.NO_CONSTANTS.format(algebra.name))
            elements = self.algebra_service.constants_subalgebra(algebra)

        null_class = NullClass(algebra, elements)
        self._null_classes[key] = null_class
        self._null_classes.move_to_end(key)
        while len(self._null_classes) > self.cache_size:
            self._null_classes.popitem(last=False)
        return null_class

    def is_null_morphism(self, context: IdealContext, morphism: Homomorphism) -> bool:
        trivial = self.null_class(context, morphism.codomain)
        return all(value in trivial for value in morphism.image())

    def n_kernel(self, context: IdealContext, morphism: Homomorphism) -> FrozenSet[int]:
        """Largest subuniverse of the domain mapped into the null class of the codomain."""
        trivial = self.null_class(context, morphism.codomain).mask()
        return frozenset(int(x) for x in morphism.domain.carrier if trivial[morphism.map[x]])

    def preserves_base(self, context: IdealContext, morphism: Homomorphism) -> bool:
        if context.kind != ContextKindEnum.POINTED:
            return True
        source = self.base_element(context, morphism.domain)
        target = self.base_element(context, morphism.codomain)
        return morphism(source) == target

    def is_saturating(self, context: IdealContext, morphism: Homomorphism) -> bool:
        """Whether f restricted to K_X maps onto K_Y."""
        if not self.preserves_base(context, morphism):
            raise ContextError(
                self.BASE_NOT_PRESERVED.format(morphism.domain.name, morphism.codomain.name)
            )
        source = self.null_class(context, morphism.domain)
        target = self.null_class(context, morphism.codomain)
        reached = {morphism(element) for element in source}
        return reached == target.elements
