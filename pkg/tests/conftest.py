from pathlib import Path

import pytest

from app.models.algebra_model import FiniteAlgebra, Signature
from app.services.algebra_service import AlgebraService
from app.services.checker_service import CheckerService
from app.services.context_service import ContextService
from app.services.identity_service import IdentityService
from app.services.law_service import LawService
from app.services.parser_service import ParserService
from app.services.relation_service import RelationService
from app.services.term_service import TermService

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
GOLDEN = CORPUS / "golden"


@pytest.fixture
def corpus_dir():
    return CORPUS


@pytest.fixture
def golden_dir():
    return GOLDEN


@pytest.fixture
def parser_service():
    return ParserService()


@pytest.fixture
def algebra_service():
    return AlgebraService()


@pytest.fixture
def context_service(algebra_service):
    return ContextService(algebra_service)


@pytest.fixture
def relation_service(context_service):
    return RelationService(context_service)


@pytest.fixture
def checker_service(algebra_service, context_service, relation_service):
    return CheckerService(algebra_service, context_service, relation_service)


@pytest.fixture
def identity_service():
    return IdentityService()


@pytest.fixture
def term_service(algebra_service, identity_service):
    return TermService(algebra_service, identity_service)


@pytest.fixture
def law_service(algebra_service, context_service, relation_service, checker_service):
    return LawService(algebra_service, context_service, relation_service, checker_service)


@pytest.fixture
def load_algebra(parser_service):
    def load(name: str) -> FiniteAlgebra:
        return parser_service.read_algebra(str(CORPUS / f"{name}.alg"))
    return load


@pytest.fixture
def plain_set():
    def build(size: int) -> FiniteAlgebra:
        return FiniteAlgebra(Signature(), size, {}, name=f"set{size}")
    return build


@pytest.fixture
def pointed_set():
    def build(size: int) -> FiniteAlgebra:
        return FiniteAlgebra(Signature([("e", 0)]), size, {"e": [0]}, name=f"pointed{size}")
    return build
