import pytest

from app.enums.verdict_enum import VerdictEnum
from app.schemas.context_schema import IdealContext
from app.services.algebra_service import AlgebraService
from app.services.law_service import LawService

LAWS = [
    LawService.STAR_OF_COMPOSITE,
    LawService.STAR_VIA_PULLBACK,
    LawService.STAR_IDEMPOTENT,
    LawService.INVERSE_IMAGE_STAR,
    LawService.KERNEL_PAIR_INVERSE_IMAGE,
    LawService.DIAGONAL_PULLBACK,
]


@pytest.mark.parametrize("name, specifier", [
    ("set2", "total"),
    ("set2", "pointed:0"),
    ("pointed2", "proto"),
    ("monoid01", "pointed:0"),
    ("bool2", "total"),
    ("ringZ2", "proto"),
    ("groupZ2", "proto"),
])
def test_laws_hold_on_corpus(law_service, load_algebra, name, specifier):
    report = law_service.check_laws(IdealContext.parse(specifier), load_algebra(name))

    assert [law.name for law in report.laws] == LAWS
    assert report.verdict == VerdictEnum.PASS
    assert all(law.witness is None for law in report.laws)


def test_law_report_counts_instances(law_service, plain_set):
    report = law_service.check_laws(IdealContext.total(), plain_set(2))

    assert report.relations == 16
    assert report.morphisms == 4
    assert report.laws[0].examined == 256
    assert report.laws[3].examined == 64


def test_pointed_context_keeps_base_preserving_maps(law_service, plain_set):
    report = law_service.check_laws(IdealContext.pointed(0), plain_set(2))
    assert report.morphisms == 2


def test_proto_relations_contain_the_constant_pair(law_service, load_algebra):
    report = law_service.check_laws(IdealContext.proto(), load_algebra("pointed2"))

    assert report.relations == 8
    assert report.morphisms == 2


def test_small_budget_leaves_laws_inconclusive(law_service, plain_set):
    report = law_service.check_laws(IdealContext.total(), plain_set(2), max_relations=3)

    assert report.relations == 3
    assert report.morphisms == 4
    assert report.laws[0].truncated
    assert report.laws[0].verdict == VerdictEnum.INCONCLUSIVE
    assert report.laws[4].verdict == VerdictEnum.PASS
    assert report.verdict == VerdictEnum.INCONCLUSIVE


def test_map_budget_is_separate_from_relation_budget(
    context_service, relation_service, checker_service, plain_set
):
    service = LawService(AlgebraService(max_table_size=3), context_service, relation_service, checker_service)

    report = service.check_laws(IdealContext.total(), plain_set(2))

    assert report.relations == 16
    assert report.morphisms == 0
    assert report.laws[0].verdict == VerdictEnum.PASS
    assert report.laws[3].verdict == VerdictEnum.INCONCLUSIVE
    assert report.laws[4].verdict == VerdictEnum.INCONCLUSIVE
    assert report.verdict == VerdictEnum.INCONCLUSIVE
