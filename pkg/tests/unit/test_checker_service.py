import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from app.enums.verdict_enum import VerdictEnum
from app.models.homomorphism_model import Homomorphism
from app.models.relation_model import Relation
from app.schemas.context_schema import IdealContext
from app.services.algebra_service import AlgebraService
from app.services.checker_service import CheckerService
from app.services.context_service import ContextService
from app.services.relation_service import RelationService
from app.utils.exceptions import RelationError

SIZES = [1, 2, 3]
E_SUBTRACTIVE_CORPUS = ["bool2", "bool4", "heyt2", "ringZ2", "ringZ4", "ringZ2xZ2"]

PROPERTY_SETTINGS = settings(
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)


def every_relation(algebra):
    size = algebra.size
    for bits in itertools.product([False, True], repeat=size * size):
        yield Relation(algebra, algebra, np.array(bits, dtype=bool).reshape(size, size))


def test_left_star_symmetry_in_total_context_is_symmetry(checker_service, plain_set):
    carrier = plain_set(2)
    verdict = checker_service.is_left_star_symmetric(
        IdealContext.total(), Relation.from_pairs(carrier, carrier, [(0, 1)])
    )
    assert not verdict.holds
    assert verdict.witness == (0, 1)


def test_order_on_monoid_is_not_left_star_symmetric(checker_service, load_algebra):
    monoid = load_algebra("monoid01")
    order = Relation.from_pairs(monoid, monoid, [(0, 0), (0, 1), (1, 1)])

    verdict = checker_service.is_left_star_symmetric(IdealContext.pointed(0), order)

    assert not verdict.holds
    assert verdict.witness == (0, 1)


@pytest.mark.parametrize("specifier", ["total", "pointed:0"])
def test_diagonal_is_left_star_symmetric(checker_service, relation_service, load_algebra, specifier):
    monoid = load_algebra("monoid01")
    verdict = checker_service.is_left_star_symmetric(IdealContext.parse(specifier), relation_service.diagonal(monoid))
    assert verdict.holds
    assert verdict.witness is None


def test_star_symmetry_fails_on_the_opposite_side(checker_service, load_algebra):
    monoid = load_algebra("monoid01")
    relation = Relation.from_pairs(monoid, monoid, [(1, 0), (1, 1), (0, 0)])
    context = IdealContext.pointed(0)

    assert checker_service.is_left_star_symmetric(context, relation).holds
    verdict = checker_service.is_star_symmetric(context, relation)
    assert not verdict.holds
    assert verdict.witness == (0, 1)


@pytest.mark.parametrize("name, specifier", [
    ("bool4", "proto"),
    ("bool4", "total"),
    ("monoid01", "pointed:0"),
    ("set3", "pointed:2"),
])
def test_full_relation_is_star_symmetric(checker_service, relation_service, load_algebra, name, specifier):
    algebra = load_algebra(name)
    assert checker_service.is_star_symmetric(IdealContext.parse(specifier), relation_service.full(algebra)).holds


@pytest.mark.parametrize("size", SIZES)
def test_total_context_left_star_symmetry_equals_symmetry(checker_service, relation_service, plain_set, size):
    for relation in every_relation(plain_set(size)):
        symmetric = relation_service.relation_predicates(relation).symmetric
        assert checker_service.is_left_star_symmetric(IdealContext.total(), relation).holds == symmetric
        assert checker_service.is_star_symmetric(IdealContext.total(), relation).holds == symmetric


@pytest.mark.parametrize("size", SIZES)
@pytest.mark.parametrize("specifier", ["total", "pointed:0"])
def test_star_symmetry_means_equal_stars_of_both_sides(
    checker_service, relation_service, plain_set, size, specifier
):
    context = IdealContext.parse(specifier)
    for relation in every_relation(plain_set(size)):
        verdict = checker_service.is_star_symmetric(context, relation)
        stars_agree = relation_service.star(context, relation) == relation_service.star(
            context, relation_service.opposite(relation)
        )
        assert verdict.holds == stars_agree
        if not verdict.holds:
            left, right = verdict.witness
            reversed_in = (right, left) in relation
            assert (left, right) in relation or (right, left) in relation
            assert not ((left, right) in relation and reversed_in)


def test_permutes_with_itself(checker_service, load_algebra, relation_service):
    bool4 = load_algebra("bool4")
    full = relation_service.full(bool4)
    assert checker_service.check_star_permutes(IdealContext.proto(), full, full).holds


def test_partitions_star_permute_in_pointed_context(checker_service, plain_set, algebra_service):
    carrier = plain_set(3)
    first = Relation(carrier, carrier, algebra_service.congruence_generated(carrier, [(0, 1)]).matrix())
    second = Relation(carrier, carrier, algebra_service.congruence_generated(carrier, [(0, 2)]).matrix())

    verdict = checker_service.check_star_permutes(IdealContext.pointed(0), first, second)

    assert verdict.holds
    assert verdict.first_composite == [(0, 0), (0, 1), (0, 2)]
    assert verdict.second_composite == [(0, 0), (0, 1), (0, 2)]


def test_ring_congruences_permute_in_total_context(checker_service, load_algebra, algebra_service, relation_service):
    ring = load_algebra("ringZ4")
    half = Relation(ring, ring, algebra_service.congruence_generated(ring, [(0, 2)]).matrix(), compatible=True)

    verdict = checker_service.check_star_permutes(IdealContext.total(), half, relation_service.full(ring))

    assert verdict.holds
    assert len(verdict.first_composite) == 16


def test_partitions_do_not_permute_in_total_context(checker_service, plain_set, algebra_service):
    carrier = plain_set(3)
    first = Relation(carrier, carrier, algebra_service.congruence_generated(carrier, [(0, 1)]).matrix())
    second = Relation(carrier, carrier, algebra_service.congruence_generated(carrier, [(1, 2)]).matrix())

    verdict = checker_service.check_star_permutes(IdealContext.total(), first, second)

    assert not verdict.holds
    assert (verdict.witness in verdict.first_composite) != (verdict.witness in verdict.second_composite)


@PROPERTY_SETTINGS
@given(
    specifier=st.sampled_from(["total", "pointed:0", "pointed:1"]),
    first_bits=st.lists(st.booleans(), min_size=9, max_size=9),
    second_bits=st.lists(st.booleans(), min_size=9, max_size=9),
)
def test_swapping_arguments_swaps_composites(checker_service, plain_set, specifier, first_bits, second_bits):
    carrier = plain_set(3)
    first = Relation(carrier, carrier, np.array(first_bits, dtype=bool).reshape(3, 3))
    second = Relation(carrier, carrier, np.array(second_bits, dtype=bool).reshape(3, 3))
    context = IdealContext.parse(specifier)

    forward = checker_service.check_star_permutes(context, first, second)
    backward = checker_service.check_star_permutes(context, second, first)

    assert forward.holds == backward.holds
    assert forward.first_composite == backward.second_composite
    assert forward.second_composite == backward.first_composite


def test_graph_with_equal_legs_is_symmetric(checker_service, relation_service, load_algebra):
    monoid = load_algebra("monoid01")
    pairs = relation_service.relation_algebra(relation_service.full(monoid))
    context = IdealContext.pointed(0)

    verdict = checker_service.graph_left_star_symmetric(context, pairs.first, pairs.first)

    assert verdict.verdict == VerdictEnum.PASS
    for element, image in verdict.sigma.items():
        assert pairs.first(image) == pairs.first(element)


def test_graph_of_monoid_order_fails_without_candidates(checker_service, relation_service, load_algebra):
    monoid = load_algebra("monoid01")
    order = Relation.from_pairs(monoid, monoid, [(0, 0), (0, 1), (1, 1)])
    pairs = relation_service.relation_algebra(order)

    verdict = checker_service.graph_left_star_symmetric(IdealContext.pointed(0), pairs.first, pairs.second)

    assert verdict.verdict == VerdictEnum.FAIL
    assert verdict.witness == pairs.index(0, 1)


@pytest.mark.parametrize("size", [2, 3])
@pytest.mark.parametrize("specifier", ["total", "pointed:0"])
def test_jointly_monic_graph_matches_its_relation(checker_service, relation_service, plain_set, size, specifier):
    context = IdealContext.parse(specifier)
    for relation in every_relation(plain_set(size)):
        if len(relation) == 0:
            continue
        pairs = relation_service.relation_algebra(relation)
        graph = checker_service.graph_left_star_symmetric(context, pairs.first, pairs.second)
        relation_verdict = checker_service.is_left_star_symmetric(context, relation)

        assert (graph.verdict == VerdictEnum.PASS) == relation_verdict.holds
        if graph.verdict == VerdictEnum.PASS:
            for element, image in graph.sigma.items():
                assert pairs.first(image) == pairs.second(element)
                assert pairs.second(image) == pairs.first(element)


def test_graph_symmetry_on_semilattice_relations(checker_service, relation_service, load_algebra):
    monoid = load_algebra("monoid01")
    context = IdealContext.pointed(0)
    for relation in checker_service.enumerate_reflexive_compatible(monoid).relations:
        pairs = relation_service.relation_algebra(relation)
        graph = checker_service.graph_left_star_symmetric(context, pairs.first, pairs.second)
        assert (graph.verdict == VerdictEnum.PASS) == checker_service.is_left_star_symmetric(context, relation).holds


@st.composite
def graphs(draw):
    """Two legs out of a carrier of size 1..3 into one of size 1..3, with a context they live in."""
    graph_size = draw(st.integers(1, 3))
    target_size = draw(st.integers(1, 3))
    with_constant = draw(st.booleans())
    element = st.integers(0, target_size - 1)
    if with_constant:
        rest = st.lists(element, min_size=graph_size - 1, max_size=graph_size - 1)
        legs = [[0] + draw(rest), [0] + draw(rest)]
        specifier = "proto"
    else:
        row = st.lists(element, min_size=graph_size, max_size=graph_size)
        legs = [draw(row), draw(row)]
        specifier = draw(st.sampled_from(["total", "pointed:0"]))
    return with_constant, graph_size, target_size, legs, specifier


@PROPERTY_SETTINGS
@given(graph=graphs())
def test_graph_symmetry_is_sound_on_random_graphs(checker_service, relation_service, plain_set, pointed_set, graph):
    with_constant, graph_size, target_size, legs, specifier = graph
    build = pointed_set if with_constant else plain_set
    source, target = build(graph_size), build(target_size)
    context = IdealContext.parse(specifier)
    first, second = Homomorphism(source, target, legs[0]), Homomorphism(source, target, legs[1])

    verdict = checker_service.graph_left_star_symmetric(context, first, second)

    assert verdict.verdict != VerdictEnum.INCONCLUSIVE
    if verdict.verdict == VerdictEnum.PASS:
        image = relation_service.graph_image(first, second)
        assert checker_service.is_left_star_symmetric(context, image).holds


def test_graph_search_budget_gives_inconclusive(checker_service, plain_set):
    carrier = plain_set(2)
    identity = Homomorphism.identity(carrier)

    verdict = checker_service.graph_left_star_symmetric(IdealContext.total(), identity, identity, budget=1)

    assert verdict.verdict == VerdictEnum.INCONCLUSIVE
    assert verdict.nodes == 1


def test_graph_legs_must_share_domain_and_codomain(checker_service, plain_set):
    first = Homomorphism(plain_set(2), plain_set(2), [0, 1])
    second = Homomorphism(plain_set(2), plain_set(3), [0, 1])
    with pytest.raises(RelationError):
        checker_service.graph_left_star_symmetric(IdealContext.total(), first, second)


@pytest.mark.parametrize("name, count", [("set1", 1), ("set2", 4), ("bool2", 2), ("monoid01", 4), ("ringZ4", 3)])
def test_enumerate_reflexive_compatible_counts(checker_service, load_algebra, name, count):
    enumeration = checker_service.enumerate_reflexive_compatible(load_algebra(name))
    assert len(enumeration.relations) == count
    assert not enumeration.truncated


def test_enumerate_reflexive_compatible_canonical_order(checker_service, plain_set):
    relations = checker_service.enumerate_reflexive_compatible(plain_set(2)).relations
    assert [relation.pairs() for relation in relations] == [
        [(0, 0), (1, 1)],
        [(0, 0), (0, 1), (1, 1)],
        [(0, 0), (1, 0), (1, 1)],
        [(0, 0), (0, 1), (1, 0), (1, 1)],
    ]


def test_enumerate_compatible_includes_non_reflexive_relations(checker_service, plain_set, load_algebra):
    assert len(checker_service.enumerate_compatible(plain_set(2)).relations) == 16
    assert len(checker_service.enumerate_compatible(plain_set(1)).relations) == 2
    # the constant pair (0,0) lies in every subalgebra
    assert len(checker_service.enumerate_compatible(load_algebra("monoid01")).relations) == 7


def test_enumerate_truncates_at_budget(checker_service, plain_set):
    enumeration = checker_service.enumerate_reflexive_compatible(plain_set(2), budget=2)
    assert enumeration.truncated
    assert len(enumeration.relations) == 2


def test_audit_of_boolean_algebra_passes_in_proto_context(checker_service, load_algebra):
    report = checker_service.audit_algebra(IdealContext.proto(), load_algebra("bool4"))

    assert [condition.verdict for condition in report.conditions] == [VerdictEnum.PASS] * 4
    assert report.relations_examined == 4
    assert not report.truncated
    assert report.verdict == VerdictEnum.PASS


@pytest.mark.parametrize("name", E_SUBTRACTIVE_CORPUS)
def test_audit_passes_in_proto_context_on_e_subtractive_corpus(checker_service, load_algebra, name):
    report = checker_service.audit_algebra(IdealContext.proto(), load_algebra(name))
    assert report.verdict == VerdictEnum.PASS


def test_audit_of_monoid_finds_order_relation(checker_service, load_algebra):
    report = checker_service.audit_algebra(IdealContext.pointed(0), load_algebra("monoid01"))
    verdicts = [condition.verdict for condition in report.conditions]

    assert verdicts == [VerdictEnum.PASS, VerdictEnum.PASS, VerdictEnum.FAIL, VerdictEnum.FAIL]
    for condition in report.conditions[2:]:
        first = condition.counterexamples[0]
        assert first.relation == [(0, 0), (0, 1), (1, 1)]
        assert first.witness == (0, 1)
    assert report.relations_examined == 4
    assert "refutes" in report.scope


def test_audit_counterexamples_recheck(checker_service, load_algebra):
    monoid = load_algebra("monoid01")
    context = IdealContext.pointed(0)
    report = checker_service.audit_algebra(context, monoid)

    for example in report.conditions[3].counterexamples:
        relation = Relation.from_pairs(monoid, monoid, example.relation)
        assert not checker_service.is_star_symmetric(context, relation).holds


@pytest.mark.parametrize("specifier", ["total", "pointed:0"])
def test_audit_of_one_element_algebra_passes(checker_service, plain_set, specifier):
    report = checker_service.audit_algebra(IdealContext.parse(specifier), plain_set(1))
    assert report.verdict == VerdictEnum.PASS


def test_audit_condition_four_implies_condition_three(checker_service, plain_set, load_algebra):
    for algebra, context in [
        (plain_set(3), IdealContext.total()),
        (plain_set(3), IdealContext.pointed(0)),
        (load_algebra("groupZ2"), IdealContext.proto()),
    ]:
        report = checker_service.audit_algebra(context, algebra)
        if report.conditions[3].verdict == VerdictEnum.PASS:
            assert report.conditions[2].verdict == VerdictEnum.PASS


def test_audit_reports_congruence_budget_as_inconclusive(plain_set):
    algebra_service = AlgebraService(max_congruence_size=1)
    context_service = ContextService(algebra_service)
    checker = CheckerService(algebra_service, context_service, RelationService(context_service))

    report = checker.audit_algebra(IdealContext.total(), plain_set(2))

    assert report.conditions[0].verdict == VerdictEnum.INCONCLUSIVE
    assert report.conditions[0].truncated
    assert "skipped" in report.conditions[0].note
    assert report.truncated
