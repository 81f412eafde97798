import itertools

import pytest

from app.enums.context_kind_enum import ContextKindEnum
from app.models.homomorphism_model import Homomorphism
from app.schemas.context_schema import IdealContext
from app.services.context_service import ContextService
from app.utils.exceptions import ContextError

SIZES = [1, 2, 3]

# proto needs constants, so it runs over sets with one constant e = 0
CONTEXTS = [
    ("total", False),
    ("pointed:0", False),
    ("proto", True),
]


def morphisms_between(source, target, keep_base):
    return [
        Homomorphism(source, target, mapping)
        for mapping in itertools.product(range(target.size), repeat=source.size)
        if not keep_base or mapping[0] == 0
    ]


@pytest.fixture
def composable(plain_set, pointed_set):
    """Every pair (q, f) of maps X -> Y -> Z between carriers of size at most 3."""
    def build(specifier, with_constant):
        carriers = {size: pointed_set(size) if with_constant else plain_set(size) for size in SIZES}
        keep_base = specifier != "total"
        maps = {
            (source, target): morphisms_between(carriers[source], carriers[target], keep_base)
            for source, target in itertools.product(SIZES, SIZES)
        }
        for x, y, z in itertools.product(SIZES, repeat=3):
            for first in maps[(x, y)]:
                for second in maps[(y, z)]:
                    yield first, second
    return build


def test_parse_context_specifiers():
    assert IdealContext.parse("total") == IdealContext.total()
    assert IdealContext.parse("proto") == IdealContext.proto()
    pointed = IdealContext.parse("pointed:zero")
    assert pointed.kind == ContextKindEnum.POINTED
    assert pointed.base == "zero"
    assert str(pointed) == "pointed:zero"


@pytest.mark.parametrize("specifier", ["pointed", "pointed:", "everything", ""])
def test_parse_rejects_malformed_specifier(specifier):
    with pytest.raises(ContextError):
        IdealContext.parse(specifier)


def test_null_class_per_context(context_service, load_algebra):
    ring = load_algebra("ringZ2xZ2")
    monoid = load_algebra("monoid01")

    assert sorted(context_service.null_class(IdealContext.total(), ring)) == [0, 1, 2, 3]
    assert sorted(context_service.null_class(IdealContext.proto(), ring)) == [0, 3]
    assert sorted(context_service.null_class(IdealContext.pointed(0), monoid)) == [0]


def test_pointed_base_by_constant_name(context_service, load_algebra):
    monoid = load_algebra("monoid01")
    assert sorted(context_service.null_class(IdealContext.pointed("zero"), monoid)) == [0]


def test_pointed_base_out_of_range(context_service, plain_set):
    with pytest.raises(ContextError):
        context_service.validate(IdealContext.pointed(3), plain_set(3))


def test_pointed_base_unknown_constant(context_service, load_algebra):
    with pytest.raises(ContextError):
        context_service.validate(IdealContext.pointed("unit"), load_algebra("bool2"))


def test_pointed_base_must_be_a_subalgebra(context_service, load_algebra):
    # the constant one leaves {0}
    with pytest.raises(ContextError):
        context_service.validate(IdealContext.pointed(0), load_algebra("bool2"))


def test_proto_context_needs_constants(context_service, plain_set):
    with pytest.raises(ContextError):
        context_service.validate(IdealContext.proto(), plain_set(2))


def test_n_kernel_is_preimage_of_null_class(context_service, load_algebra):
    bool4, bool2 = load_algebra("bool4"), load_algebra("bool2")
    morphism = Homomorphism(bool4, bool2, [0, 1, 0, 1])

    assert context_service.n_kernel(IdealContext.total(), morphism) == frozenset({0, 1, 2, 3})
    assert context_service.n_kernel(IdealContext.proto(), morphism) == frozenset({0, 1, 2, 3})


def test_is_null_morphism(context_service, load_algebra, pointed_set):
    source, target = pointed_set(2), pointed_set(3)
    constant = Homomorphism(source, target, [0, 0])
    inclusion = Homomorphism(source, target, [0, 1])

    assert context_service.is_null_morphism(IdealContext.proto(), constant)
    assert not context_service.is_null_morphism(IdealContext.proto(), inclusion)
    assert context_service.is_null_morphism(IdealContext.total(), inclusion)


def test_is_saturating_rejects_map_moving_the_base(context_service, plain_set):
    morphism = Homomorphism(plain_set(2), plain_set(2), [1, 0])
    with pytest.raises(ContextError):
        context_service.is_saturating(IdealContext.pointed(0), morphism)


@pytest.mark.parametrize("source_size, target_size", list(itertools.product(SIZES, SIZES)))
def test_every_morphism_saturates_in_pointed_and_proto_contexts(
    context_service, plain_set, pointed_set, source_size, target_size
):
    for mapping in itertools.product(range(target_size), repeat=source_size):
        if mapping[0] != 0:
            continue
        plain = Homomorphism(plain_set(source_size), plain_set(target_size), mapping)
        pointed = Homomorphism(pointed_set(source_size), pointed_set(target_size), mapping)

        assert context_service.is_saturating(IdealContext.pointed(0), plain)
        assert context_service.is_saturating(IdealContext.proto(), pointed)


@pytest.mark.parametrize("source_size, target_size", list(itertools.product(SIZES, SIZES)))
def test_saturating_equals_surjective_in_total_context(context_service, plain_set, source_size, target_size):
    for mapping in itertools.product(range(target_size), repeat=source_size):
        morphism = Homomorphism(plain_set(source_size), plain_set(target_size), mapping)
        assert context_service.is_saturating(IdealContext.total(), morphism) == morphism.is_surjective()


@pytest.mark.parametrize("name, specifier", [
    ("set3", "total"),
    ("set3", "pointed:1"),
    ("monoid01", "pointed:0"),
    ("bool4", "proto"),
    ("ringZ4", "proto"),
    ("ringZ2xZ2", "proto"),
    ("ringZ2xZ2", "total"),
])
def test_null_class_is_n_kernel_of_identity(context_service, load_algebra, name, specifier):
    algebra = load_algebra(name)
    context = IdealContext.parse(specifier)

    kernel = context_service.n_kernel(context, Homomorphism.identity(algebra))

    assert kernel == frozenset(context_service.null_class(context, algebra))


@pytest.mark.parametrize("specifier, with_constant", CONTEXTS)
def test_n_kernel_is_stable_under_pullback(context_service, composable, specifier, with_constant):
    context = IdealContext.parse(specifier)
    for first, second in composable(specifier, with_constant):
        kernel = context_service.n_kernel(context, second)
        pulled_back = frozenset(x for x in first.domain.carrier if first(x) in kernel)

        assert context_service.n_kernel(context, first.then(second)) == pulled_back


@pytest.mark.parametrize("specifier, with_constant", CONTEXTS)
def test_composite_with_a_null_factor_is_null(context_service, composable, specifier, with_constant):
    context = IdealContext.parse(specifier)
    for first, second in composable(specifier, with_constant):
        if context_service.is_null_morphism(context, first) or context_service.is_null_morphism(context, second):
            assert context_service.is_null_morphism(context, first.then(second))


def test_null_class_cache_is_bounded(algebra_service, plain_set):
    service = ContextService(algebra_service, cache_size=2)
    for size in SIZES:
        service.null_class(IdealContext.total(), plain_set(size))

    assert len(service._null_classes) == 2
    assert sorted(service.null_class(IdealContext.total(), plain_set(1))) == [0]
