import pytest

from rhi import (
    CapExceededError,
    RATIONALS,
    ValidationError,
    brute_nilpotency,
    ideal_from_generators,
    ideal_from_subspace,
    kernel,
    multiplication_map,
    nilpotency,
    prime_field,
    random_algebra,
    random_ideal,
    random_map,
)
from rhi.oracle import (
    RandomInstanceSpec,
    brute_subset_nilpotency,
    random_quotient_map,
    seeded_nil_instance,
)
from conftest import cproj, sphere


def test_brute_principal_ideal_cp3(cp3):
    ideal = ideal_from_generators(cp3, [cp3.normal_form("x")])
    assert brute_nilpotency(ideal, cap=10) == 3


def test_brute_kernel_odd_sphere(s3):
    mu = multiplication_map(s3, 2)
    ideal = ideal_from_subspace(mu.domain, kernel(mu))
    assert brute_nilpotency(ideal, cap=10) == 1


def test_brute_zero_ideal(cp3):
    ideal = ideal_from_generators(cp3, [])
    assert brute_nilpotency(ideal, cap=5) == 0


def test_brute_requires_exact_parent():
    from rhi import Generator, Presentation, realize_presentation

    a = realize_presentation(Presentation([Generator("x", 2)], [], 8), RATIONALS)
    ideal = ideal_from_generators(a, [a.normal_form("x")])
    with pytest.raises(ValidationError, match="exact"):
        brute_nilpotency(ideal, cap=10)


def test_brute_cap_exceeded(cp3):
    ideal = ideal_from_generators(cp3, [cp3.normal_form("x")])
    with pytest.raises(CapExceededError):
        brute_nilpotency(ideal, cap=2)


def test_random_algebra_deterministic():
    spec = RandomInstanceSpec(seed=42)
    a = random_algebra(spec)
    b = random_algebra(spec)
    assert a.dims_list() == b.dims_list()
    assert a.presentation == b.presentation


def test_random_map_from_square_zero_domain_always_exists():
    from rhi import Generator, Presentation, realize_presentation

    dom = realize_presentation(Presentation([Generator("x", 2)], ["x^2"], 6), RATIONALS)
    cod = cproj(2)
    f = random_map(dom, cod, seed=0)
    assert f.rejections >= 0
    # the relation x^2 must map to zero, whatever image was sampled
    img = f.image_of_basis(2, 0)
    assert cod.multiply(img, img, clip=True).is_zero()


def test_random_map_records_rejections():
    from rhi import Generator, Presentation, realize_presentation

    dom = realize_presentation(Presentation([Generator("x", 2)], ["x^2"], 6), RATIONALS)
    f = random_map(dom, cproj(3), seed=5)
    assert isinstance(f.rejections, int)


def test_quotient_maps_always_valid():
    for seed in range(6):
        domain, codomain, f = random_quotient_map(RandomInstanceSpec(seed=seed))
        assert f.domain is domain and f.codomain is codomain


def test_engine_matches_brute_on_instances():
    for field in (RATIONALS, prime_field(5)):
        for seed in range(25):
            _, subset, ideal = seeded_nil_instance(seed, field=field)
            engine = nilpotency(ideal).index
            cap = ideal.parent.top_degree + 1
            assert engine == brute_nilpotency(ideal, cap)
            assert engine == brute_subset_nilpotency(ideal.parent, subset, cap)
