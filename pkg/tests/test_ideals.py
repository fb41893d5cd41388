import random

import pytest

from rhi import (
    RATIONALS,
    ValidationError,
    augmentation,
    build_map,
    ideal_from_generators,
    ideal_from_subspace,
    ideal_product,
    injection,
    kernel,
    map_image_ideal,
    multiplication_map,
    nilpotency,
    prime_field,
    subspace_intersection,
    tensor_power,
    tensor_power_map,
    tensor_product,
)
from rhi.morphisms import identity_map, image_subspace
from rhi.linalg import Echelon, echelonize
from rhi.oracle import RandomInstanceSpec, random_algebra, random_ideal
from conftest import cproj, exterior, sphere


# ---------------------------------------------------------------------------
# spans
# ---------------------------------------------------------------------------

def test_principal_ideal_spans(cp2):
    ideal = ideal_from_generators(cp2, [cp2.normal_form("x")])
    assert ideal.degrees() == [2, 4]
    assert ideal.dim(2) == 1 and ideal.dim(4) == 1


def test_kernel_generator_ideal_spans(s3):
    t = tensor_power(s3, 2)
    z = t.normal_form("x_2 - x_1")
    ideal = ideal_from_generators(t, [z])
    assert ideal.degrees() == [3, 6]
    assert ideal.dim(3) == 1 and ideal.dim(6) == 1


def test_kernel_subspace_ideal_equals_kernel(s3):
    # kernels of algebra maps are already ideals: spans must match degreewise
    mu = multiplication_map(s3, 2)
    ker = kernel(mu)
    ideal = ideal_from_subspace(mu.domain, ker)
    for d in ker.degrees():
        assert ideal.dim(d) == ker.dim(d)
    assert ideal.as_subspace() == ker


def test_degree_zero_generator_rejected(cp2):
    with pytest.raises(ValidationError, match="positive degree"):
        ideal_from_generators(cp2, [cp2.one()])


def test_zero_generators_dropped(cp2):
    ideal = ideal_from_generators(cp2, [cp2.zero(), cp2.normal_form("x^3")])
    assert ideal.is_zero()


# ---------------------------------------------------------------------------
# products and powers
# ---------------------------------------------------------------------------

def test_principal_square(cp2):
    ideal = ideal_from_generators(cp2, [cp2.normal_form("x")])
    square = ideal_product(ideal, ideal)
    assert square.degrees() == [4]
    assert square.dim(4) == 1


def test_kernel_square_odd_sphere_vanishes(s3):
    mu = multiplication_map(s3, 2)
    ideal = ideal_from_subspace(mu.domain, kernel(mu))
    square = ideal_product(ideal, ideal)
    assert square.is_zero()


def test_kernel_square_even_sphere(s2):
    mu = multiplication_map(s2, 2)
    t = mu.domain
    ideal = ideal_from_subspace(t, kernel(mu))
    square = ideal_product(ideal, ideal)
    assert square.degrees() == [4]
    assert square.as_subspace().contains(t.normal_form("x_1*x_2"))


def test_product_spans_match_spanwise_products(cp3):
    # spans(IJ)_d = echelon{u*v}: check against the defining description
    i1 = ideal_from_generators(cp3, [cp3.normal_form("x")])
    i2 = ideal_from_generators(cp3, [cp3.normal_form("x^2")])
    product = ideal_product(i1, i2)
    s1, s2 = i1.as_subspace(), i2.as_subspace()
    by_degree = {}
    for d1 in s1.degrees():
        for u in s1.basis_elements(d1):
            for d2 in s2.degrees():
                for v in s2.basis_elements(d2):
                    w = cp3.multiply(u, v, clip=True)
                    if not w.is_zero():
                        by_degree.setdefault(d1 + d2, []).append(w.coords(d1 + d2))
    for d in sorted(by_degree):
        assert echelonize(cp3.field, by_degree[d]) == product.as_subspace().rows(d)
    assert sorted(by_degree) == product.degrees()


# ---------------------------------------------------------------------------
# nilpotency and witnesses
# ---------------------------------------------------------------------------

def assert_witness_valid(ideal, result):
    assert len(result.witness_factors) == result.index
    product = ideal.parent.one()
    for factor in result.witness_factors:
        assert ideal.contains(factor)
        product = ideal.parent.multiply(product, factor, clip=True)
    assert product == result.witness_product
    if result.index > 0:
        assert not product.is_zero()
    if result.exact:
        for g in ideal.generators:
            assert ideal.parent.multiply(product, g, clip=True).is_zero()


def test_positive_part_of_cp3(cp3):
    ideal = ideal_from_generators(
        cp3, [cp3.normal_form(t) for t in ("x", "x^2", "x^3")]
    )
    result = nilpotency(ideal)
    assert result.index == 3 and result.exact
    assert_witness_valid(ideal, result)
    assert result.witness_product == cp3.normal_form("x^3")


@pytest.mark.parametrize("l,n,expected", [(3, 2, 1), (3, 3, 2), (2, 2, 2), (2, 3, 3)])
def test_kernel_nilpotency_spheres(l, n, expected):
    a = sphere(l)
    mu = multiplication_map(a, n)
    ideal = ideal_from_subspace(mu.domain, kernel(mu))
    result = nilpotency(ideal)
    assert result.index == expected and result.exact
    assert_witness_valid(ideal, result)


def test_zero_ideal_nilpotency(cp2):
    ideal = ideal_from_generators(cp2, [])
    result = nilpotency(ideal)
    assert result.index == 0
    assert result.witness_factors == []
    assert result.witness_product == cp2.one()


def test_nilpotency_lower_bound_on_truncated():
    from rhi import Generator, Presentation, realize_presentation

    a = realize_presentation(Presentation([Generator("x", 2)], [], 8), RATIONALS)
    assert not a.exact
    ideal = ideal_from_generators(a, [a.normal_form("x")])
    result = nilpotency(ideal)
    assert result.index == 4  # x^4 still visible inside the window
    assert not result.exact


def test_power_degree_bound(cp3):
    ideal = ideal_from_generators(cp3, [cp3.normal_form("x")])
    current = ideal
    k = 1
    while not current.is_zero():
        assert all(d >= k * 2 for d in current.degrees())
        current = ideal_product(current, ideal)
        k += 1


# ---------------------------------------------------------------------------
# images and intersections
# ---------------------------------------------------------------------------

def test_image_ideal_zero_map(cp2):
    zero = build_map(cp2, cp2, {"x": "0"})
    ideal = ideal_from_generators(cp2, [cp2.normal_form("x")])
    pushed = map_image_ideal(zero, ideal)
    assert pushed.is_zero()
    assert nilpotency(pushed).index == 0


def test_image_ideal_iso_preserves_nil(cp3):
    iso = build_map(cp3, cp3, {"x": "5*x"})
    ideal = ideal_from_generators(cp3, [cp3.normal_form("x")])
    assert nilpotency(map_image_ideal(iso, ideal)).index == nilpotency(ideal).index


def test_augmentation_kills_positive_part(cp3):
    eps = augmentation(cp3)
    ideal = ideal_from_generators(cp3, [cp3.normal_form("x")])
    assert map_image_ideal(eps, ideal).is_zero()


def test_intersection_cases(s3):
    mu = multiplication_map(s3, 2)
    ker = kernel(mu)
    assert subspace_intersection(ker, ker) == ker

    full = image_subspace(identity_map(mu.domain))
    assert subspace_intersection(full, ker) == ker

    zero = build_map(s3, s3, {"x": "0"})
    img = image_subspace(tensor_power_map(zero, 2))
    meet = subspace_intersection(ker, img)
    assert meet.degrees() == []


# ---------------------------------------------------------------------------
# randomized laws
# ---------------------------------------------------------------------------

def test_monotonicity_on_random_pairs():
    for seed in range(12):
        algebra = random_algebra(RandomInstanceSpec(seed=seed, truncation=12))
        small = random_ideal(algebra, seed)
        extra = random_ideal(algebra, seed + 1000)
        big = ideal_from_generators(algebra, list(small.generators) + list(extra.generators))
        assert nilpotency(small).index <= nilpotency(big).index


def test_monomorphism_preserves_nilpotency_on_random_pairs():
    from rhi import check_injective

    for seed in range(10):
        a = random_algebra(RandomInstanceSpec(seed=seed, truncation=10))
        b = random_algebra(RandomInstanceSpec(seed=seed + 500, truncation=10))
        t = tensor_power(a, 2) if seed % 3 == 0 else tensor_product(a, b)
        slot = injection(t, 0)
        assert check_injective(slot) == []
        ideal = random_ideal(a, seed)
        pushed = map_image_ideal(slot, ideal)
        assert nilpotency(pushed).index == nilpotency(ideal).index


def test_witness_validity_on_random_ideals():
    for seed in range(10):
        algebra = random_algebra(RandomInstanceSpec(seed=seed, truncation=12))
        ideal = random_ideal(algebra, seed)
        result = nilpotency(ideal)
        assert_witness_valid(ideal, result)
