import pytest

from rhi import (
    RATIONALS,
    Generator,
    Presentation,
    prime_field,
    realize_presentation,
)


def convolve(a, b):
    """Polynomial convolution of dimension sequences (independent oracle)."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def sphere(l, field=RATIONALS, truncation=None):
    relations = [] if l % 2 else ["x^2"]
    return realize_presentation(
        Presentation([Generator("x", l)], relations, truncation or 2 * l), field
    )


def cproj(l, field=RATIONALS, truncation=None):
    return realize_presentation(
        Presentation([Generator("x", 2)], [f"x^{l + 1}"], truncation or 2 * l + 2),
        field,
    )


def exterior(degrees):
    gens = [Generator(f"x{i + 1}", d) for i, d in enumerate(degrees)]
    return realize_presentation(
        Presentation(gens, [], sum(degrees) + max(degrees)), RATIONALS
    )


@pytest.fixture
def s3():
    return sphere(3)


@pytest.fixture
def s2():
    return sphere(2)


@pytest.fixture
def cp2():
    return cproj(2)


@pytest.fixture
def cp3():
    return cproj(3)


@pytest.fixture
def rp2_f2():
    return realize_presentation(
        Presentation([Generator("a", 1)], ["a^3"], 4), prime_field(2)
    )
