from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rhi import ConfigError, FieldSpec, ParseError, prime_field, RATIONALS


def test_rational_basics():
    f = RATIONALS
    assert f.is_rational
    half = f.parse_scalar("1/2")
    assert f.add(half, half) == f.one
    assert f.mul(f.coerce(3), f.coerce(Fraction(1, 3))) == f.one
    assert f.format_scalar(f.parse_scalar("-3/4")) == "-3/4"


def test_prime_field_basics():
    f = prime_field(5)
    assert f.coerce(-1) == 4
    assert f.parse_scalar("1/2") == 3  # 2 * 3 = 6 = 1 mod 5
    assert f.mul(2, 3) == 1
    assert f.inv(4) == 4


def test_characteristic_must_be_prime():
    with pytest.raises(ConfigError):
        FieldSpec(4)
    with pytest.raises(ConfigError):
        FieldSpec(1)
    FieldSpec(2)
    FieldSpec(13)


def test_floats_rejected():
    with pytest.raises(ConfigError):
        RATIONALS.coerce(0.5)


def test_bad_literals():
    with pytest.raises(ParseError):
        RATIONALS.parse_scalar("1/0")
    with pytest.raises(ParseError):
        RATIONALS.parse_scalar("x")


def test_fp_denominator_divisible():
    with pytest.raises(ConfigError):
        prime_field(5).coerce(Fraction(1, 5))


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_field_laws_f7(a, b, c):
    f = prime_field(7)
    a, b, c = f.coerce(a), f.coerce(b), f.coerce(c)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero
    if a != f.zero:
        assert f.mul(a, f.inv(a)) == f.one


@given(st.fractions(min_value=-40, max_value=40, max_denominator=12),
       st.fractions(min_value=-40, max_value=40, max_denominator=12))
def test_rational_roundtrip(a, b):
    f = RATIONALS
    ca, cb = f.coerce(a), f.coerce(b)
    assert f.parse_scalar(f.format_scalar(ca)) == ca
    assert f.sub(f.add(ca, cb), cb) == ca
