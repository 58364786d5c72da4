from fractions import Fraction

import pytest

from symgb.fields import QQ, DomainError, PrimeField, field_from_spec


def test_rational_arithmetic_is_exact():
    assert QQ.convert("3/6") == Fraction(1, 2)
    assert QQ.div(1, 3) * 3 == 1
    assert QQ.format(Fraction(-2, 4)) == "-1/2"


def test_prime_field_reduces_mod_p():
    F = PrimeField(7)
    assert F.convert(10) == 3
    assert F.convert(-1) == 6
    assert F.div(1, 3) == 5
    assert (F.inverse(3) * 3) % 7 == 1


def test_prime_field_rejects_composites():
    with pytest.raises(ValueError):
        PrimeField(8)


def test_division_by_zero_is_a_domain_error():
    with pytest.raises((DomainError, ZeroDivisionError)):
        PrimeField(5).div(1, 0)
    with pytest.raises((DomainError, ZeroDivisionError)):
        QQ.div(1, 0)


@pytest.mark.parametrize("spec,expected", [("q", QQ), ("fp:7", PrimeField(7))])
def test_field_from_spec(spec, expected):
    assert field_from_spec(spec) == expected


@pytest.mark.parametrize("spec", ["fp:8", "fp:x", "r", ""])
def test_field_from_spec_rejects_garbage(spec):
    with pytest.raises(ValueError):
        field_from_spec(spec)
