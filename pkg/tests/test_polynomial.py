from fractions import Fraction

import pytest

from symgb import Monomial, Permutation, Polynomial, PrimeField
from symgb.fields import DomainError

from helpers import P


def test_terms_are_sorted_descending():
    f = P("x1 + x2^2 + 3*x3")
    assert [str(t.monomial) for t in f.terms] == ["x3", "x2^2", "x1"]
    assert f.leading_coefficient() == 3


def test_cancellation_drops_terms():
    f = P("x1 + x2") - P("x2")
    assert f == P("x1") and len(f) == 1
    assert (f - f).is_zero()


def test_multiplication():
    assert P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2")
    assert P("x1").mul_term(Fraction(1, 2), Monomial.var(2)) == P("1/2*x2*x1")


def test_monic_and_scale():
    assert P("3*x2 + 3*x1").monic() == P("x2 + x1")
    assert P("x1").scale(0).is_zero()


def test_zero_has_no_leading_term():
    with pytest.raises(ValueError):
        Polynomial.zero().leading_monomial()


def test_permuted_matches_monomial_action():
    s = Permutation.from_cycles("(123)")
    f = P("x1^2*x2 + x3")
    assert f.permuted(s) == P("x2^2*x3 + x1")


def test_fields_do_not_mix():
    F7 = PrimeField(7)
    with pytest.raises(DomainError):
        P("x1") * P("x1").with_field(F7)


def test_prime_field_coefficients_wrap():
    F7 = PrimeField(7)
    f = Polynomial({Monomial.var(1): 4}, F7)
    assert (f + f).leading_coefficient() == 1
    assert f.scale(7).is_zero()


def test_hash_and_equality_by_value():
    assert {P("x1 + x2"), P("x2 + x1")} == {P("x1 + x2")}
