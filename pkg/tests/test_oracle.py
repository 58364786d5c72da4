import random

import pytest

from symgb import Polynomial
from symgb.oracle import (
    OracleError,
    TruncatedIdeal,
    classical_gb,
    classical_membership,
    is_classical_gb,
    same_ideal,
)

from helpers import P, rand_polynomial, texts

sympy = pytest.importorskip("sympy")


def test_two_variable_basis():
    G = classical_gb(TruncatedIdeal((P("x1 + x2"), P("x1*x2")), 2))
    assert texts(G) == ["x2 + x1", "x1^2"]


def test_orbit_of_order_two_is_the_same_ideal():
    F = [P("x1 + x2"), P("x1*x2")]
    assert same_ideal(F, TruncatedIdeal.orbit(F, 2).generators, 2)


def test_single_variable():
    assert texts(classical_gb(TruncatedIdeal((P("x1"),), 3))) == ["x1"]


def test_contrast_between_two_and_three_variables():
    F = [P("x1 + x2"), P("x1*x2")]
    assert not classical_membership(P("x1"), TruncatedIdeal(tuple(F), 2))
    assert classical_membership(P("x1"), TruncatedIdeal.orbit(F, 3))
    assert classical_membership(Polynomial.zero(), TruncatedIdeal(tuple(F), 2))


def test_bounds_are_enforced():
    with pytest.raises(OracleError):
        TruncatedIdeal((P("x3"),), 2)
    with pytest.raises(OracleError):
        classical_membership(P("x3"), TruncatedIdeal((P("x1"),), 2))
    with pytest.raises(OracleError):
        TruncatedIdeal((P("x1"),), 0)


def _to_sympy(f, xs):
    return sum(sympy.Rational(c.numerator, c.denominator)
               * sympy.prod([xs[i - 1] ** e for i, e in m.exponents.items()])
               for m, c in f.coefficients.items())


def test_agrees_with_sympy():
    rng = random.Random(2)
    xs = sympy.symbols("x1:4")
    gens_order = list(reversed(xs))          # x3 > x2 > x1
    for _ in range(40):
        F = [rand_polynomial(rng) for _ in range(rng.randint(1, 3))]
        ours = classical_gb(TruncatedIdeal(tuple(F), 3))
        assert is_classical_gb(list(ours))
        theirs = sympy.groebner([_to_sympy(f, xs) for f in F], *gens_order, order="lex")
        assert {sympy.expand(_to_sympy(g, xs)) for g in ours} == \
               {sympy.expand(g / sympy.Poly(g, *gens_order).LC()) for g in theirs.exprs}
