import pytest

from symgb import Monomial, Permutation, lex_compare


def test_highest_index_dominates_lex():
    assert Monomial.var(2) > Monomial.var(1, 5)
    assert Monomial({2: 1, 1: 3}) > Monomial({2: 1, 1: 2})
    assert Monomial({3: 1}) > Monomial({2: 4, 1: 4})
    assert lex_compare(Monomial.var(1), Monomial.var(1)) == 0


def test_one_is_least():
    one = Monomial()
    assert one.is_one()
    assert all(one < Monomial.var(i) for i in range(1, 5))


def test_basic_attributes():
    m = Monomial({1: 1, 3: 2})
    assert str(m) == "x3^2*x1"
    assert m.support == (1, 3)
    assert m.max_index == 3
    assert m.total_degree == 3
    assert m.type == (2, 1)
    assert m.vector(4) == [1, 0, 2, 0]
    assert Monomial.from_vector([1, 0, 2]) == m


def test_divisibility_and_quotients():
    a, b = Monomial({1: 1, 2: 2}), Monomial({1: 3, 2: 2, 4: 1})
    assert a.divides(b) and not b.divides(a)
    assert b.quotient(a) * a == b
    assert a.lcm(b) == b and a.gcd(b) == a
    assert Monomial.var(1).is_coprime(Monomial.var(2))
    with pytest.raises(ValueError):
        a.quotient(b)


def test_action_moves_exponents_along_sigma():
    m = Monomial({1: 1, 3: 2})
    sigma = Permutation.from_cycles("(12)")
    assert m.permuted(sigma) == Monomial({2: 1, 3: 2})


def test_zero_exponents_are_dropped():
    assert Monomial({1: 0, 2: 1}) == Monomial.var(2)


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        Monomial({1: -1})
