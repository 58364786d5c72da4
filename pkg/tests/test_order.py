import itertools
import random

import pytest

from symgb import Monomial, Permutation, brute_force_sym_compare, sym_compare, validate_witness
from symgb.order import is_upward_shift, sym_leq, upward_shift_between

from helpers import rand_vector_monomial

V = Monomial.from_vector


def test_matched_trace():
    wit = sym_compare(V([3, 2, 0, 0, 5]), V([5, 1, 4, 6, 9]))
    assert wit.sigma == Permutation.from_cycles("(23)")
    assert wit.completed_pairs == {(1, 1), (2, 3), (3, 2), (4, 4), (5, 5)}
    assert wit.match_pairs == {(1, 1), (2, 3), (5, 5)}


def test_failing_trace():
    assert sym_compare(V([1, 2, 0, 2]), V([0, 3, 4, 1])) is None


def test_greedy_support_matching():
    wit = sym_compare(V([2, 3]), V([1, 2, 3]))
    assert wit.match_pairs == {(1, 2), (2, 3)}


def test_edge_cases():
    one = Monomial()
    assert sym_compare(one, one).sigma.is_identity()
    assert sym_compare(one, V([0, 1])) is not None
    assert sym_compare(V([1]), one) is None
    assert sym_compare(V([0, 0, 1]), V([0, 5])) is None


def test_downward_moves_are_not_allowed():
    assert not sym_leq(V([0, 1]), V([1]))
    assert sym_leq(V([1]), V([0, 1]))


def test_witness_is_an_upward_shift_onto_a_divisor():
    rng = random.Random(7)
    for _ in range(300):
        v, w = rand_vector_monomial(rng, 6, 2), rand_vector_monomial(rng, 6, 3)
        wit = sym_compare(v, w)
        if wit is not None:
            assert is_upward_shift(wit.sigma, v)
            assert validate_witness(wit.sigma, v, w)


def test_agrees_with_brute_force_small():
    monos = [V(list(e)) for e in itertools.product(range(3), repeat=3)]
    for v, w in itertools.product(monos, repeat=2):
        assert (sym_compare(v, w) is not None) == brute_force_sym_compare(v, w)


def test_brute_force_has_a_scale_limit():
    with pytest.raises(ValueError):
        brute_force_sym_compare(V([1]), Monomial.var(40))


def test_upward_shift_between():
    rel = upward_shift_between(V([2, 0, 1]), V([0, 2, 0, 1]))
    assert rel is not None
    assert V([2, 0, 1]).permuted(rel.shift) == V([0, 2, 0, 1])
    assert upward_shift_between(V([0, 1]), V([1])) is None
    assert upward_shift_between(V([1, 2]), V([2, 1])) is None
