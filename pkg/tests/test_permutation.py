import pytest

from symgb.permutation import CycleParseError, Permutation, compose, from_cycles, invert


def test_composition_applies_right_factor_first():
    s, t = from_cycles("(123)"), from_cycles("(12)")
    assert (s * t)(1) == s(t(1)) == 3
    assert compose(s, t) == s * t


def test_cycle_notation_reads_single_digits():
    assert from_cycles("(341)").one_line(4) == [3, 2, 4, 1]
    assert from_cycles("(12)(34)").cycles() == [(1, 2), (3, 4)]


@pytest.mark.parametrize("text", ["", "id", "()"])
def test_identity_spellings(text):
    assert from_cycles(text).is_identity()


@pytest.mark.parametrize("text", ["(11)", "(1a)", "(12", "12)"])
def test_bad_cycles(text):
    with pytest.raises(CycleParseError):
        from_cycles(text)


def test_inverse_and_one_line():
    s = Permutation.from_one_line([3, 1, 2])
    assert (s * invert(s)).is_identity()
    assert s.inverted().one_line(3) == [2, 3, 1]
    assert s.apply_inverse(s(2)) == 2
    assert s.cycle_string() == "(132)"


def test_points_outside_support_are_fixed():
    s = from_cycles("(23)")
    assert s(1) == 1 and s(100) == 100
    assert s.support == frozenset({2, 3})
    assert s.degree == 3


def test_one_line_must_be_a_permutation():
    with pytest.raises(ValueError):
        Permutation.from_one_line([1, 1, 2])
