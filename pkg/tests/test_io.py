import pytest

from symgb import Monomial, Polynomial, PrimeField, format_polynomial, parse_polynomial
from symgb.io import ParseError, format_corpus, read_corpus, read_corpus_file


def test_problem_generators_parse():
    f1 = parse_polynomial("x1^3*x3 + x1^2*x2^3")
    assert f1 == Polynomial({Monomial({1: 3, 3: 1}): 1, Monomial({1: 2, 2: 3}): 1})
    assert format_polynomial(f1) == "x3*x1^3 + x2^3*x1^2"


@pytest.mark.parametrize("text,canonical", [
    ("0", "0"),
    ("-1", "-1"),
    ("x1 - x1", "0"),
    ("2*x1*x1", "2*x1^2"),
    ("x2 - 1/2*x1 + 3/6", "x2 - 1/2*x1 + 1/2"),
    ("  x1 *x2  ", "x2*x1"),
    ("-x3^2", "-x3^2"),
])
def test_canonical_printing(text, canonical):
    assert format_polynomial(parse_polynomial(text)) == canonical


@pytest.mark.parametrize("text,pos", [
    ("x0", 1), ("x1^0", 3), ("1/0", 2), ("x1 +", 4), ("3x1", 1), ("x", 1), ("", 0),
])
def test_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text)
    assert info.value.position == pos


def test_denominator_vanishing_in_prime_field():
    with pytest.raises(ParseError):
        parse_polynomial("1/7*x1", PrimeField(7))
    assert parse_polynomial("1/2*x1", PrimeField(7)).leading_coefficient() == 4


def test_corpus_round_trip(tmp_path):
    polys = [parse_polynomial("x1 + x2"), parse_polynomial("x2*x1")]
    text = format_corpus(polys, ["stabilized: true"])
    assert text == "x2 + x1\nx2*x1\n# stabilized: true\n"
    path = tmp_path / "basis.txt"
    path.write_text(text + "\n\n# trailing comment\n")
    assert read_corpus_file(path) == polys
    assert read_corpus(["", "# x", "x1"]) == [parse_polynomial("x1")]
