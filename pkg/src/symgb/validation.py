"""Input validation shared by the estimator facade and the CLI."""

from __future__ import annotations

from typing import Iterable

from .fields import Field, field_from_spec
from .io import parse_polynomial
from .monomial import Monomial
from .polynomial import Polynomial


def check_field(field) -> Field:
    if isinstance(field, Field):
        return field
    if isinstance(field, str):
        return field_from_spec(field)
    raise TypeError(f"field must be a Field or 'q' / 'fp:P', got {field!r}")


def check_polynomial(obj, field: Field) -> Polynomial:
    """Coerce a string, Monomial or Polynomial to a Polynomial over ``field``."""
    if isinstance(obj, str):
        return parse_polynomial(obj, field)
    if isinstance(obj, Monomial):
        return Polynomial.from_monomial(obj, 1, field)
    if isinstance(obj, Polynomial):
        if obj.field != field:
            raise ValueError(f"polynomial over {obj.field!r}, expected {field!r}")
        return obj
    raise TypeError(f"cannot interpret {type(obj).__name__} as a polynomial")


def check_polynomials(X, field: Field, allow_zero: bool = True,
                      allow_empty: bool = False) -> list[Polynomial]:
    """Validate a batch of polynomials: a single item or an iterable of items."""
    if isinstance(X, (str, Polynomial, Monomial)):
        X = [X]
    if not isinstance(X, Iterable):
        raise TypeError(f"expected polynomials, got {type(X).__name__}")
    out = [check_polynomial(x, field) for x in X]
    if not out and not allow_empty:
        raise ValueError("expected at least one polynomial")
    if not allow_zero and any(p.is_zero() for p in out):
        raise ValueError("zero polynomial is not allowed here")
    return out
