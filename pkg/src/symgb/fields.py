"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from fractions import Fraction


class DomainError(ValueError):
    """Raised when operands live over different coefficient fields."""


class Field:
    """Base class for coefficient fields.

    Elements are plain Python numbers (``Fraction`` for the rationals,
    ``int`` in ``[0, p)`` for prime fields) so that polynomial arithmetic
    can use ordinary operators followed by :meth:`normalize`.
    """

    zero = 0
    one = 1

    def convert(self, value):
        raise NotImplementedError

    def normalize(self, value):
        return value

    def div(self, a, b):
        raise NotImplementedError

    def inverse(self, a):
        return self.div(self.one, a)


class RationalField(Field):
    """The field Q with elements stored as ``fractions.Fraction``."""

    name = "q"

    def convert(self, value):
        return Fraction(value)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return Fraction(a) / b

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"

    def format(self, value):
        value = Fraction(value)
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"


class PrimeField(Field):
    """The field GF(p) for a prime p, elements stored as ints in [0, p)."""

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"field characteristic must be prime, got {p}")
        self.p = p
        self.name = f"fp:{p}"

    def convert(self, value):
        if isinstance(value, Fraction):
            return self.div(value.numerator % self.p, value.denominator % self.p)
        return int(value) % self.p

    def normalize(self, value):
        return value % self.p

    def div(self, a, b):
        b %= self.p
        if b == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return (a * pow(b, -1, self.p)) % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def format(self, value):
        return str(value)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


QQ = RationalField()


def field_from_spec(text: str) -> Field:
    """Build a field from ``"q"`` or ``"fp:P"``."""
    text = text.strip().lower()
    if text in ("q", "qq"):
        return QQ
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ValueError(f"bad prime in field spec {text!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field {text!r}; expected 'q' or 'fp:P'")
