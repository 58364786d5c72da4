"""Sparse polynomials over an exact field in the variables x1, x2, ..."""

from __future__ import annotations

from typing import Iterable, Mapping

from .fields import QQ, DomainError, Field
from .monomial import ONE, Monomial
from .permutation import Permutation


class Term(tuple):
    """A ``(coefficient, monomial)`` pair with nonzero coefficient."""

    __slots__ = ()

    def __new__(cls, coefficient, monomial: Monomial):
        if coefficient == 0:
            raise ValueError("term coefficient must be nonzero")
        return super().__new__(cls, (coefficient, monomial))

    @property
    def coefficient(self):
        return self[0]

    @property
    def monomial(self) -> Monomial:
        return self[1]


class Polynomial:
    """Immutable polynomial stored as ``{Monomial: coefficient}``.

    Zero coefficients are never stored; the empty map is the zero
    polynomial.  :attr:`terms` lists the terms in strictly decreasing lex
    order, so ``terms[0]`` is the leading term.
    """

    __slots__ = ("field", "_coeffs", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = (), field: Field = QQ):
        self.field = field
        coeffs: dict[Monomial, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else ((m, c) for c, m in terms)
        for mono, c in items:
            if not isinstance(mono, Monomial):
                raise TypeError(f"expected Monomial, got {type(mono).__name__}")
            c = field.convert(c)
            if mono in coeffs:
                c = field.normalize(coeffs[mono] + c)
            if c == 0:
                coeffs.pop(mono, None)
            else:
                coeffs[mono] = c
        self._coeffs = coeffs
        self._terms = None
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: dict, field: Field) -> "Polynomial":
        # trusted constructor: coeffs already normalized with no zeros
        p = object.__new__(cls)
        p.field = field
        p._coeffs = coeffs
        p._terms = None
        p._hash = None
        return p

    @classmethod
    def zero(cls, field: Field = QQ) -> "Polynomial":
        return cls._raw({}, field)

    @classmethod
    def constant(cls, c, field: Field = QQ) -> "Polynomial":
        c = field.convert(c)
        return cls._raw({ONE: c} if c != 0 else {}, field)

    @classmethod
    def from_monomial(cls, m: Monomial, c=1, field: Field = QQ) -> "Polynomial":
        c = field.convert(c)
        return cls._raw({m: c} if c != 0 else {}, field)

    @classmethod
    def from_term(cls, term: Term, field: Field = QQ) -> "Polynomial":
        return cls.from_monomial(term.monomial, term.coefficient, field)

    # -- views ---------------------------------------------------------------

    @property
    def terms(self) -> tuple[Term, ...]:
        if self._terms is None:
            self._terms = tuple(
                Term(self._coeffs[m], m) for m in sorted(self._coeffs, key=_key, reverse=True)
            )
        return self._terms

    @property
    def coefficients(self) -> dict[Monomial, object]:
        return dict(self._coeffs)

    def coefficient(self, m: Monomial):
        return self._coeffs.get(m, self.field.zero)

    @property
    def monomials(self) -> list[Monomial]:
        return [t.monomial for t in self.terms]

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def leading_monomial(self) -> Monomial:
        if not self._coeffs:
            raise ValueError("zero has no leading term")
        if self._terms is not None:
            return self._terms[0].monomial
        return max(self._coeffs, key=_key)

    def leading_coefficient(self):
        return self._coeffs[self.leading_monomial()]

    def leading_term(self) -> Term:
        m = self.leading_monomial()
        return Term(self._coeffs[m], m)

    @property
    def max_index(self) -> int:
        return max((m.max_index for m in self._coeffs), default=0)

    @property
    def total_degree(self) -> int:
        return max((m.total_degree for m in self._coeffs), default=0)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.field != other.field:
            raise DomainError(f"coefficient domains differ: {self.field!r} vs {other.field!r}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, Monomial):
            return Polynomial.from_monomial(other, 1, self.field)
        return Polynomial.constant(other, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        norm = self.field.normalize
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            if m in out:
                s = norm(out[m] + c)
                if s == 0:
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = c
        return Polynomial._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        norm = self.field.normalize
        return Polynomial._raw({m: norm(-c) for m, c in self._coeffs.items()}, self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        norm = self.field.normalize
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            if m in out:
                s = norm(out[m] - c)
                if s == 0:
                    del out[m]
                else:
                    out[m] = s
            else:
                out[m] = norm(-c)
        return Polynomial._raw(out, self.field)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def mul_term(self, coefficient, monomial: Monomial) -> "Polynomial":
        """Multiply by the single term ``coefficient * monomial``."""
        c = self.field.convert(coefficient)
        if c == 0:
            return Polynomial.zero(self.field)
        norm = self.field.normalize
        if monomial.is_one():
            return Polynomial._raw({m: norm(a * c) for m, a in self._coeffs.items()}, self.field)
        return Polynomial._raw(
            {m * monomial: norm(a * c) for m, a in self._coeffs.items()}, self.field
        )

    def __mul__(self, other):
        if isinstance(other, Term):
            return self.mul_term(other.coefficient, other.monomial)
        other = self._coerce(other)
        norm = self.field.normalize
        out: dict[Monomial, object] = {}
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw({m: c for m, c in ((m, norm(c)) for m, c in out.items()) if c != 0},
                               self.field)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        return self.mul_term(c, ONE)

    def monic(self) -> "Polynomial":
        if not self._coeffs:
            return self
        lc = self.leading_coefficient()
        if lc == 1:
            return self
        return self.scale(self.field.inverse(lc))

    def permuted(self, perm: Permutation) -> "Polynomial":
        """Apply ``perm`` to every monomial; exponents of x_i move to x_perm(i)."""
        if perm.is_identity():
            return self
        return Polynomial._raw({m.permuted(perm): c for m, c in self._coeffs.items()}, self.field)

    def with_field(self, field: Field) -> "Polynomial":
        return Polynomial(self._coeffs, field)

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self._coeffs == other._coeffs
        if isinstance(other, (int,)) or hasattr(other, "denominator"):
            return self == Polynomial.constant(other, self.field)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, frozenset(self._coeffs.items())))
        return self._hash

    def sort_key(self):
        """Deterministic ordering key: lex of lm, then term count, then all terms."""
        ts = self.terms
        return (ts[0].monomial.key if ts else (), len(ts), tuple(t.monomial.key for t in ts),
                tuple(str(t.coefficient) for t in ts))

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        from .io import format_polynomial

        return format_polynomial(self)


def _key(m: Monomial):
    return m.key


def leading_term(f: Polynomial) -> Term:
    return f.leading_term()


def leading_monomial(f: Polynomial) -> Monomial:
    return f.leading_monomial()


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def subtract(f: Polynomial, g: Polynomial) -> Polynomial:
    return f - g


def multiply_term(t: Term, f: Polynomial) -> Polynomial:
    return f.mul_term(t.coefficient, t.monomial)


def apply_permutation(perm: Permutation, obj):
    """Act on a :class:`Polynomial` or :class:`Monomial`."""
    return obj.permuted(perm)
