"""Monomials in the variables x1, x2, ... with a sparse exponent map.

Ordering convention: lexicographic with the *highest* variable index
dominating, so x1 < x2 < x3 < ... and any monomial containing x2 is larger
than every power of x1.  Many systems use the opposite convention; this one
is forced by the symmetric cancellation order, which needs every monomial
below x1^3 to be a power of x1.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class Monomial:
    """Immutable power product ``x_{i1}^{e1} ... x_{ik}^{ek}``.

    Internally stored as a tuple of ``(index, exponent)`` pairs sorted by
    *descending* index.  That tuple doubles as the lexicographic sort key:
    Python tuple comparison scans from the highest index downward, a larger
    index beats a smaller one, and a proper prefix compares smaller.
    """

    __slots__ = ("_key", "_hash")

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[int, int] = {}
        for index, exp in items:
            index, exp = int(index), int(exp)
            if index < 1:
                raise ValueError(f"variable index must be positive, got {index}")
            if exp < 0:
                raise ValueError(f"exponent must be non-negative, got {exp}")
            if exp:
                acc[index] = acc.get(index, 0) + exp
        self._key = tuple(sorted(acc.items(), reverse=True))
        self._hash = hash(self._key)

    @classmethod
    def _from_key(cls, key: tuple) -> "Monomial":
        m = object.__new__(cls)
        m._key = key
        m._hash = hash(key)
        return m

    @classmethod
    def from_vector(cls, vector: Iterable[int]) -> "Monomial":
        """Build from a dense vector ``(e1, e2, ...)`` of exponents."""
        return cls((i, e) for i, e in enumerate(vector, start=1) if e)

    @classmethod
    def var(cls, index: int, exp: int = 1) -> "Monomial":
        return cls({index: exp})

    # -- views ---------------------------------------------------------------

    @property
    def key(self) -> tuple:
        return self._key

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self._key)

    def exponent(self, index: int) -> int:
        for i, e in self._key:
            if i == index:
                return e
            if i < index:
                break
        return 0

    @property
    def support(self) -> tuple[int, ...]:
        """Indices with nonzero exponent, ascending."""
        return tuple(i for i, _ in reversed(self._key))

    @property
    def max_index(self) -> int:
        return self._key[0][0] if self._key else 0

    @property
    def total_degree(self) -> int:
        return sum(e for _, e in self._key)

    @property
    def type(self) -> tuple[int, ...]:
        """Multiset of exponents (sorted descending); invariant under permutations."""
        return tuple(sorted((e for _, e in self._key), reverse=True))

    def vector(self, length: int | None = None) -> list[int]:
        n = self.max_index if length is None else length
        if n < self.max_index:
            raise ValueError("vector length shorter than max index")
        out = [0] * n
        for i, e in self._key:
            out[i - 1] = e
        return out

    def is_one(self) -> bool:
        return not self._key

    # -- arithmetic ----------------------------------------------------------

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        if not other._key:
            return self
        if not self._key:
            return other
        acc = dict(self._key)
        for i, e in other._key:
            acc[i] = acc.get(i, 0) + e
        return Monomial._from_key(tuple(sorted(acc.items(), reverse=True)))

    def divides(self, other: "Monomial") -> bool:
        """True iff every exponent of ``self`` is at most the matching one of ``other``."""
        theirs = dict(other._key)
        return all(theirs.get(i, 0) >= e for i, e in self._key)

    def quotient(self, divisor: "Monomial") -> "Monomial":
        """Return ``self / divisor``; ``divisor`` must divide ``self``."""
        acc = dict(self._key)
        for i, e in divisor._key:
            have = acc.get(i, 0)
            if have < e:
                raise ValueError(f"{divisor} does not divide {self}")
            if have == e:
                del acc[i]
            else:
                acc[i] = have - e
        return Monomial._from_key(tuple(sorted(acc.items(), reverse=True)))

    def lcm(self, other: "Monomial") -> "Monomial":
        acc = dict(self._key)
        for i, e in other._key:
            if e > acc.get(i, 0):
                acc[i] = e
        return Monomial._from_key(tuple(sorted(acc.items(), reverse=True)))

    def gcd(self, other: "Monomial") -> "Monomial":
        theirs = dict(other._key)
        pairs = [(i, min(e, theirs[i])) for i, e in self._key if i in theirs]
        return Monomial._from_key(tuple(pairs))

    def is_coprime(self, other: "Monomial") -> bool:
        theirs = dict(other._key)
        return not any(i in theirs for i, _ in self._key)

    def permuted(self, perm) -> "Monomial":
        """Apply a permutation: the exponent of x_i moves to x_{perm(i)}."""
        return Monomial._from_key(tuple(sorted(((perm(i), e) for i, e in self._key), reverse=True)))

    # -- ordering and identity -----------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Monomial) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Monomial"):
        return self._key < other._key

    def __le__(self, other: "Monomial"):
        return self._key <= other._key

    def __gt__(self, other: "Monomial"):
        return self._key > other._key

    def __ge__(self, other: "Monomial"):
        return self._key >= other._key

    def __repr__(self):
        return f"Monomial({self})"

    def __str__(self):
        if not self._key:
            return "1"
        return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self._key)


ONE = Monomial()


def lex_compare(u: Monomial, v: Monomial) -> int:
    """Three-way lexicographic comparison: -1, 0 or 1."""
    if u._key == v._key:
        return 0
    return -1 if u._key < v._key else 1
