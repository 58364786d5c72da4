"""Finitely supported permutations of the positive integers."""

from __future__ import annotations

import re
from typing import Iterable, Mapping


class CycleParseError(ValueError):
    pass


class Permutation:
    """A bijection of {1, 2, ...} moving only finitely many points.

    ``forward`` and ``inverse`` store only the moved points.  Composition
    follows function notation: ``(s * t)(i) == s(t(i))``, i.e. ``t`` acts
    first.
    """

    __slots__ = ("forward", "inverse", "_hash")

    def __init__(self, mapping: Mapping[int, int] | None = None):
        forward = {int(i): int(j) for i, j in (mapping or {}).items() if int(i) != int(j)}
        for i in forward:
            if i < 1:
                raise ValueError(f"permutation points must be positive, got {i}")
        inverse = {j: i for i, j in forward.items()}
        if len(inverse) != len(forward) or set(inverse) != set(forward):
            raise ValueError(f"mapping is not a bijection on its support: {mapping}")
        self.forward = forward
        self.inverse = inverse
        self._hash = hash(frozenset(forward.items()))

    @classmethod
    def identity(cls) -> "Permutation":
        return cls()

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Permutation":
        return cls(dict(pairs))

    @classmethod
    def from_one_line(cls, images: Iterable[int]) -> "Permutation":
        """``[s(1), s(2), ..., s(n)]`` to a permutation."""
        return cls({i: j for i, j in enumerate(images, start=1)})

    @classmethod
    def from_cycles(cls, text: str) -> "Permutation":
        """Parse cycle notation such as ``"(32)(56)(341)"`` or ``"(3 10)(1,2)"``.

        Cycles need not be disjoint; the product is applied right to left.
        Inside a cycle, points are separated by spaces or commas; without
        separators every digit is its own point.  ``"()"`` and ``"id"`` mean
        the identity.
        """
        src = text.strip()
        if src in ("", "id"):
            return cls()
        pos = 0
        cycles = []
        for m in re.finditer(r"\s*\(([^()]*)\)\s*", src):
            if m.start() != pos:
                raise CycleParseError(f"unexpected text at position {pos}: {src[pos:m.start()]!r}")
            pos = m.end()
            body = m.group(1).strip()
            if not body:
                continue
            if re.search(r"[\s,]", body):
                parts = [p for p in re.split(r"[\s,]+", body) if p]
            else:
                parts = list(body)
            if not all(p.isdigit() for p in parts):
                raise CycleParseError(f"non-numeric point in cycle ({body})")
            points = [int(p) for p in parts]
            if any(p < 1 for p in points):
                raise CycleParseError(f"cycle points must be positive: ({body})")
            if len(set(points)) != len(points):
                raise CycleParseError(f"repeated point in cycle ({body})")
            cycles.append(points)
        if pos != len(src):
            raise CycleParseError(f"unexpected text at position {pos}: {src[pos:]!r}")
        result = cls()
        for points in cycles:
            cyc = cls({a: b for a, b in zip(points, points[1:] + points[:1])})
            result = result * cyc
        return result

    def __call__(self, i: int) -> int:
        return self.forward.get(i, i)

    def __mul__(self, other: "Permutation") -> "Permutation":
        if not isinstance(other, Permutation):
            return NotImplemented
        points = set(self.forward) | set(other.forward)
        return Permutation({i: self(other(i)) for i in points})

    def inverted(self) -> "Permutation":
        p = object.__new__(Permutation)
        p.forward = dict(self.inverse)
        p.inverse = dict(self.forward)
        p._hash = hash(frozenset(p.forward.items()))
        return p

    def apply_inverse(self, i: int) -> int:
        return self.inverse.get(i, i)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.forward)

    @property
    def degree(self) -> int:
        """Largest moved point (0 for the identity)."""
        return max(self.forward, default=0)

    def is_identity(self) -> bool:
        return not self.forward

    def one_line(self, n: int | None = None) -> list[int]:
        n = self.degree if n is None else n
        return [self(i) for i in range(1, n + 1)]

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in sorted(self.forward):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        sep = "" if self.degree < 10 else " "
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cycs)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.forward == other.forward

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation({self.cycle_string()})"

    __str__ = cycle_string


def compose(s: Permutation, t: Permutation) -> Permutation:
    return s * t


def invert(s: Permutation) -> Permutation:
    return s.inverted()


def from_cycles(text: str) -> Permutation:
    return Permutation.from_cycles(text)
