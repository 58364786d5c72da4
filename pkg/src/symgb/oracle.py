"""Classical Buchberger over finitely many variables, kept as a correctness oracle.

Nothing here is shared with the symmetric engine beyond the polynomial
types: division, S-polynomials and completion are written out again so the
two routes can check each other.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .engine import BasisSet
from .permutation import Permutation
from .polynomial import Polynomial


class OracleError(ValueError):
    pass


@dataclass(frozen=True)
class TruncatedIdeal:
    """An ideal of K[x1..xM] given by generators."""

    generators: tuple
    var_bound: int

    def __post_init__(self):
        if self.var_bound < 1:
            raise OracleError("variable bound must be positive")
        for g in self.generators:
            if g.is_zero():
                raise OracleError("zero generator")
            if g.max_index > self.var_bound:
                raise OracleError(f"generator {g} uses an index above {self.var_bound}")

    @classmethod
    def orbit(cls, F: Sequence[Polynomial], m: int) -> "TruncatedIdeal":
        """The ideal generated by all images of ``F`` under permutations of x1..xm."""
        gens = []
        seen = set()
        for f in F:
            if f.max_index > m:
                raise OracleError(f"generator {f} uses an index above {m}")
            for image in permutations(range(1, m + 1)):
                g = f.permuted(Permutation.from_one_line(image))
                if g not in seen:
                    seen.add(g)
                    gens.append(g)
        return cls(tuple(gens), m)


def _normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """Classical multivariate division remainder."""
    fld = f.field
    lead = [(g.leading_monomial(), g) for g in G]
    lead = [(m, fld.inverse(g.coefficient(m)), g) for m, g in lead]
    work = f.coefficients
    rem = {}
    while work:
        m = max(work, key=lambda t: t.key)
        c = work[m]
        for lm, inv, g in lead:
            if lm.divides(m):
                q = m.quotient(lm)
                scale = fld.normalize(c * inv)
                for gm, gc in g.coefficients.items():
                    t = gm * q
                    v = fld.normalize(work.get(t, 0) - scale * gc)
                    if v == 0:
                        work.pop(t, None)
                    else:
                        work[t] = v
                break
        else:
            rem[m] = c
            del work[m]
    return Polynomial(rem, fld)


def _spoly(a: Polynomial, b: Polynomial) -> Polynomial:
    ta, tb = a.leading_term(), b.leading_term()
    L = ta.monomial.lcm(tb.monomial)
    fld = a.field
    return (a.mul_term(fld.div(1, ta.coefficient), L.quotient(ta.monomial))
            - b.mul_term(fld.div(1, tb.coefficient), L.quotient(tb.monomial)))


def _buchberger(gens: Sequence[Polynomial]) -> list[Polynomial]:
    """Plain Buchberger: smallest-lcm pair first, coprime and chain criteria."""
    G = []
    for g in gens:
        g = g.monic()
        if g not in G:
            G.append(g)
    heads = [g.leading_monomial() for g in G]
    pending: set[tuple[int, int]] = set()
    heap: list = []

    def add(i, j):
        L = heads[i].lcm(heads[j])
        pending.add((i, j))
        heapq.heappush(heap, (L.total_degree, L.key, i, j))

    for j in range(len(G)):
        for i in range(j):
            add(i, j)
    while heap:
        *_, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        mi, mj = heads[i], heads[j]
        if mi.gcd(mj).is_one():
            continue
        L = mi.lcm(mj)
        if any(k not in (i, j) and heads[k].divides(L)
               and (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending
               for k in range(len(G))):
            continue
        r = _normal_form(_spoly(G[i], G[j]), G)
        if not r.is_zero():
            G.append(r.monic())
            heads.append(G[-1].leading_monomial())
            k = len(G) - 1
            for t in range(k):
                add(t, k)
    return G


def _reduce_basis(G: list[Polynomial]) -> list[Polynomial]:
    # drop redundant leading monomials, then fully reduce each element
    G = sorted(G, key=lambda g: g.leading_monomial().key)
    kept = []
    for g in G:
        lm = g.leading_monomial()
        if any(h.leading_monomial().divides(lm) for h in kept):
            continue
        kept.append(g)
    out = []
    for k, g in enumerate(kept):
        rest = kept[:k] + kept[k + 1:]
        out.append(_normal_form(g, rest).monic() if rest else g.monic())
    return out


def classical_gb(ideal: TruncatedIdeal) -> BasisSet:
    """Reduced lex Gröbner basis of ``ideal`` in K[x1..xM] (x1 < x2 < ... < xM)."""
    if not ideal.generators:
        raise OracleError("no generators")
    G = _reduce_basis(_buchberger(ideal.generators))
    if any(g.leading_monomial().is_one() for g in G):
        G = [Polynomial.constant(1, G[0].field)]
    G.sort(key=lambda p: p.sort_key(), reverse=True)
    return BasisSet(tuple(G), ideal.var_bound)


def is_classical_gb(G: Sequence[Polynomial]) -> bool:
    """Buchberger's criterion: every S-polynomial has remainder zero."""
    G = list(G)
    return all(_normal_form(_spoly(G[i], G[j]), G).is_zero()
               for j in range(len(G)) for i in range(j))


def classical_normal_form(f: Polynomial, basis: BasisSet | Sequence[Polynomial]) -> Polynomial:
    return _normal_form(f, list(basis))


def classical_membership(f: Polynomial, ideal: TruncatedIdeal,
                         basis: BasisSet | None = None) -> bool:
    """``f`` in ``ideal``, by classical normal form against its reduced basis."""
    if f.max_index > ideal.var_bound:
        raise OracleError(f"{f} uses an index above {ideal.var_bound}")
    if f.is_zero():
        return True
    basis = basis if basis is not None else classical_gb(ideal)
    return _normal_form(f, list(basis)).is_zero()


def same_ideal(A: Sequence[Polynomial], B: Sequence[Polynomial], m: int) -> bool:
    """Classical ideal equality in K[x1..xm] by mutual reduction against reduced bases."""
    ga = classical_gb(TruncatedIdeal(tuple(A), m))
    gb = classical_gb(TruncatedIdeal(tuple(B), m))
    return ga.as_set() == gb.as_set()
