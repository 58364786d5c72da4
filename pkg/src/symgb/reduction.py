"""Symmetric polynomial reduction with explicit certificates.

Every reduction step subtracts ``c * u * sigma(g)`` for a reducer ``g``, a
permutation ``sigma``, a monomial ``u`` and a scalar ``c``.  The steps are
recorded so that ``f == remainder + sum(h_i * sigma_i(g_i))`` can be
checked independently by :func:`certificate_check`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .monomial import Monomial
from .order import sym_compare
from .permutation import Permutation
from .polynomial import Polynomial

DEFAULT_ORBIT_SEARCH_CAP = 10**6


class ReductionError(ValueError):
    pass


class OrbitSearchLimit(RuntimeError):
    """The permutation search inside orbit reduction exceeded its budget."""


@dataclass
class Certificate:
    """``input == remainder + sum(h * sigma(g) for h, sigma, g in summands)``."""

    remainder: Polynomial
    summands: list = field(default_factory=list)

    @property
    def steps(self) -> int:
        return len(self.summands)

    def combination(self) -> Polynomial:
        total = Polynomial.zero(self.remainder.field)
        for h, sigma, g in self.summands:
            total = total + h * g.permuted(sigma)
        return total


def _lm(coeffs: dict) -> Monomial:
    return max(coeffs, key=_mkey)


def _mkey(m: Monomial):
    return m.key


def _subtract_scaled(p: dict, g: Polynomial, c, u: Monomial, norm):
    """In place: ``p -= c * u * g``."""
    for m, a in g._coeffs.items():
        mm = m * u
        v = norm(p.get(mm, 0) - c * a)
        if v == 0:
            p.pop(mm, None)
        else:
            p[mm] = v


def _check_reducers(B: Sequence[Polynomial]):
    for g in B:
        if g.is_zero():
            raise ReductionError("zero polynomial cannot be used as a reducer")


def sg_step(f: Polynomial, g: Polynomial, sigma: Permutation) -> Polynomial:
    """``f - (lt(f) / sigma(lt(g))) * sigma(g)``; requires ``sigma(lm g) | lm f``."""
    if f.is_zero() or g.is_zero():
        raise ReductionError("sg_step needs nonzero polynomials")
    sg = g.permuted(sigma)
    lm_f, lm_sg = f.leading_monomial(), sg.leading_monomial()
    if not lm_sg.divides(lm_f):
        raise ReductionError(f"sigma(lm(g)) = {lm_sg} does not divide lm(f) = {lm_f}")
    c = f.field.div(f.leading_coefficient(), sg.leading_coefficient())
    return f - sg.mul_term(c, lm_f.quotient(lm_sg))


def reduce_full(f: Polynomial, B: Sequence[Polynomial]) -> Certificate:
    """Reduce ``f`` by the ordered sequence ``B`` in the symmetric cancellation order.

    The current leading term is reduced by the first ``g`` in ``B`` whose
    leading monomial precedes it; if there is none the term is moved to the
    remainder.  Tail terms are reduced too.
    """
    _check_reducers(B)
    fld = f.field
    norm = fld.normalize
    heads = [(g, g.leading_monomial()) for g in B]
    for g in B:
        f._check(g)
    p = dict(f._coeffs)
    rem: dict[Monomial, object] = {}
    summands = []
    while p:
        lm = _lm(p)
        lc = p[lm]
        for g, lmg in heads:
            wit = sym_compare(lmg, lm)
            if wit is None:
                continue
            sigma = wit.sigma
            sg = g.permuted(sigma)
            lm_sg = lmg.permuted(sigma)
            u = lm.quotient(lm_sg)
            c = fld.div(lc, sg._coeffs[lm_sg])
            _subtract_scaled(p, sg, c, u, norm)
            summands.append((Polynomial.from_monomial(u, c, fld), sigma, g))
            if p and not _mkey(_lm(p)) < lm.key:
                raise ReductionError(f"leading monomial did not decrease when reducing {lm} by {g}")
            break
        else:
            rem[lm] = lc
            del p[lm]
    return Certificate(Polynomial._raw(rem, fld), summands)


def is_reducible(f: Polynomial, B: Sequence[Polynomial]) -> bool:
    if f.is_zero():
        return False
    lm = f.leading_monomial()
    return any(sym_compare(g.leading_monomial(), lm) is not None for g in B)


# -- reduction by a finite symmetric group orbit ------------------------------


class _OrbitImage:
    __slots__ = ("head", "tau", "poly")

    def __init__(self, head, tau, poly):
        self.head = head
        self.tau = tau
        self.poly = poly


@lru_cache(maxsize=8192)
def _orbit_images(g: Polynomial, n: int, cap: int) -> tuple:
    """Distinct images ``tau(g)`` for ``tau`` in S_n.

    An image only depends on where ``tau`` sends the variables of ``g``, so
    the injective maps of that variable set into ``{1..n}`` are enumerated
    (not all of S_n) and completed order-preservingly to permutations.
    """
    idx = sorted({i for m in g._coeffs for i, _ in m.key})
    k = len(idx)
    count = 1
    for t in range(n - k + 1, n + 1):
        count *= t
    if count > cap:
        raise OrbitSearchLimit(f"orbit of {g} under S_{n} has {count} images (cap {cap})")
    seen = set()
    out = []
    for image in permutations(range(1, n + 1), k):
        mapping = dict(zip(idx, image))
        free_src = [i for i in range(1, n + 1) if i not in mapping]
        used = set(image)
        mapping.update(zip(free_src, [j for j in range(1, n + 1) if j not in used]))
        tau = Permutation(mapping)
        tg = g.permuted(tau)
        if tg in seen:
            continue
        seen.add(tg)
        out.append(_OrbitImage(tg.leading_monomial(), tau, tg))
    return tuple(out)


def _term_types(g: Polynomial) -> frozenset:
    return frozenset(m.type for m in g._coeffs)


def _type_fits(small: tuple, big: tuple) -> bool:
    return len(small) <= len(big) and all(a <= b for a, b in zip(small, big))


def find_orbit_reducer(g: Polynomial, target: Monomial, n: int,
                       cap: int = DEFAULT_ORBIT_SEARCH_CAP):
    """Return ``(tau, tau(g))`` with ``lm(tau(g)) | target``, or ``None``.

    Pruned first by exponent type: ``lm(tau(g))`` is the image of some term
    of ``g``, so some term's exponent multiset must fit under the target's.
    """
    tt = target.type
    if not any(_type_fits(t, tt) for t in _term_types(g)):
        return None
    for img in _orbit_images(g, n, cap):
        if img.head.divides(target):
            return img.tau, img.poly
    return None


def reduce_by_orbit(p: Polynomial, B: Sequence[Polynomial], n: int,
                    cap: int = DEFAULT_ORBIT_SEARCH_CAP) -> Certificate:
    """Reduce ``p`` by the pool ``{tau(g) : g in B, tau in S_n}`` using plain divisibility."""
    _check_reducers(B)
    if p.max_index > n or any(g.max_index > n for g in B):
        raise ReductionError(f"truncation order {n} is smaller than an index in use")
    fld = p.field
    norm = fld.normalize
    for g in B:
        p._check(g)
    work = dict(p._coeffs)
    rem: dict[Monomial, object] = {}
    summands = []
    while work:
        lm = _lm(work)
        lc = work[lm]
        for g in B:
            found = find_orbit_reducer(g, lm, n, cap)
            if found is None:
                continue
            tau, tg = found
            lm_tg = tg.leading_monomial()
            u = lm.quotient(lm_tg)
            c = fld.div(lc, tg._coeffs[lm_tg])
            _subtract_scaled(work, tg, c, u, norm)
            summands.append((Polynomial.from_monomial(u, c, fld), tau, g))
            break
        else:
            rem[lm] = lc
            del work[lm]
    return Certificate(Polynomial._raw(rem, fld), summands)


def certificate_check(f: Polynomial, cert: Certificate) -> bool:
    """Recompute ``remainder + sum(h * sigma(g))`` and the leading-monomial bound."""
    try:
        total = cert.remainder + cert.combination()
    except (ValueError, TypeError):
        return False
    if total != f:
        return False
    if f.is_zero():
        return all((h * g.permuted(s)).is_zero() for h, s, g in cert.summands)
    top = f.leading_monomial()
    for h, sigma, g in cert.summands:
        prod = h * g.permuted(sigma)
        if prod.is_zero() or prod.leading_monomial() > top:
            return False
    return True
