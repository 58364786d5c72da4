"""Gröbner bases for symmetric ideals of K[x1, x2, ...].

A symmetric ideal is generated, as a module over the group ring, by finitely
many polynomials ``F``.  :func:`truncated_gb` completes the orbit ``S_N F``
inside ``K[x1..xN]``; :func:`symmetric_gb` raises ``N`` until the truncated
basis stops producing anything new modulo ``S_N F``.  Membership is then
decided by :func:`~symgb.reduction.reduce_full`.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .fields import QQ, DomainError, Field
from .monomial import Monomial
from .order import sym_compare, upward_shift_between
from .polynomial import Polynomial
from .reduction import (
    DEFAULT_ORBIT_SEARCH_CAP,
    Certificate,
    _orbit_images,
    reduce_by_orbit,
    reduce_full,
)

log = logging.getLogger(__name__)


class GBError(ValueError):
    pass


class MaxOrderExceeded(RuntimeError):
    """Raised when :func:`symmetric_gb` hits ``max_order`` without stabilizing."""

    def __init__(self, message: str, last_basis: "BasisSet", report: "GBReport"):
        super().__init__(message)
        self.last_basis = last_basis
        self.report = report


@dataclass(frozen=True)
class BasisSet:
    """Monic, duplicate-free, deterministically ordered polynomials.

    ``groebner`` marks sets certified as symmetric Gröbner bases (required
    by :func:`is_member`); ``minimal`` and ``heuristic`` describe how the
    set was minimized.
    """

    elements: tuple
    order_used: int | None = None
    groebner: bool = False
    minimal: bool = False
    heuristic: bool = False

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, f):
        return f in self.elements

    def as_set(self) -> frozenset:
        return frozenset(self.elements)

    def leading_monomials(self) -> list[Monomial]:
        return [b.leading_monomial() for b in self.elements]


@dataclass
class GBConfig:
    start_order: int | None = None
    max_order: int = 20
    confirm_iterations: int = 0
    field: Field = QQ
    pair_pruning: bool = True
    orbit_cap: int = DEFAULT_ORBIT_SEARCH_CAP

    def __post_init__(self):
        if self.max_order < 1:
            raise GBError("max_order must be positive")
        if self.start_order is not None and not 1 <= self.start_order <= self.max_order:
            raise GBError("start_order must lie in [1, max_order]")
        if self.confirm_iterations < 0:
            raise GBError("confirm_iterations must be non-negative")


@dataclass
class GBReport:
    basis: BasisSet
    orders_visited: list = field(default_factory=list)
    pair_counts: dict = field(default_factory=dict)
    reduction_counts: dict = field(default_factory=dict)
    stabilized: bool = False

    def summary_lines(self) -> list[str]:
        lines = [
            f"stabilized: {str(self.stabilized).lower()}",
            f"orders visited: {' '.join(map(str, self.orders_visited))}",
        ]
        for n in self.orders_visited:
            lines.append(
                f"order {n}: pairs {self.pair_counts.get(n, 0)}, "
                f"reductions {self.reduction_counts.get(n, 0)}"
            )
        lines.append(f"basis size: {len(self.basis)}")
        return lines


def _sorted_basis(polys: Iterable[Polynomial]) -> tuple:
    return tuple(sorted(polys, key=lambda p: p.sort_key(), reverse=True))


def _prepare(F: Sequence[Polynomial], field: Field | None = None) -> list[Polynomial]:
    """Validate generators and return them monic and deduplicated, order kept."""
    F = list(F)
    if not F:
        raise GBError("need at least one generator")
    fld = field or F[0].field
    out, seen = [], set()
    for f in F:
        if not isinstance(f, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(f).__name__}")
        if f.field != fld:
            raise DomainError(f"generator over {f.field!r}, expected {fld!r}")
        if f.is_zero():
            raise GBError("zero polynomial is not allowed as a generator")
        m = f.monic()
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def _unit_basis(fld: Field, order: int | None) -> BasisSet:
    return BasisSet((Polynomial.constant(1, fld),), order, groebner=True, minimal=True)


def _has_unit(F: Sequence[Polynomial]) -> bool:
    return any(f.leading_monomial().is_one() for f in F)


def s_polynomial(a: Polynomial, b: Polynomial) -> Polynomial:
    """Classical lcm-based S-polynomial."""
    la, lb = a.leading_monomial(), b.leading_monomial()
    L = la.lcm(lb)
    fld = a.field
    ca = fld.inverse(a.leading_coefficient())
    cb = fld.inverse(b.leading_coefficient())
    return a.mul_term(ca, L.quotient(la)) - b.mul_term(cb, L.quotient(lb))


# -- interreduction ------------------------------------------------------------


def interreduce_minimize(B: BasisSet | Iterable[Polynomial], order_used: int | None = None,
                         groebner: bool = False) -> BasisSet:
    """Symmetric interreduction followed by removal of non-minimal leading monomials."""
    if isinstance(B, BasisSet):
        order_used = B.order_used if order_used is None else order_used
        groebner = groebner or B.groebner
    elems = _prepare(B) if not isinstance(B, BasisSet) else list(B.elements)
    if not elems:
        return BasisSet((), order_used, groebner)
    if _has_unit(elems):
        return _unit_basis(elems[0].field, order_used)
    elems = list(_sorted_basis(elems))
    changed = True
    while changed:
        changed = False
        for k, b in enumerate(elems):
            others = elems[:k] + elems[k + 1:]
            if not others:
                break
            r = reduce_full(b, others).remainder
            if r.is_zero():
                del elems[k]
                changed = True
                break
            r = r.monic()
            if r != b:
                if r.leading_monomial().is_one():
                    return _unit_basis(r.field, order_used)
                if r in others:
                    del elems[k]
                else:
                    elems[k] = r
                    elems = list(_sorted_basis(elems))
                changed = True
                break
    heads = [b.leading_monomial() for b in elems]
    keep = []
    for k, b in enumerate(elems):
        if any(j != k and heads[j] != heads[k] and sym_compare(heads[j], heads[k]) is not None
               for j in range(len(elems))):
            continue
        keep.append(b)
    return BasisSet(_sorted_basis(keep), order_used, groebner, minimal=True)


# -- truncated completion ---------------------------------------------------------


@dataclass
class _Stats:
    pairs: int = 0
    reductions: int = 0
    pruned: int = 0
    added: int = 0


def truncated_gb(F: Sequence[Polynomial], n: int, pair_pruning: bool = True,
                 orbit_cap: int = DEFAULT_ORBIT_SEARCH_CAP, stats: _Stats | None = None) -> BasisSet:
    """Truncated Gröbner basis of order ``n`` for the symmetric ideal generated by ``F``.

    Runs critical-pair completion over the explicit pool ``S_n B`` (``B``
    starts as ``F``); every S-polynomial is reduced by :func:`reduce_by_orbit`
    against ``B`` and nonzero remainders join ``B`` together with their
    orbits.  The final pool is interreduced in the symmetric order.
    """
    basis = _prepare(F)
    if n < 1 or any(f.max_index > n for f in basis):
        raise GBError(f"truncation order {n} is smaller than an index appearing in the input")
    stats = stats if stats is not None else _Stats()
    fld = basis[0].field
    if _has_unit(basis):
        return _unit_basis(fld, n)

    pool: list[Polynomial] = []
    heads: list[Monomial] = []
    in_pool: set[Polynomial] = set()
    queue: list = []
    live: set[tuple[int, int]] = set()

    def push_orbit(g: Polynomial):
        for img in _orbit_images(g, n, orbit_cap):
            q = img.poly.monic()
            if q in in_pool:
                continue
            k = len(pool)
            pool.append(q)
            in_pool.add(q)
            heads.append(q.leading_monomial())
            for j in range(k):
                L = heads[j].lcm(heads[k])
                heapq.heappush(queue, (L.total_degree, L.key, j, k))
                live.add((j, k))

    for g in basis:
        push_orbit(g)

    while queue:
        _, lkey, i, j = heapq.heappop(queue)
        if (i, j) not in live:
            continue
        live.discard((i, j))
        stats.pairs += 1
        hi, hj = heads[i], heads[j]
        if pair_pruning:
            if hi.is_coprime(hj):
                stats.pruned += 1
                continue
            L = hi.lcm(hj)
            if _chain_criterion(i, j, L, heads, live):
                stats.pruned += 1
                continue
        h = s_polynomial(pool[i], pool[j])
        if h.is_zero():
            continue
        stats.reductions += 1
        r = reduce_by_orbit(h, basis, n, orbit_cap).remainder
        if r.is_zero():
            continue
        r = r.monic()
        if r.leading_monomial().is_one():
            return _unit_basis(fld, n)
        basis.append(r)
        stats.added += 1
        push_orbit(r)
    log.debug("order %d: pool %d, basis %d, pairs %d, reductions %d",
              n, len(pool), len(basis), stats.pairs, stats.reductions)
    # symmetric reduction only uses upward shifts, so the whole orbit pool is
    # minimized rather than the orbit representatives
    return interreduce_minimize(pool, order_used=n)


def _chain_criterion(i: int, j: int, L: Monomial, heads: list, live: set) -> bool:
    # Buchberger's second criterion: some k with lm_k | lcm(i, j) whose pairs
    # with i and j have already been handled
    for k, hk in enumerate(heads):
        if k == i or k == j:
            continue
        if not hk.divides(L):
            continue
        if (min(i, k), max(i, k)) in live or (min(j, k), max(j, k)) in live:
            continue
        return True
    return False


# -- full symmetric completion ---------------------------------------------------


def _reduces_to_zero_by_orbit(polys: Iterable[Polynomial], F: Sequence[Polynomial], n: int,
                              cap: int) -> bool:
    return all(reduce_by_orbit(p, F, n, cap).remainder.is_zero() for p in polys)


def symmetric_gb(F: Sequence[Polynomial], cfg: GBConfig | None = None) -> GBReport:
    """Gröbner basis of the symmetric ideal generated by ``F``.

    For ``i = start, start+1, ...`` the truncated basis ``F'`` of order ``i``
    is computed from the previous one; once every element of ``F'``
    reduces to zero by ``S_i`` applied to the basis of the order before, the
    ideal is considered stable and ``F'`` is returned.  The first order only
    seeds this comparison.  With
    ``confirm_iterations = k`` the same test must also pass at the next
    ``k`` orders.
    """
    cfg = cfg or GBConfig()
    gens = _prepare(F)
    fld = gens[0].field
    report = GBReport(BasisSet(()))
    if _has_unit(gens):
        report.basis = _unit_basis(fld, None)
        report.stabilized = True
        return report
    top = max(max(f.max_index for f in gens), 1)
    i = cfg.start_order if cfg.start_order is not None else max(top, 2)
    if i < top:
        raise GBError(f"start order {i} is below the largest index {top} in the generators")

    current = list(gens)
    last: BasisSet | None = None

    def step(gs: Sequence[Polynomial], order: int) -> BasisSet:
        if order > cfg.max_order:
            raise MaxOrderExceeded(
                f"no stabilization up to order {cfg.max_order}",
                last or BasisSet(_sorted_basis(gs), order - 1), report)
        st = _Stats()
        out = truncated_gb(gs, order, cfg.pair_pruning, cfg.orbit_cap, st)
        report.orders_visited.append(order)
        report.pair_counts[order] = st.pairs
        report.reduction_counts[order] = st.reductions
        log.info("order %d: truncated basis of size %d", order, len(out))
        return out

    # the input itself is not a truncated basis, so the first order can
    # never certify stability: the test compares consecutive orders
    from_lower_order = False
    while True:
        nxt = step(current, i)
        last = nxt
        if _has_unit(nxt.elements):
            report.basis = _unit_basis(fld, i)
            report.stabilized = True
            return report
        if from_lower_order and _reduces_to_zero_by_orbit(nxt.elements, current, i,
                                                          cfg.orbit_cap):
            confirmed = True
            for k in range(1, cfg.confirm_iterations + 1):
                later = step(nxt.elements, i + k)
                last = later
                if not _reduces_to_zero_by_orbit(later.elements, nxt.elements, i + k,
                                                 cfg.orbit_cap):
                    confirmed = False
                    current = list(later.elements)
                    i = i + k + 1
                    break
            if confirmed:
                report.basis = BasisSet(nxt.elements, i, groebner=True, minimal=True)
                report.stabilized = True
                return report
            continue
        current = list(nxt.elements)
        from_lower_order = True
        i += 1


# -- monomial ideals -----------------------------------------------------------------


def monomial_orbit_gb(G: Sequence[Monomial], field: Field = QQ) -> tuple[BasisSet, BasisSet]:
    """Orbit basis ``S_N G`` and its minimal subset for a monomial symmetric ideal.

    Elements of the orbit that arise from another element by an upward shift
    are dropped.  This is provably minimal when every monomial of ``G`` has
    the same degree; otherwise a general minimization pass follows and the
    result is flagged ``heuristic``.
    """
    G = list(G)
    if not G:
        raise GBError("need at least one monomial")
    n = max(g.max_index for g in G)
    orbit: list[Monomial] = []
    seen: set[Monomial] = set()
    for g in G:
        for img in _orbit_images(Polynomial.from_monomial(g, 1, field), max(n, 1),
                                 DEFAULT_ORBIT_SEARCH_CAP):
            m = img.poly.leading_monomial()
            if m not in seen:
                seen.add(m)
                orbit.append(m)
    minimal = [h for h in orbit
               if not any(g != h and upward_shift_between(g, h) is not None for g in orbit)]
    mixed = len({g.total_degree for g in G}) > 1
    if mixed:
        minimal = [h for h in minimal
                   if not any(g != h and sym_compare(g, h) is not None for g in minimal)]
    as_poly = lambda ms: _sorted_basis(Polynomial.from_monomial(m, 1, field) for m in ms)
    full = BasisSet(as_poly(orbit), n, groebner=True)
    mini = BasisSet(as_poly(minimal), n, groebner=True, minimal=True, heuristic=mixed)
    return full, mini


# -- membership -------------------------------------------------------------------------


def is_member(f: Polynomial, basis: BasisSet) -> tuple[bool, Certificate]:
    """Decide ``f`` in the ideal by reducing with a symmetric Gröbner basis."""
    if not isinstance(basis, BasisSet) or not basis.groebner:
        raise GBError("membership requires a Gröbner basis")
    if f.is_zero():
        return True, Certificate(f, [])
    cert = reduce_full(f, list(basis.elements))
    return cert.remainder.is_zero(), cert
