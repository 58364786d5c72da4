"""The symmetric cancellation order on monomials.

``v`` precedes ``w`` when some upward shift of ``v`` (a permutation sending
the support indices ``i1 < ... < in`` of ``v`` to ``s(i1) < ... < s(in)``
with ``s(ik) >= ik``) maps ``v`` onto a divisor of ``w``, where the shift
only moves indices up to the largest index of ``w``.  :func:`sym_compare`
decides this with a greedy two-pointer scan and returns a witness
permutation; :func:`brute_force_sym_compare` is an exhaustive check used as
an oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .monomial import Monomial
from .permutation import Permutation

BRUTE_FORCE_MAX_INDEX = 12


@dataclass(frozen=True)
class Witness:
    """Certificate that ``v`` precedes ``w``.

    ``match_pairs`` is the increasing matching of the support of ``v`` found
    by the greedy scan; ``completed_pairs`` extends it to all of
    ``{1..order}`` and is the one-line form of ``sigma``.
    """

    sigma: Permutation
    match_pairs: frozenset
    order: int
    completed_pairs: frozenset = field(default=frozenset())


@dataclass(frozen=True)
class ShiftRelation:
    source: Monomial
    target: Monomial
    shift: Permutation


def sym_compare(v: Monomial, w: Monomial) -> Witness | None:
    """Return a witness for ``v`` preceding ``w``, or ``None`` if they are not related."""
    n = w.max_index
    if v.is_one():
        return Witness(Permutation(), frozenset(), n,
                       frozenset((i, i) for i in range(1, n + 1)))
    if n == 0 or v.max_index > n:
        return None
    vv = [0] + v.vector(n)
    ww = [0] + w.vector(n)

    # greedy matching of support indices, ascending
    t = 1
    match: dict[int, int] = {}
    for i in range(1, n + 1):
        vi = vv[i]
        if vi:
            for j in range(t, n + 1):
                if vi <= ww[j]:
                    t = j + 1
                    match[i] = j
                    break
        t = max(i + 1, t)
    support_size = sum(1 for x in vv if x)
    if len(match) < support_size:
        return None

    # complete to a permutation of {1..n}: unmatched targets from the top
    # receive the largest unused source
    greedy = frozenset(match.items())
    full = dict(match)
    images = set(match.values())
    free_sources = [i for i in range(1, n + 1) if i not in full]
    for j in range(n, 0, -1):
        if j not in images:
            i = free_sources.pop()
            full[i] = j
            images.add(j)
    sigma = Permutation(full)
    return Witness(sigma, greedy, n, frozenset(full.items()))


def sym_leq(v: Monomial, w: Monomial) -> bool:
    return sym_compare(v, w) is not None


def is_upward_shift(sigma: Permutation, v: Monomial) -> bool:
    """Strictly increasing on the support of ``v`` with every image at least its preimage."""
    prev = 0
    for i in v.support:
        j = sigma(i)
        if j < i or j <= prev:
            return False
        prev = j
    return True


def validate_witness(sigma: Permutation, v: Monomial, w: Monomial) -> bool:
    """Check ``sigma`` is an upward shift of ``v`` and ``sigma(v)`` divides ``w``."""
    return is_upward_shift(sigma, v) and v.permuted(sigma).divides(w)


def _shift_permutation(sources, targets) -> Permutation:
    # sources -> targets pointwise, remaining points of targets\sources sent
    # order-preservingly onto sources\targets
    mapping = dict(zip(sources, targets))
    src_set, tgt_set = set(sources), set(targets)
    spill_from = sorted(tgt_set - src_set)
    spill_to = sorted(src_set - tgt_set)
    mapping.update(zip(spill_from, spill_to))
    return Permutation(mapping)


def upward_shift_between(g: Monomial, h: Monomial) -> ShiftRelation | None:
    """Return the shift carrying ``g`` onto ``h`` if ``h`` is an upward shift of ``g``."""
    gs, hs = g.support, h.support
    if len(gs) != len(hs):
        return None
    for i, j in zip(gs, hs):
        if j < i or g.exponent(i) != h.exponent(j):
            return None
    return ShiftRelation(g, h, _shift_permutation(gs, hs))


def brute_force_sym_compare(v: Monomial, w: Monomial,
                            max_index: int = BRUTE_FORCE_MAX_INDEX) -> bool:
    """Exhaustive search over increasing upward maps of ``supp(v)`` into ``{1..N}``."""
    n = w.max_index
    if n > max_index:
        raise ValueError("oracle scale exceeded")
    src = v.support
    if not src:
        return True
    vexp = v.exponents
    wexp = w.exponents
    for image in combinations(range(1, n + 1), len(src)):
        if all(j >= i and vexp[i] <= wexp.get(j, 0) for i, j in zip(src, image)):
            return True
    return False
