"""Random generators and small utilities shared by the test modules."""

import itertools
import random

from symgb import Monomial, Permutation, Polynomial, parse_polynomial

P = parse_polynomial

COEFFS = (1, -1, 2, -2, 3)


def rand_monomial(rng: random.Random, max_index: int = 3, degree: int = 3) -> Monomial:
    exps: dict[int, int] = {}
    for _ in range(rng.randint(1, degree)):
        i = rng.randint(1, max_index)
        exps[i] = exps.get(i, 0) + 1
    return Monomial(exps)


def rand_vector_monomial(rng: random.Random, max_index: int, max_exp: int) -> Monomial:
    return Monomial.from_vector([rng.randint(0, max_exp) for _ in range(max_index)])


def rand_polynomial(rng: random.Random, terms: int = 3, max_index: int = 3,
                    degree: int = 3, coeffs=COEFFS) -> Polynomial:
    k = rng.randint(1, terms)
    while True:
        p = Polynomial({rand_monomial(rng, max_index, degree): rng.choice(coeffs)
                        for _ in range(k)})
        if not p.is_zero():
            return p


def rand_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation.from_one_line(images)


def orbit(polys, n: int) -> list[Polynomial]:
    """All distinct images of ``polys`` under permutations of x1..xn."""
    out = []
    for g in polys:
        for image in itertools.permutations(range(1, n + 1)):
            q = g.permuted(Permutation.from_one_line(image))
            if q not in out:
                out.append(q)
    return out


def texts(polys) -> list[str]:
    return [str(p) for p in polys]
