"""Shared helpers: seeded generators for rationals, polynomials, and
rational functions.  Every randomized test builds its own
random.Random(seed) so failures reproduce exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from telescopic import ParameterPair, Poly, RatFunc


def random_fraction(rng: random.Random, bound: int = 50, signed: bool = False) -> Fraction:
    num = rng.randint(1, bound)
    if signed and rng.random() < 0.5:
        num = -num
    return Fraction(num, rng.randint(1, bound))


def random_params(rng: random.Random, bound: int = 50) -> ParameterPair:
    """A random pair a > b > 0 with numerators and denominators <= bound."""
    while True:
        x = random_fraction(rng, bound)
        y = random_fraction(rng, bound)
        if x != y:
            return ParameterPair(max(x, y), min(x, y))


def random_poly(
    rng: random.Random,
    max_degree: int = 4,
    bound: int = 9,
    nonzero: bool = False,
) -> Poly:
    degree = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-bound, bound)) for _ in range(degree + 1)]
    p = Poly(coeffs)
    while nonzero and p.is_zero():
        p = random_poly(rng, max_degree, bound, nonzero=False)
    return p


def random_ratfunc(rng: random.Random, max_degree: int = 3, bound: int = 9) -> RatFunc:
    return RatFunc(
        random_poly(rng, max_degree, bound),
        random_poly(rng, max_degree, bound, nonzero=True),
    )
