"""Shared helpers for the test suite."""

import random
from fractions import Fraction

from steklov_zeta import RationalComplex, TrigSeries


def random_fraction(rng: random.Random, num: int = 9, den: int = 9) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_exact_series(rng: random.Random, degree: int,
                        real: bool = False) -> TrigSeries:
    """Random rational-complex series with the exact requested degree."""
    coeffs = {}
    for n in range(0, degree + 1):
        re, im = random_fraction(rng), random_fraction(rng)
        if n == 0 and real:
            im = Fraction(0)
        coeffs[n] = RationalComplex(re, im)
        if n > 0:
            coeffs[-n] = (RationalComplex(re, -im) if real
                          else RationalComplex(random_fraction(rng),
                                               random_fraction(rng)))
    # pin the top coefficient so the degree is exact
    if degree > 0 and not coeffs[degree]:
        coeffs[degree] = RationalComplex(1, 0)
        if real:
            coeffs[-degree] = RationalComplex(1, 0)
    return TrigSeries.exact(coeffs)


def random_zero_sum_tuple(rng: random.Random, k: int, bound: int) -> tuple:
    """Zero-sum multi-index of length 2k with entries in [-bound, bound]."""
    while True:
        head = tuple(rng.randint(-bound, bound) for _ in range(2 * k - 1))
        last = -sum(head)
        if abs(last) <= bound:
            return head + (last,)
