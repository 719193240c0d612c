"""Zeta-invariants of a weight function on the circle.

For a series a with coefficients a_n, the invariants are the 2k-forms

    Z_k(a) = sum_{j_1 + ... + j_{2k} = 0} N_{j_1...j_{2k}} a_{j_1} ... a_{j_{2k}},

    N_{j_1...j_{2k}} = sum_n ( |f(n)| - f(n) ),
    f(n) = n (n + j_1) (n + j_1 + j_2) ... (n + j_1 + ... + j_{2k-1}).

Only finitely many n contribute: f is a monic polynomial of degree 2k whose
roots lie in [-|j|, |j|] with |j| = |j_1| + ... + |j_{2k}|, so the sum runs
over that integer interval.  N coefficients are non-negative even integers,
invariant under cyclic index shifts and under flipping the signs of all
indices, but not fully symmetric; the symmetrized coefficients

    Z_{j_1...j_{2k}} = (1/(2k-1)!) sum over permutations of the first 2k-1
                       slots of N with the last slot fixed

are fully symmetric and define the same form.  Everything here is exact:
coefficients are big integers or Fractions, never floats.

Closed forms are implemented for the two lowest orders: the pair
coefficient Z_{j,-j} = |j^3 - j| / 3, and the quadruple coefficients, which
are piecewise odd quintic polynomials evaluated after canonicalizing the
quadruple under permutations and a global sign flip.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .errors import CanonicalizationFailure, NonZeroSum
from .fourier import EXACT, TrigSeries
from .scalars import RC_ZERO

MultiIndex = tuple  # a tuple of 2k integers


def _validate_index(indices) -> tuple:
    idx = tuple(int(j) for j in indices)
    if len(idx) < 2 or len(idx) % 2:
        raise ValueError(f"multi-index must have even length >= 2, got {idx}")
    return idx


def brute_n(indices) -> int:
    """Brute-force coefficient N for a zero-sum multi-index.

    Sums |f(n)| - f(n) over the integer interval [-|j|, |j|] that contains
    every root of f.  Always a non-negative even integer.
    """
    idx = _validate_index(indices)
    if sum(idx) != 0:
        raise NonZeroSum(f"indices must sum to zero, got {idx}")
    partial = []
    s = 0
    for j in (0,) + idx[:-1]:
        s += j
        partial.append(s)
    span = sum(abs(j) for j in idx)
    total = 0
    for n in range(-span, span + 1):
        p = 1
        for s in partial:
            f = n + s
            if f == 0:
                p = 0
                break
            p *= f
        if p < 0:
            total -= 2 * p
    return total


def symmetrize_z(indices) -> Fraction:
    """Symmetrized coefficient Z for a zero-sum multi-index.

    Averages brute_n over the (2k-1)! permutations that fix the last slot;
    cyclic invariance of N makes this equal to the average over all (2k)!
    permutations (see symmetrize_z_full, kept as a cross-check).
    """
    idx = _validate_index(indices)
    if sum(idx) != 0:
        raise NonZeroSum(f"indices must sum to zero, got {idx}")
    last = idx[-1]
    perms = Counter(itertools.permutations(idx[:-1]))
    total = sum(cnt * brute_n(p + (last,)) for p, cnt in perms.items())
    return Fraction(total, math.factorial(len(idx) - 1))


def symmetrize_z_full(indices) -> Fraction:
    """Slow full symmetrization over all (2k)! permutations; validation only."""
    idx = _validate_index(indices)
    if sum(idx) != 0:
        raise NonZeroSum(f"indices must sum to zero, got {idx}")
    perms = Counter(itertools.permutations(idx))
    total = sum(cnt * brute_n(p) for p, cnt in perms.items())
    return Fraction(total, math.factorial(len(idx)))


_Z_CACHE: dict[tuple, Fraction] = {}


def z_coeff(indices) -> Fraction:
    """Symmetric coefficient Z, extended by zero off the zero-sum plane.

    Memoized on the sorted index tuple (Z is fully symmetric), which makes
    large sweeps and repeated form evaluations cheap.
    """
    idx = _validate_index(indices)
    if sum(idx) != 0:
        return Fraction(0)
    key = tuple(sorted(idx))
    val = _Z_CACHE.get(key)
    if val is None:
        val = symmetrize_z(key)
        _Z_CACHE[key] = val
    return val


# enumeration of zero-sum index multisets -----------------------------------


def zero_sum_multisets(values, slots: int):
    """Non-decreasing zero-sum tuples of the given length over sorted values.

    Recursive generation with partial-sum pruning: a branch dies as soon as
    the remaining slots cannot bring the running sum back to zero.
    """
    vals = sorted(set(values))
    if not vals:
        return
    vmax = vals[-1]
    out: list[int] = []

    def rec(start: int, left: int, total: int):
        if left == 0:
            if total == 0:
                yield tuple(out)
            return
        if total + left * vmax < 0:
            return
        for i in range(start, len(vals)):
            v = vals[i]
            if total + left * v > 0:
                break
            out.append(v)
            yield from rec(i, left - 1, total + v)
            out.pop()

    yield from rec(0, slots, 0)


def _orderings(multiset: tuple) -> int:
    count = math.factorial(len(multiset))
    for _, run in Counter(multiset).items():
        count //= math.factorial(run)
    return count


def _form_sum(a: TrigSeries, slots: int, coeff_fn):
    """sum over zero-sum index tuples of coeff * a_{j_1} * ... * a_{j_slots}."""
    exact = a.backend == EXACT
    total = RC_ZERO if exact else 0j
    if not a:
        return total
    for ms in zero_sum_multisets(a.support, slots):
        c = coeff_fn(ms)
        if not c:
            continue
        prod = a.coeff(ms[0])
        for v in ms[1:]:
            prod = prod * a.coeff(v)
        weight = c * _orderings(ms)
        total = total + (weight if exact else float(weight)) * prod
    return total


def zeta_invariant(a: TrigSeries, k: int):
    """Z_k(a) for a finite series: an exact finite sum, no tail truncation.

    Returns a backend scalar (RationalComplex or complex); the value is real
    whenever a is conjugate-symmetric.
    """
    if k < 1:
        raise ValueError("order k must be >= 1")
    return _form_sum(a, 2 * k, z_coeff)


def z1_closed(a: TrigSeries):
    """First invariant in closed form: (1/3) sum_j |j^3 - j| a_j a_{-j}."""
    exact = a.backend == EXACT
    total = RC_ZERO if exact else 0j
    for j, v in a.items():
        if abs(j) < 2:
            continue
        w = a.coeff(-j)
        if not w:
            continue
        c = Fraction(abs(j**3 - j), 3)
        total = total + (c if exact else float(c)) * v * w
    return total


# closed form for quadruple coefficients -------------------------------------
#
# A zero-sum quadruple always has a permutation/sign image in one of two
# normal regions:
#   all-same-sign:  i >= 0, j >= 0, k >= 0           (0 counts as both signs)
#   mixed-sign:     i <= 0, j >= 0, k >= 0, i+j <= 0, i+k <= 0, i+j+k >= 0
# and on each region Z is an odd quintic, symmetrized over the indicated
# index sets (an average, so e.g. _p1(2,0,0) = 4/3).


def _q1(i: int, j: int, k: int) -> int:
    return (3 * i**5 + 15 * i**4 * j + 10 * i**3 * j**2 + 10 * i**3 * j * k
            - 5 * i**3 - 25 * i**2 * j - 10 * i * j * k + 2 * i)


def _p1(i: int, j: int, k: int) -> Fraction:
    total = sum(_q1(*p) for p in itertools.permutations((i, j, k)))
    return Fraction(total, 6 * 15)


def _q2(i: int, j: int, k: int) -> int:
    return (5 * i**5 + 25 * i**4 * j + 10 * i**3 * j**2 + 20 * i**3 * j * k
            - 10 * i**2 * j**3 - 15 * i * j**4 - 20 * i * j**3 * k
            - 4 * j**5 - 5 * j**4 * k + 10 * j**3 * k**2
            - 5 * i**3 - 15 * i**2 * j + 5 * i * j**2 - 5 * j**2 * k + 4 * j)


def _p2(i: int, j: int, k: int) -> Fraction:
    return Fraction(_q2(i, j, k) + _q2(i, k, j), 2 * 45)


def _in_case1(t: tuple) -> bool:
    return t[0] >= 0 and t[1] >= 0 and t[2] >= 0


def _in_case2(t: tuple) -> bool:
    i, j, k, _ = t
    return (i <= 0 and j >= 0 and k >= 0
            and i + j <= 0 and i + k <= 0 and i + j + k >= 0)


@lru_cache(maxsize=None)
def z2_coeff_closed(i: int, j: int, k: int, l: int) -> Fraction:
    """Quadruple coefficient Z_{ijkl} from the closed-form quintics.

    Zero off the zero-sum plane.  Otherwise the quadruple is canonicalized
    under the 48-element group (24 permutations, optional simultaneous sign
    flip): the lexicographically smallest image in the all-same-sign region
    wins, else the smallest image in the mixed-sign region.
    """
    q = (i, j, k, l)
    if sum(q) != 0:
        return Fraction(0)
    images = set()
    for sign in (1, -1):
        flipped = tuple(sign * x for x in q)
        for perm in itertools.permutations(flipped):
            images.add(perm)
    case1 = [t for t in images if _in_case1(t)]
    if case1:
        t = min(case1)
        return _p1(t[0], t[1], t[2])
    case2 = [t for t in images if _in_case2(t)]
    if case2:
        t = min(case2)
        return _p2(t[0], t[1], t[2])
    raise CanonicalizationFailure(f"no normal-form image for {q}")


def z2_closed(a: TrigSeries):
    """Second invariant via the closed-form quadruple coefficients."""
    return _form_sum(a, 4, lambda ms: z2_coeff_closed(*ms))


def coeff_bound_check(indices) -> bool:
    """Check 0 <= Z_{j_1...j_{2k}} <= 2 (2|j|)^{2k+1} exactly."""
    idx = _validate_index(indices)
    if sum(idx) != 0:
        raise NonZeroSum(f"indices must sum to zero, got {idx}")
    z = z_coeff(idx)
    span = sum(abs(j) for j in idx)
    bound = 2 * (2 * span) ** (len(idx) + 1)
    return 0 <= z <= bound
