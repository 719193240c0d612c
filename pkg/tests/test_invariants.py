import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steklov_zeta import (NonZeroSum, RationalComplex, TrigSeries, brute_n,
                          coeff_bound_check, symmetrize_z, symmetrize_z_full,
                          z1_closed, z2_closed, z2_coeff_closed, z_coeff,
                          zeta_invariant)
from steklov_zeta.invariants import _p1, _p2, zero_sum_multisets

from util import random_exact_series, random_zero_sum_tuple


def oracle_n(indices):
    """Independent re-implementation: literal sum of |f(n)| - f(n) over a
    range twice the root bound, with f built afresh per n."""
    span = sum(abs(j) for j in indices)
    total = 0
    for n in range(-2 * span - 1, 2 * span + 2):
        f = math.prod(n + sum(indices[:i]) for i in range(len(indices)))
        total += abs(f) - f
    return total


zero_sum_pairs = st.integers(-12, 12).map(lambda j: (j, -j))


@st.composite
def zero_sum_indices(draw, k_max=3, bound=4):
    k = draw(st.integers(1, k_max))
    head = draw(st.lists(st.integers(-bound, bound), min_size=2 * k - 1,
                         max_size=2 * k - 1))
    total = sum(head)
    if abs(total) > bound:
        head[0] -= total
        total = sum(head)
    return tuple(head) + (-total,)


# brute N ---------------------------------------------------------------


def test_brute_n_examples():
    assert brute_n((1, -1)) == 0
    assert brute_n((2, -2)) == 2
    assert brute_n((0, 0, 0, 0)) == 0
    assert brute_n((2, 2, -1, -3)) == oracle_n((2, 2, -1, -3)) == 12


def test_brute_n_matches_oracle_on_random_tuples():
    rng = random.Random(20240809)
    for _ in range(150):
        k = rng.randint(1, 3)
        idx = random_zero_sum_tuple(rng, k, 4)
        assert brute_n(idx) == oracle_n(idx)


def test_brute_n_rejects_nonzero_sum():
    with pytest.raises(NonZeroSum):
        brute_n((1, 2))
    with pytest.raises(ValueError):
        brute_n((1, -1, 0))  # odd length


@settings(max_examples=150, deadline=None)
@given(zero_sum_indices())
def test_brute_n_even_nonnegative_integer(idx):
    v = brute_n(idx)
    assert v >= 0 and v % 2 == 0


@settings(max_examples=120, deadline=None)
@given(zero_sum_indices())
def test_brute_n_sign_flip_invariance(idx):
    assert brute_n(tuple(-j for j in idx)) == brute_n(idx)


@settings(max_examples=120, deadline=None)
@given(zero_sum_indices())
def test_brute_n_cyclic_invariance(idx):
    assert brute_n(idx[1:] + idx[:1]) == brute_n(idx)


def test_brute_n_not_fully_symmetric_in_general():
    # (2,2,-1,-3) = 12 but a transposition changes the value
    assert brute_n((2, 2, -1, -3)) != brute_n((2, -1, 2, -3))


# symmetrized Z ---------------------------------------------------------


def test_symmetrize_examples():
    assert symmetrize_z((3, -3)) == 8
    for j in range(-6, 7):
        assert symmetrize_z((j, -j)) == brute_n((j, -j))
    assert symmetrize_z((1, 1, -1, -1)) == symmetrize_z_full((1, 1, -1, -1)) == 0


def test_reduced_equals_full_symmetrization():
    rng = random.Random(7)
    for _ in range(25):
        idx = random_zero_sum_tuple(rng, 2, 4)
        assert symmetrize_z(idx) == symmetrize_z_full(idx)
    for _ in range(4):
        idx = random_zero_sum_tuple(rng, 3, 2)
        assert symmetrize_z(idx) == symmetrize_z_full(idx)


def test_z_coeff_full_symmetry_and_evenness():
    rng = random.Random(11)
    for _ in range(30):
        idx = random_zero_sum_tuple(rng, 2, 5)
        perm = tuple(rng.sample(idx, len(idx)))
        assert symmetrize_z(idx) == symmetrize_z(perm)
        assert symmetrize_z(idx) == symmetrize_z(tuple(-j for j in idx))


def test_pair_closed_form_small_range():
    for j in range(-20, 21):
        assert symmetrize_z((j, -j)) == Fraction(abs(j**3 - j), 3)


def test_z_coeff_off_plane_is_zero():
    assert z_coeff((1, 2, 3, -4)) == 0


# the invariants themselves ----------------------------------------------


def test_vanishing_on_low_frequency_subspace():
    a = TrigSeries.exact({0: 5, 1: (1, 2), -1: 7})
    for k in (1, 2, 3):
        assert zeta_invariant(a, k) == 0


def test_zeta_invariant_single_pair_k1():
    a = TrigSeries.exact({2: 1, -2: 1})
    assert zeta_invariant(a, 1) == 4


def test_zeta_invariant_single_pair_k2_against_direct_sum():
    a = TrigSeries.exact({2: 1, -2: 1})
    # independent route: raw sum over ordered quadruples from the support
    total = Fraction(0)
    for q in itertools.product((2, -2), repeat=4):
        if sum(q) == 0:
            total += symmetrize_z(q)
    val = zeta_invariant(a, 2)
    assert val == RationalComplex(total, 0)
    assert val == 48


def test_zeta_invariant_full_enumeration_cross_check():
    rng = random.Random(3)
    a = random_exact_series(rng, 3)
    direct = RationalComplex(0, 0)
    for q in itertools.product(range(-3, 4), repeat=4):
        if sum(q) != 0:
            continue
        c = symmetrize_z(q)
        if c:
            prod = a.coeff(q[0]) * a.coeff(q[1]) * a.coeff(q[2]) * a.coeff(q[3])
            direct = direct + c * prod
    assert zeta_invariant(a, 2) == direct


def test_z1_closed_examples():
    assert z1_closed(TrigSeries.exact({2: 1, -2: 1})) == 4
    assert z1_closed(TrigSeries.exact({0: 3, 1: (1, 1), -1: (2, 0)})) == 0
    a = TrigSeries.exact({3: (0, 1), -3: (0, -1)})
    assert z1_closed(a) == 16


def test_z1_closed_equals_invariant():
    rng = random.Random(5)
    for _ in range(10):
        a = random_exact_series(rng, rng.randint(1, 6))
        assert z1_closed(a) == zeta_invariant(a, 1)


def test_z2_closed_equals_invariant():
    rng = random.Random(6)
    for deg in (2, 3, 4, 5, 6):
        a = random_exact_series(rng, deg)
        assert z2_closed(a) == zeta_invariant(a, 2)


def test_z2_closed_with_zero_mode():
    a = TrigSeries.exact({0: 1, 2: Fraction(1, 2), -2: Fraction(1, 2)})
    assert z2_closed(a) == zeta_invariant(a, 2)


def test_reality_of_invariants():
    rng = random.Random(9)
    for _ in range(5):
        a = random_exact_series(rng, 4, real=True)
        for k in (1, 2):
            v = zeta_invariant(a, k)
            assert v.im == 0


# quadruple closed form ---------------------------------------------------


def test_z2_coeff_nonzero_sum_is_zero():
    assert z2_coeff_closed(1, 2, 3, -4) == 0


def test_z2_coeff_trivial_zeroes():
    assert z2_coeff_closed(0, 0, 0, 0) == 0
    assert z2_coeff_closed(1, 0, 0, -1) == 0


def test_z2_coeff_matches_brute_spot_values():
    v = z2_coeff_closed(2, -2, 0, 0)
    assert v == z_coeff((2, -2, 0, 0)) == Fraction(4, 3)
    assert (3 * v).denominator == 1 and (3 * v).numerator % 2 == 0
    assert z2_coeff_closed(-3, 2, 2, -1) == z_coeff((-3, 2, 2, -1)) == 8


def test_z2_coeff_matches_brute_ball_radius_5():
    for i in range(-5, 6):
        for j in range(-5, 6):
            for k in range(-5, 6):
                l = -(i + j + k)
                if abs(l) <= 5:
                    assert z2_coeff_closed(i, j, k, l) == z_coeff((i, j, k, l))


def test_closed_polynomials_are_odd():
    pts = range(-3, 4)
    for i in pts:
        for j in pts:
            for k in pts:
                assert _p1(-i, -j, -k) == -_p1(i, j, k)
                assert _p2(-i, -j, -k) == -_p2(i, j, k)


def test_coeff_bound_examples():
    assert coeff_bound_check((2, -2))
    assert coeff_bound_check((0, 0))
    assert coeff_bound_check((5, -1, -1, -3))


def test_homogeneity_of_forms():
    rng = random.Random(13)
    a = random_exact_series(rng, 3)
    c = Fraction(3, 2)
    for k in (1, 2):
        assert zeta_invariant(c * a, k) == c ** (2 * k) * zeta_invariant(a, k)


def test_zero_sum_multisets_enumeration():
    got = set(zero_sum_multisets((-2, -1, 0, 1, 2), 2))
    assert got == {(-2, 2), (-1, 1), (0, 0)}
    quad = list(zero_sum_multisets((-2, 2), 4))
    assert quad == [(-2, -2, 2, 2)]


def test_float_backend_matches_exact():
    rng = random.Random(17)
    a = random_exact_series(rng, 4)
    f = a.to_float()
    for k in (1, 2):
        exact = complex(zeta_invariant(a, k))
        approx = zeta_invariant(f, k)
        assert approx == pytest.approx(exact, rel=1e-10, abs=1e-9)
    assert complex(z2_closed(a)) == pytest.approx(z2_closed(f), rel=1e-10,
                                                  abs=1e-9)
