import random
from fractions import Fraction

import pytest

from steklov_zeta import (KIND_DN, KIND_DTHETA, TrigSeries,
                          TruncationTooSmall, operator_matrix,
                          stabilization_check, stabilization_sweep,
                          trace_difference, zeta_invariant)

from util import random_exact_series


def test_constant_weight_gives_diagonal_dn():
    A = operator_matrix(TrigSeries.exact({0: 1}), KIND_DN, 4)
    for m in range(-4, 5):
        for n in range(-4, 5):
            expected = abs(n) if m == n else 0
            assert A.entry(m, n) == expected


def test_single_mode_weight_shifts():
    B = operator_matrix(TrigSeries.exact({1: 1}), KIND_DTHETA, 2)
    for m in range(-2, 3):
        for n in range(-2, 3):
            expected = n if m == n + 1 else 0
            assert B.entry(m, n) == expected


def test_real_weight_matrix_symmetry():
    a = TrigSeries.exact({0: 2, 1: (1, 1), -1: (1, -1)})
    A = operator_matrix(a, KIND_DN, 5)
    for m in range(-5, 6):
        for n in range(-5, 6):
            assert A.entry(m, n).conjugate() == A.entry(-m, -n)


def test_operator_matrix_kind_validation():
    with pytest.raises(ValueError):
        operator_matrix(TrigSeries.exact({0: 1}), "nope", 3)
    with pytest.raises(ValueError):
        operator_matrix(TrigSeries.exact({3: 1, -3: 1}), KIND_DN, 2)


def test_constant_weight_trace_difference_vanishes():
    a = TrigSeries.exact({0: Fraction(5, 7)})
    for k in (1, 2, 3):
        assert trace_difference(a, k, 8) == 0


def test_truncation_guard():
    a = TrigSeries.exact({2: 1, -2: 1})
    with pytest.raises(TruncationTooSmall):
        trace_difference(a, 1, 7)


def test_trace_equals_invariant_single_pair():
    a = TrigSeries.exact({2: 1, -2: 1})
    assert trace_difference(a, 1, 16) == zeta_invariant(a, 1) == 4


def test_trace_equals_invariant_degree_three():
    a = TrigSeries.exact({1: Fraction(1, 2), -1: Fraction(1, 2),
                          3: Fraction(1, 3), -3: Fraction(1, 3), 0: 2})
    assert trace_difference(a, 2, 40) == zeta_invariant(a, 2)


def test_trace_equals_invariant_random():
    rng = random.Random(61)
    for _ in range(6):
        deg = rng.randint(1, 3)
        a = random_exact_series(rng, deg)
        for k in (1, 2):
            assert trace_difference(a, k, 4 * k * deg) == zeta_invariant(a, k)


def test_trace_value_stable_beyond_threshold():
    rng = random.Random(67)
    a = random_exact_series(rng, 2)
    k = 2
    base = trace_difference(a, k, 4 * k * 2)
    for extra in (1, 5, 16):
        assert trace_difference(a, k, 4 * k * 2 + extra) == base


def test_homogeneity():
    rng = random.Random(71)
    a = random_exact_series(rng, 2)
    c = Fraction(-3, 2)
    for k in (1, 2):
        scaled = trace_difference(c * a, k, 8 * k)
        assert scaled == c ** (2 * k) * trace_difference(a, k, 8 * k)


def test_stabilization_low_frequency_series():
    a = TrigSeries.exact({0: 3, 1: (1, 1), -1: (1, -1)})
    assert stabilization_check(a, 2) == 1  # zero at every width


def test_stabilization_single_pair():
    a = TrigSeries.exact({2: 1, -2: 1})
    assert stabilization_check(a, 1) <= 8


def test_stabilization_degree_three():
    a = TrigSeries.exact({3: 1, -3: 1, 1: (0, 1), -1: (0, -1)})
    assert stabilization_check(a, 2) <= 24


def test_stabilization_sweep_evidence():
    a = TrigSeries.exact({2: 1, -2: 1})
    sweep = stabilization_sweep(a, 1)
    widths = [n for n, _ in sweep]
    assert widths == sorted(widths)
    assert sweep[-1][1] == sweep[-2][1] == sweep[-3][1]
    assert sweep[-1][1] == zeta_invariant(a, 1)
    assert stabilization_check(a, 1) == sweep[-3][0]


def test_float_backend_trace_close_to_exact():
    rng = random.Random(73)
    a = random_exact_series(rng, 2)
    exact = complex(trace_difference(a, 2, 16))
    approx = trace_difference(a.to_float(), 2, 16)
    assert approx == pytest.approx(exact, rel=1e-9, abs=1e-9)
