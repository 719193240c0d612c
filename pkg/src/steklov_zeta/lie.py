"""Generators of the conformal algebra on Fourier coefficients.

The three-dimensional algebra of boundary vector fields acts on weight
functions; on coefficient tables the basis operators are

    (C a)_n  = i n a_n                       (rotations)
    (D a)_n  = (n-2) a_{n-1} - (n+2) a_{n+1} (translations)
    (E a)_n  = -i [ (n-2) a_{n-1} + (n+2) a_{n+1} ]

with complexified basis D0 = -iC, D- = (D + iE)/2, D+ = (-D + iE)/2:

    (D0 a)_n = n a_n,   (D- a)_n = (n-2) a_{n-1},   (D+ a)_n = (n+2) a_{n+1}.

Because the group acts on functions from the right, the operator bracket
matching the algebra tables is the reversed commutator
[g, h] a = h(g(a)) - g(h(a)); with that convention

    [C, D] = E,   [C, E] = -D,   [D, E] = -4 C,
    [D0, D-] = -D-,   [D0, D+] = D+,   [D-, D+] = 2 D0,

all exact on the rational backend.

Invariance of every Z_k under the group is equivalent to linear relations
among the symmetric coefficients.  The reduced one (from D+) reads

    sum_alpha (j_alpha - 1) Z_{j_1 .. j_alpha + 1 .. j_{2k}} = 0
                     whenever j_1 + ... + j_{2k} = -1,

and is checked here as an exact rational identity, never in floats.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import UnknownBracket, WrongSum
from .fourier import EXACT, TrigSeries
from .invariants import z2_coeff_closed, z_coeff
from .scalars import RationalComplex

GENERATORS = ("C", "D", "E", "D0", "Dminus", "Dplus")

# each rule: list of (index shift, weight as rational+imaginary pair of m)
_RULES = {
    "C": ((0, lambda m: (0, m)),),
    "D0": ((0, lambda m: (m, 0)),),
    "Dminus": ((1, lambda m: (m - 1, 0)),),
    "Dplus": ((-1, lambda m: (m + 1, 0)),),
    "D": ((1, lambda m: (m - 1, 0)), (-1, lambda m: (-(m + 1), 0))),
    "E": ((1, lambda m: (0, -(m - 1))), (-1, lambda m: (0, -(m + 1)))),
}


def apply_generator(name: str, a: TrigSeries) -> TrigSeries:
    """Apply one generator coefficientwise; degree grows by at most 1."""
    if name not in _RULES:
        raise ValueError(f"unknown generator {name!r}; choose from {GENERATORS}")
    exact = a.backend == EXACT
    out: dict = {}
    for shift, weight in _RULES[name]:
        for m, v in a.items():
            re, im = weight(m)
            w = RationalComplex(re, im) if exact else complex(re, im)
            n = m + shift
            term = w * v
            out[n] = out[n] + term if n in out else term
    return TrigSeries(out, a.backend)


_BRACKETS = {
    ("C", "D"): (1, "E"),
    ("C", "E"): (-1, "D"),
    ("D", "E"): (-4, "C"),
    ("D0", "Dminus"): (-1, "Dminus"),
    ("D0", "Dplus"): (1, "Dplus"),
    ("Dminus", "Dplus"): (2, "D0"),
}


def bracket_check(g: str, h: str, a: TrigSeries):
    """Deviation of [g, h] a from the bracket-table value on a.

    The bracket is the right-action commutator h(g(a)) - g(h(a)) (see module
    docstring).  Returns an exact Fraction on the rational backend (zero iff
    the identity holds exactly) and a float on the float backend.
    """
    if (g, h) in _BRACKETS:
        factor, target = _BRACKETS[(g, h)]
    elif (h, g) in _BRACKETS:
        factor, target = _BRACKETS[(h, g)]
        factor = -factor
    else:
        raise UnknownBracket(f"no table entry for [{g}, {h}]")
    lhs = apply_generator(h, apply_generator(g, a)) \
        - apply_generator(g, apply_generator(h, a))
    diff = lhs - factor * apply_generator(target, a)
    if a.backend == EXACT:
        worst = Fraction(0)
        for _, v in diff.items():
            worst = max(worst, v.sup_abs())
        return worst
    return max((abs(v) for _, v in diff.items()), default=0.0)


# linear relations among the symmetric coefficients -------------------------


def _closed_coeff(idx: tuple) -> Fraction:
    k = len(idx) // 2
    if k == 1:
        if idx[0] + idx[1] != 0:
            return Fraction(0)
        j = idx[0]
        return Fraction(abs(j**3 - j), 3)
    if k == 2:
        return z2_coeff_closed(*idx)
    raise ValueError("closed coefficients are available for k in {1, 2} only")


def _coeff_source(source: str):
    if source == "brute":
        return z_coeff
    if source == "closed":
        return _closed_coeff
    raise ValueError(f"unknown coefficient source {source!r}")


def raising_relation_check(indices, source: str = "brute") -> Fraction:
    """Exact value of sum_alpha (j_alpha - 1) Z_{..., j_alpha + 1, ...}.

    Requires sum(indices) = -1 (the relation is vacuous elsewhere); the
    conformal invariance of Z_k makes the value exactly zero.
    """
    idx = tuple(int(j) for j in indices)
    if len(idx) < 2 or len(idx) % 2:
        raise ValueError("need a multi-index of even length >= 2")
    if sum(idx) != -1:
        raise WrongSum(f"indices must sum to -1, got {idx} (sum {sum(idx)})")
    coeff = _coeff_source(source)
    total = Fraction(0)
    for alpha, j in enumerate(idx):
        bumped = idx[:alpha] + (j + 1,) + idx[alpha + 1:]
        total += (j - 1) * coeff(bumped)
    return total


_VARIANTS = ("D", "E", "Dplus", "Dminus")


def generator_relation_check(indices, variant: str) -> Fraction:
    """The invariance relation induced by one generator, brute coefficients.

    Dplus: sum (j_alpha - 1) Z at the +1 bump;
    Dminus: sum (j_alpha + 1) Z at the -1 bump;
    D / E: difference / sum of those two.  Each variant vanishes identically;
    off its nontrivial planes every term is already zero.
    """
    if variant not in _VARIANTS:
        raise ValueError(f"variant must be one of {_VARIANTS}")
    idx = tuple(int(j) for j in indices)
    up = Fraction(0)
    down = Fraction(0)
    for alpha, j in enumerate(idx):
        if variant in ("Dplus", "D", "E"):
            up += (j - 1) * z_coeff(idx[:alpha] + (j + 1,) + idx[alpha + 1:])
        if variant in ("Dminus", "D", "E"):
            down += (j + 1) * z_coeff(idx[:alpha] + (j - 1,) + idx[alpha + 1:])
    if variant == "Dplus":
        return up
    if variant == "Dminus":
        return down
    if variant == "D":
        return up - down
    return up + down


def raising_relation_sweep(k: int, radius: int, stride: int = 1,
                           source: str = "brute"):
    """All (or every stride-th) index tuple on the sum = -1 plane.

    Tuples run in lexicographic order over the box [-radius, radius]^{2k};
    yields (indices, exact value).  stride > 1 takes a deterministic,
    evenly spaced sample of the enumeration.
    """
    if k < 1 or radius < 1 or stride < 1:
        raise ValueError("need k >= 1, radius >= 1, stride >= 1")
    hits = 0
    for idx in itertools.product(range(-radius, radius + 1), repeat=2 * k):
        if sum(idx) != -1:
            continue
        if hits % stride == 0:
            yield idx, raising_relation_check(idx, source)
        hits += 1
