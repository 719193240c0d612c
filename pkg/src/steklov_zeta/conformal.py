"""Action of disc automorphisms on weight functions, in Fourier space.

The translation family of the disc is Phi_rho(z) = (z - rho) / (1 - rho z)
for rho in (-1, 1).  Transporting a weight a along the boundary map
phi = Phi_rho|_{|z|=1} (with the derivative factor that keeps the Steklov
problem equivalent) is linear on Fourier coefficients:

    b_n = sum_k mu_{nk}(rho) a_k.

The matrix entries mu_{nk} have closed forms: a finite binomial sum for
n >= 2, k >= 2; explicit rows for n in {-1, 0, 1}; the reflection symmetry
mu_{nk} = mu_{-n,-k}; and exact zero regions (n >= 2 with k <= 1, and the
reflected one).  All entries are rational functions of rho, so the exact
backend evaluates them as Fractions.  The family satisfies the group law
M(rho) M(rho') = M(rho'') with rho'' = (rho + rho')/(1 + rho rho'), and is
the exponential of a constant tridiagonal generator:

    M(rho) = exp(t D),  tanh t = rho,
    d_{nk} = (n - 2) delta_{n-1,k} - (n + 2) delta_{n+1,k}.

Truncation note: entries decay super-exponentially away from the band
|n/k| in [(1-|rho|)/(1+|rho|), (1+|rho|)/(1-|rho|)], but *inside and near*
that band they are O(1).  Identities among truncated matrices therefore
hold on a central block only when the truncation width comfortably exceeds
the band spread of the block; see group_law_check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import BackendMismatch
from .fourier import (CircleGrid, EXACT, FLOAT, TrigSeries, evaluate,
                      from_samples, grid_angles)

# The row formulas were derived by substituting the inverse boundary map,
# which leaves a genuine sign ambiguity between the matrix parameter and the
# Phi_rho parameter.  Validation (apply_moebius vs pullback_direct on random
# series) fixes the pairing: they agree with the SAME parameter, so the
# orientation factor is +1.
MU_PULLBACK_ORIENTATION = 1


@dataclass(frozen=True)
class MoebiusParam:
    """Translation parameter rho in (-1, 1), exact (Fraction) or float."""

    rho: Fraction | float

    def __post_init__(self):
        if not -1 < float(self.rho) < 1:
            raise ValueError(f"rho must lie in (-1, 1), got {self.rho}")

    @property
    def exact(self) -> bool:
        return isinstance(self.rho, (int, Fraction))

    @property
    def t(self) -> float:
        """Hyperbolic translation length, tanh(t) = rho."""
        return math.atanh(float(self.rho))

    @classmethod
    def parse(cls, text: str) -> "MoebiusParam":
        """Parse "p/q" as an exact rational, a decimal as a float."""
        text = text.strip()
        if "/" in text:
            return cls(Fraction(text))
        if "." in text or "e" in text.lower():
            return cls(float(text))
        return cls(Fraction(int(text)))


def _rho_value(rho):
    if isinstance(rho, MoebiusParam):
        return rho.rho
    if isinstance(rho, (int,)):
        return Fraction(rho)
    if isinstance(rho, (Fraction, float)):
        return rho
    raise TypeError(f"cannot interpret {rho!r} as a translation parameter")


def binom(r: int, s: int) -> int:
    """Binomial coefficient, zero whenever r < 0, s < 0, or s > r."""
    if r < 0 or s < 0 or s > r:
        return 0
    return math.comb(r, s)


@lru_cache(maxsize=None)
def _pow(base, exponent: int):
    return base ** exponent


def _mu_main(n: int, k: int, rho):
    # n >= 2, k >= 2; powers folded so every exponent is non-negative
    hi = min(n + 1, k + 1)
    if hi < 3:
        return rho * 0
    omr2 = 1 - rho * rho
    total = rho * 0
    for l in range(3, hi + 1):
        term = (binom(n - 2, l - 3) * binom(k + 1, l)
                * _pow(rho, n + k + 2 - 2 * l) * _pow(omr2, l - 1))
        total += -term if l % 2 else term
    # global factor (-1)^{k+1}
    return total if k % 2 else -total


def mu(n: int, k: int, rho):
    """Matrix entry mu_{nk}(rho); exact Fraction when rho is rational.

    Covers all integer (n, k) through the zero regions, the reflection
    symmetry, and the explicit low rows.
    """
    r = _rho_value(rho)
    if r == 0:
        one, zero = r + 1, r * 0
        return one if n == k else zero
    if n >= 2:
        return r * 0 if k <= 1 else _mu_main(n, k, r)
    if n <= -2:
        return r * 0 if k >= -1 else _mu_main(-n, -k, r)
    omr2 = 1 - r * r
    if n == 0:
        kk = abs(k)
        return _pow(-r, kk) * ((kk + 1) - (kk - 1) * r * r) / omr2
    if n == -1:
        if k >= -1:
            return _pow(-r, k + 1) / omr2
        return mu(1, -k, r)
    # n == 1
    if k >= -1:
        poly = ((k * (k + 1)) // 2 - (k * k - 1) * r * r
                + ((k * (k - 1)) // 2) * _pow(r, 4))
        return _pow(-r, k - 1) * poly / omr2 if k >= 1 else \
            poly / (_pow(-r, 1 - k) * omr2)
    return mu(-1, -k, r)


@dataclass(frozen=True, eq=False)
class TruncatedMatrix:
    """Dense truncation of an operator on frequencies n in [-N, N]."""

    half_width: int
    entries: tuple | np.ndarray
    exact: bool

    def at(self, n: int, k: int):
        return self.entries[n + self.half_width][k + self.half_width]

    def to_array(self) -> np.ndarray:
        if isinstance(self.entries, np.ndarray):
            return self.entries
        return np.array([[float(v) for v in row] for row in self.entries])

    def iter_entries(self):
        N = self.half_width
        for n in range(-N, N + 1):
            for k in range(-N, N + 1):
                yield n, k, self.entries[n + N][k + N]


def mu_matrix(rho, N: int) -> TruncatedMatrix:
    """Truncated matrix (mu_{nk}) for |n|, |k| <= N."""
    if N < 1:
        raise ValueError("half-width must be >= 1")
    r = _rho_value(rho)
    idx = range(-N, N + 1)
    if isinstance(r, float):
        ent = np.array([[mu(n, k, r) for k in idx] for n in idx])
        return TruncatedMatrix(N, ent, exact=False)
    ent = tuple(tuple(mu(n, k, r) for k in idx) for n in idx)
    return TruncatedMatrix(N, ent, exact=True)


def d_matrix(N: int) -> TruncatedMatrix:
    """Generator of the translation family: two shifted diagonals."""
    if N < 1:
        raise ValueError("half-width must be >= 1")
    idx = range(-N, N + 1)
    ent = tuple(
        tuple((n - 2) if k == n - 1 else -(n + 2) if k == n + 1 else 0
              for k in idx)
        for n in idx)
    return TruncatedMatrix(N, ent, exact=True)


def apply_moebius(a: TrigSeries, rho, out_degree: int) -> TrigSeries:
    """Transport a through the boundary map, row by row in Fourier space.

    Each output coefficient is the finite exact sum over the input support;
    out_degree is the caller's truncation of the (infinite) output, best
    chosen with suggest_out_degree.
    """
    r = _rho_value(rho)
    if a.backend == EXACT and isinstance(r, float):
        raise BackendMismatch("exact series with float rho; pass a Fraction")
    if a.backend == FLOAT:
        r = float(r)
    r = r * MU_PULLBACK_ORIENTATION
    coeffs = {}
    for n in range(-out_degree, out_degree + 1):
        total = None
        for k, v in a.items():
            term = mu(n, k, r) * v
            total = term if total is None else total + term
        if total is not None:
            coeffs[n] = total
    return TrigSeries(coeffs, a.backend)


def pullback_direct(a: TrigSeries, rho, grid_size: int,
                    out_degree: int) -> TrigSeries:
    """Sampling route for the same transport: b = (a o phi) / (dphi/dtheta).

    phi(theta) = arg Phi_rho(e^{i theta}) and
    dphi/dtheta = (1 - rho^2) / |1 - rho e^{i theta}|^2.  Float backend only;
    the result is the degree-out_degree interpolant from grid_size samples.
    """
    r = float(_rho_value(rho))
    theta = grid_angles(grid_size)
    z = np.exp(1j * theta)
    w = (z - r) / (1.0 - r * z)
    phi = np.angle(w)
    dphi = (1.0 - r * r) / np.abs(1.0 - r * z) ** 2
    samples = evaluate(a.to_float(), phi) / dphi
    return from_samples(CircleGrid(grid_size, samples), out_degree)


def rotate(a: TrigSeries, alpha: float) -> TrigSeries:
    """Rotation pullback: coefficient n picks up the phase e^{i alpha n}.

    Float backend only (the phases are transcendental).
    """
    if a.backend == EXACT:
        raise BackendMismatch("rotate supports the float backend only")
    return TrigSeries.from_complex(
        {n: v * complex(math.cos(alpha * n), math.sin(alpha * n))
         for n, v in a.items()})


def conjugate(a: TrigSeries) -> TrigSeries:
    """Reflection pullback theta -> -theta: coefficient table index-flips."""
    return TrigSeries({-n: v for n, v in a.items()}, a.backend)


def group_law_check(rho, rho2, N: int, exact: bool = False) -> float:
    """Max deviation of M_N(rho) M_N(rho') - M_N(rho'') on the block |n|,|k| <= N//2.

    rho'' = (rho + rho')/(1 + rho rho').  The deviation is pure truncation
    error and shrinks super-exponentially as N grows past the band spread of
    the central block; it is NOT small whenever N//2 is close to the band
    edge (see module docstring).  With exact=True (rational parameters only)
    the product is carried out in Fractions.
    """
    r1, r2 = _rho_value(rho), _rho_value(rho2)
    both_exact = not (isinstance(r1, float) or isinstance(r2, float))
    r3 = (r1 + r2) / (1 + r1 * r2)
    half = N // 2
    if exact:
        if not both_exact:
            raise BackendMismatch("exact group-law check needs rational rho")
        A = mu_matrix(r1, N)
        B = mu_matrix(r2, N)
        C = mu_matrix(r3, N)
        worst = Fraction(0)
        rng = range(-half, half + 1)
        for n in rng:
            for k in rng:
                s = sum(A.at(n, p) * B.at(p, k) for p in range(-N, N + 1))
                worst = max(worst, abs(s - C.at(n, k)))
        return float(worst)
    A = mu_matrix(r1, N).to_array()
    B = mu_matrix(r2, N).to_array()
    C = mu_matrix(r3, N).to_array()
    P = A @ B
    sl = slice(N - half, N + half + 1)
    return float(np.max(np.abs(P[sl, sl] - C[sl, sl])))


def rk4_exponential(D: np.ndarray, t: float, steps: int) -> np.ndarray:
    """Integrate M' = D M from the identity over [0, t], classical RK4."""
    if steps < 1:
        raise ValueError("need at least one step")
    h = t / steps
    M = np.eye(D.shape[0])
    for _ in range(steps):
        k1 = D @ M
        k2 = D @ (M + 0.5 * h * k1)
        k3 = D @ (M + 0.5 * h * k2)
        k4 = D @ (M + h * k3)
        M = M + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return M


def exp_relation_check(rho, N: int, steps: int) -> float:
    """Max deviation of exp(t D_N) from M_N(rho) on the central block.

    Integrates the generator flow with a fixed-step 4th-order scheme over
    t = artanh(rho) and compares against the closed-form entries on
    |n|, |k| <= N//2.
    """
    r = _rho_value(rho)
    t = math.atanh(float(r))
    D = d_matrix(N).to_array()
    M = rk4_exponential(D, t, steps)
    ref = mu_matrix(r, N).to_array()
    half = N // 2
    sl = slice(N - half, N + half + 1)
    return float(np.max(np.abs(M[sl, sl] - ref[sl, sl])))


def decay_constant(k: int) -> float:
    """Constant C_k in the tail bound |mu_{nk}| <= C_k n^{|k|} |rho|^{n/2}."""
    kk = abs(k)
    return float(sum(Fraction(binom(kk + 1, l), math.factorial(l - 3))
                     for l in range(3, kk + 2))) or 1.0


def suggest_out_degree(max_input_freq: int, rho, tol: float) -> int:
    """Smallest output degree whose dropped-tail bound is below tol.

    Uses the decay bound |mu_{nk}| <= C_k n^{|k|} |rho|^{n/2} (valid for
    |n| >= 2|k|), summed over both signs of n past the cut.
    """
    r = abs(float(_rho_value(rho)))
    if r == 0.0:
        return max_input_freq
    k = max(1, abs(max_input_freq))
    log_ck = math.log(decay_constant(k))
    log_r = math.log(r)

    def tail_bound(cut: int) -> float:
        total = 0.0
        for n in range(cut + 1, cut + 10001):
            lt = math.log(2.0) + log_ck + k * math.log(n) + 0.5 * n * log_r
            if lt > 700.0:
                return math.inf
            t = math.exp(lt)
            total += t
            if t < tol * 1e-6:
                break
        return total

    lo = max(2 * k, max_input_freq)
    hi = lo
    while tail_bound(hi) >= tol:
        hi = 2 * hi + 8
        if hi > 10**6:
            raise ValueError("no feasible truncation below 10^6 frequencies")
    while lo < hi:
        mid = (lo + hi) // 2
        if tail_bound(mid) < tol:
            hi = mid
        else:
            lo = mid + 1
    return lo
