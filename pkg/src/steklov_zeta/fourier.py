"""Trigonometric polynomials on the unit circle.

A function a(theta) = sum_n a_n e^{i n theta} with finitely many nonzero
Fourier coefficients is stored as the sparse table {n: a_n}.  Two scalar
backends exist behind the same interface:

* ``exact``  -- coefficients are :class:`~steklov_zeta.scalars.RationalComplex`
  values; used for everything that is an exact integer/rational identity.
* ``float``  -- coefficients are Python ``complex``; used for sampling,
  pullback, and quadrature experiments.

Mixing backends inside one operation raises
:class:`~steklov_zeta.errors.BackendMismatch`.

Circle integrals use the trapezoid rule on equispaced grids, which is
spectrally accurate for smooth periodic integrands; grid sizes are caller
arguments with a default of 4096.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BackendMismatch, GridTooSmall, NotPositive, NotReal
from .scalars import RC_ZERO, RationalComplex, format_scalar, parse_scalar

DEFAULT_GRID = 4096

EXACT = "exact"
FLOAT = "float"


def _coerce_exact(value) -> RationalComplex:
    if isinstance(value, RationalComplex):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalComplex(value, 0)
    if isinstance(value, tuple) and len(value) == 2:
        return RationalComplex(value[0], value[1])
    raise TypeError(f"not an exact scalar: {value!r}")


class TrigSeries:
    """Finitely supported Fourier coefficient table.

    Invariants: no explicitly stored zero entries; ``degree`` is the largest
    |n| with a stored coefficient (0 for the zero series).
    """

    __slots__ = ("_coeffs", "backend")

    def __init__(self, coeffs: dict, backend: str):
        if backend not in (EXACT, FLOAT):
            raise ValueError(f"unknown backend {backend!r}")
        clean = {}
        for n, v in coeffs.items():
            n = int(n)
            v = _coerce_exact(v) if backend == EXACT else complex(v)
            if v:
                clean[n] = v
        object.__setattr__(self, "_coeffs", clean)
        object.__setattr__(self, "backend", backend)

    def __setattr__(self, name, value):
        raise AttributeError("TrigSeries is immutable")

    # construction ---------------------------------------------------------

    @classmethod
    def exact(cls, coeffs: dict) -> "TrigSeries":
        """Exact-backend series; values may be int, Fraction, (re, im), or
        RationalComplex."""
        return cls(coeffs, EXACT)

    @classmethod
    def from_complex(cls, coeffs: dict) -> "TrigSeries":
        """Float-backend series from any complex-convertible values."""
        return cls(coeffs, FLOAT)

    @classmethod
    def zero(cls, backend: str = EXACT) -> "TrigSeries":
        return cls({}, backend)

    # accessors ------------------------------------------------------------

    @property
    def degree(self) -> int:
        return max((abs(n) for n in self._coeffs), default=0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def coeff(self, n: int):
        zero = RC_ZERO if self.backend == EXACT else 0j
        return self._coeffs.get(n, zero)

    def items(self):
        return sorted(self._coeffs.items())

    def __bool__(self):
        return bool(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TrigSeries):
            return NotImplemented
        return self.backend == other.backend and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.backend, tuple(self.items())))

    def __repr__(self):
        entries = ", ".join(f"{n}: {v}" for n, v in self.items())
        return f"TrigSeries[{self.backend}]({{{entries}}})"

    # linear structure -----------------------------------------------------

    def __add__(self, other: "TrigSeries") -> "TrigSeries":
        if not isinstance(other, TrigSeries):
            return NotImplemented
        if self.backend != other.backend:
            raise BackendMismatch("cannot add exact and float series")
        out = dict(self._coeffs)
        for n, v in other._coeffs.items():
            out[n] = out.get(n, RC_ZERO if self.backend == EXACT else 0j) + v
        return TrigSeries(out, self.backend)

    def __sub__(self, other: "TrigSeries") -> "TrigSeries":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "TrigSeries":
        return TrigSeries({n: scalar * v for n, v in self._coeffs.items()},
                          self.backend)

    def scaled(self, scalar) -> "TrigSeries":
        return scalar * self

    # conversions ----------------------------------------------------------

    def to_float(self) -> "TrigSeries":
        if self.backend == FLOAT:
            return self
        return TrigSeries({n: complex(v) for n, v in self._coeffs.items()}, FLOAT)

    def sum_abs(self) -> float:
        """Float value of sum_n |a_n|, the natural scale of the series."""
        return float(sum(abs(complex(v)) for v in self._coeffs.values()))


@dataclass(frozen=True)
class CircleGrid:
    """Equispaced samples f(theta_m), theta_m = 2 pi m / size."""

    size: int
    samples: np.ndarray

    def __post_init__(self):
        if self.size < 1 or len(self.samples) != self.size:
            raise ValueError("sample count must equal grid size")


def grid_angles(size: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(size) / size


def evaluate(a: TrigSeries, theta):
    """Evaluate sum_n a_n e^{i n theta}; theta may be a scalar or an array."""
    th = np.asarray(theta, dtype=float)
    out = np.zeros(th.shape, dtype=complex)
    for n, v in a._coeffs.items():
        out += complex(v) * np.exp(1j * n * th)
    if np.ndim(theta) == 0:
        return complex(out)
    return out


def sample_series(a: TrigSeries, size: int) -> CircleGrid:
    """Sample a series on the equispaced grid of the given size."""
    return CircleGrid(size, evaluate(a, grid_angles(size)))


def from_samples(grid: CircleGrid, degree: int) -> TrigSeries:
    """Recover the band-limited series of the given degree from grid samples.

    The inverse DFT is exact (up to roundoff) for inputs that are genuinely
    band-limited to the requested degree; the grid must satisfy the Nyquist
    bound size >= 2*degree + 1.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    if grid.size < 2 * degree + 1:
        raise GridTooSmall(
            f"grid size {grid.size} < 2*{degree}+1 required for degree {degree}")
    spec = np.fft.fft(np.asarray(grid.samples, dtype=complex)) / grid.size
    coeffs = {}
    for n in range(-degree, degree + 1):
        coeffs[n] = spec[n % grid.size]
    return TrigSeries.from_complex(coeffs)


def is_real(a: TrigSeries) -> bool:
    """True iff the series is conjugate-symmetric: a_{-n} = conj(a_n).

    Exact equality on the exact backend; on the float backend the check
    allows roundoff up to 1e-12 * sum|a_n|.
    """
    if a.backend == EXACT:
        return all(a.coeff(-n) == v.conjugate() for n, v in a.items())
    tol = 1e-12 * (a.sum_abs() + 1e-300)
    return all(abs(a.coeff(-n) - v.conjugate()) <= tol for n, v in a.items())


def min_on_circle(a: TrigSeries, grid_size: int = DEFAULT_GRID) -> float:
    """Minimum of a over a dense sample grid.

    A positivity *screen*, not a certificate: the true minimum can only be
    lower than the sampled one.
    """
    if not is_real(a):
        raise NotReal("min_on_circle needs a real (conjugate-symmetric) series")
    values = evaluate(a, grid_angles(grid_size))
    return float(np.min(values.real))


def normalization_integral(a: TrigSeries, grid_size: int = DEFAULT_GRID) -> float:
    """(1/2pi) * integral of dtheta / a(theta) by the trapezoid rule.

    For a constant series {0: c} this is 1/c; rescaling a by c > 0 divides
    the integral by c.
    """
    if min_on_circle(a, grid_size) <= 0.0:
        raise NotPositive("normalization integral requires a > 0 on the circle")
    values = evaluate(a, grid_angles(grid_size)).real
    return float(np.mean(1.0 / values))


# JSON serialization -------------------------------------------------------
#
# {"coeffs": [{"n": 2, "re": "1/2", "im": "0"}, ...]}
# with scalar components as decimal strings; exact rationals render as "p/q".


def series_to_json(a: TrigSeries) -> dict:
    rows = []
    for n, v in a.items():
        re, im = format_scalar(v)
        rows.append({"n": n, "re": re, "im": im})
    return {"coeffs": rows}


def series_from_json(obj: dict, backend: str = EXACT) -> TrigSeries:
    coeffs = {}
    for row in obj["coeffs"]:
        coeffs[int(row["n"])] = parse_scalar(row.get("re", "0"),
                                             row.get("im", "0"), backend)
    return TrigSeries(coeffs, backend)


def save_series(a: TrigSeries, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(series_to_json(a), fh, indent=2)
        fh.write("\n")


def load_series(path, backend: str = EXACT) -> TrigSeries:
    with open(path, encoding="utf-8") as fh:
        return series_from_json(json.load(fh), backend)
