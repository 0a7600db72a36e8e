"""Trigonometric series analysis and synthesis.

Coefficients follow the mean-plus-harmonics normalization: a0 is the mean
over one period, a_n and b_n carry the factor 2/period.  Integrals run over
[0, period] by composite Simpson quadrature on a grid sized to resolve the
highest requested harmonic, refined by doubling until every coefficient
passes the tolerance or the panel budget is reached.  Synthesis is the plain
finite partial sum, so jump behavior (midpoint convergence, overshoot) is
faithful rather than smoothed away.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from .core import NonPositiveInterval
from .transforms import QuadratureSpec


@dataclass(frozen=True, eq=False)
class SeriesCoefficients:
    """Real-form coefficients a0, a_1..a_K, b_1..b_K for one period.

    ``converged`` mirrors the coefficient layout (a0, then cosines, then
    sines); an empty tuple means every integral met its tolerance.
    """

    a0: float
    cosine: np.ndarray
    sine: np.ndarray
    period: float
    converged: tuple[bool, ...] = ()

    def __post_init__(self):
        cos = np.asarray(self.cosine, dtype=float).reshape(-1)
        sin = np.asarray(self.sine, dtype=float).reshape(-1)
        if cos.size != sin.size:
            raise ValueError("cosine and sine coefficient counts differ")
        if not self.period > 0.0:
            raise NonPositiveInterval(f"period must be > 0, got {self.period!r}")
        cos.setflags(write=False)
        sin.setflags(write=False)
        object.__setattr__(self, "cosine", cos)
        object.__setattr__(self, "sine", sin)
        object.__setattr__(self, "a0", float(self.a0))
        object.__setattr__(self, "period", float(self.period))

    @property
    def harmonics(self) -> int:
        return self.cosine.size


@dataclass(frozen=True, eq=False)
class ComplexSeriesCoefficients:
    """Exponential-form coefficients: harmonic m -> c_m, m in [-K, K]."""

    terms: Mapping[int, complex]
    period: float

    def __post_init__(self):
        object.__setattr__(self, "terms", dict(self.terms))
        if not self.period > 0.0:
            raise NonPositiveInterval(f"period must be > 0, got {self.period!r}")

    @property
    def harmonics(self) -> int:
        return max((abs(m) for m in self.terms), default=0)


def _eval_on_grid(map: Callable[[float], float], xs: np.ndarray) -> np.ndarray:
    """Evaluate a map on a grid, accepting both vectorized and scalar maps."""
    try:
        vals = np.asarray(map(xs), dtype=float)
        if vals.shape == xs.shape:
            return vals
    except (TypeError, ValueError):
        pass
    return np.array([float(map(float(x))) for x in xs], dtype=float)


def _simpson_nodes(lower: float, upper: float, panels: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the composite Simpson rule with ``panels`` panels."""
    count = 2 * panels + 1
    xs = np.linspace(lower, upper, count)
    h = (upper - lower) / panels
    w = np.full(count, 2.0 * h / 6.0)
    w[1::2] = 4.0 * h / 6.0
    w[0] = w[-1] = h / 6.0
    return xs, w


def _coefficient_vector(map, period: float, k: int, panels: int) -> np.ndarray:
    """All 2K+1 coefficient integrals on one Simpson grid, as one matvec."""
    xs, wts = _simpson_nodes(0.0, period, panels)
    fw = _eval_on_grid(map, xs) * wts
    angles = np.multiply.outer(np.arange(1, k + 1), xs) * (2.0 * np.pi / period)
    out = np.empty(2 * k + 1)
    out[0] = fw.sum() / period
    out[1:k + 1] = (np.cos(angles) @ fw) * (2.0 / period)
    out[k + 1:] = (np.sin(angles) @ fw) * (2.0 / period)
    return out


def series_coefficients(map: Callable[[float], float], period: float, k: int,
                        spec: QuadratureSpec | None = None) -> SeriesCoefficients:
    """Analyze one period of ``map`` into harmonics 0..k.

    The grid starts at 64 panels per highest harmonic and doubles until the
    Richardson error estimate of every coefficient is within tolerance or
    ``spec.max_subdivisions`` panels would be exceeded; unmet coefficients
    are flagged in ``converged`` rather than raised.
    """
    if not period > 0.0:
        raise NonPositiveInterval(f"period must be > 0, got {period!r}")
    if k < 0:
        raise ValueError(f"harmonic count must be >= 0, got {k}")
    tol, max_panels = _quad_settings(spec)

    panels = min(max(64, 64 * k), max_panels)
    coarse = _coefficient_vector(map, period, k, panels)
    while True:
        fine = _coefficient_vector(map, period, k, 2 * panels)
        est = np.abs(fine - coarse) / 15.0
        done = bool(np.all(est <= tol))
        if done or 4 * panels > max_panels:
            flags = () if done else tuple(bool(e <= tol) for e in est)
            refined = fine + (fine - coarse) / 15.0
            return SeriesCoefficients(refined[0], refined[1:k + 1], refined[k + 1:],
                                      period, flags)
        panels *= 2
        coarse = fine


def half_series_coefficients(map: Callable[[float], float], extent: float, kind: str,
                             k: int, spec: QuadratureSpec | None = None) -> SeriesCoefficients:
    """Expand a map given on [0, extent] by its even or odd reflection.

    kind "cosine" uses the even extension (a0 and cosines, sines zero);
    kind "sine" uses the odd extension (sines only).  The result has period
    2 * extent.
    """
    if kind not in ("cosine", "sine"):
        raise ValueError(f"kind must be 'cosine' or 'sine', got {kind!r}")
    if not extent > 0.0:
        raise NonPositiveInterval(f"extent must be > 0, got {extent!r}")
    if k < 0:
        raise ValueError(f"harmonic count must be >= 0, got {k}")
    tol, max_panels = _quad_settings(spec)

    def integrals(panels: int) -> np.ndarray:
        xs, wts = _simpson_nodes(0.0, extent, panels)
        fw = _eval_on_grid(map, xs) * wts
        angles = np.multiply.outer(np.arange(1, k + 1), xs) * (np.pi / extent)
        out = np.empty(k + 1)
        if kind == "cosine":
            out[0] = fw.sum() / extent
            out[1:] = (np.cos(angles) @ fw) * (2.0 / extent)
        else:
            out[0] = 0.0
            out[1:] = (np.sin(angles) @ fw) * (2.0 / extent)
        return out

    panels = min(max(64, 32 * k), max_panels)
    coarse = integrals(panels)
    while True:
        fine = integrals(2 * panels)
        est = np.abs(fine - coarse) / 15.0
        done = bool(np.all(est <= tol))
        if done or 4 * panels > max_panels:
            refined = fine + (fine - coarse) / 15.0
            zeros = np.zeros(k)
            if kind == "cosine":
                coeffs = SeriesCoefficients(refined[0], refined[1:], zeros, 2.0 * extent)
            else:
                coeffs = SeriesCoefficients(0.0, zeros, refined[1:], 2.0 * extent)
            if not done:
                flags = tuple(bool(e <= tol) for e in est)
                coeffs = SeriesCoefficients(coeffs.a0, coeffs.cosine, coeffs.sine,
                                            coeffs.period, flags)
            return coeffs
        panels *= 2
        coarse = fine


def _quad_settings(spec: QuadratureSpec | None) -> tuple[float, int]:
    if spec is None:
        spec = QuadratureSpec(0.0, 1.0)
    return spec.abs_tolerance, spec.max_subdivisions


def series_synthesize(c: SeriesCoefficients, t) -> float:
    """Partial sum a0 + sum_n a_n cos(2 pi n t / P) + b_n sin(2 pi n t / P)."""
    ts = np.asarray(t, dtype=float)
    if c.harmonics == 0:
        out = np.full(ts.shape, c.a0)
    else:
        angles = np.multiply.outer(ts, np.arange(1, c.harmonics + 1)) * (2.0 * np.pi / c.period)
        out = c.a0 + np.cos(angles) @ c.cosine + np.sin(angles) @ c.sine
    if np.isscalar(t) or ts.ndim == 0:
        return float(out)
    return out


def to_complex(c: SeriesCoefficients) -> ComplexSeriesCoefficients:
    """Exponential form: c_0 = a0, c_m = (a_m - i b_m)/2, c_-m = (a_m + i b_m)/2."""
    terms: dict[int, complex] = {0: complex(c.a0)}
    for m in range(1, c.harmonics + 1):
        a = c.cosine[m - 1]
        b = c.sine[m - 1]
        terms[m] = 0.5 * (a - 1j * b)
        terms[-m] = 0.5 * (a + 1j * b)
    return ComplexSeriesCoefficients(terms, c.period)


def from_complex(cc: ComplexSeriesCoefficients) -> SeriesCoefficients:
    """Inverse of ``to_complex``; missing harmonics are treated as zero."""
    k = cc.harmonics
    a0 = cc.terms.get(0, 0.0 + 0.0j).real
    cos = np.zeros(k)
    sin = np.zeros(k)
    for m in range(1, k + 1):
        plus = complex(cc.terms.get(m, 0.0))
        minus = complex(cc.terms.get(-m, 0.0))
        cos[m - 1] = (plus + minus).real
        sin[m - 1] = ((minus - plus) * -1j).real
    return SeriesCoefficients(a0, cos, sin, cc.period)
