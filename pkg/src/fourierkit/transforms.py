"""Transform family.

Discrete side: ``dft`` is the direct O(N^2) summation and is kept as the
reference path; ``fft`` is an iterative radix-2 transform with cached
twiddle tables, falling back to a chirp convolution for lengths that are
not powers of two.  Forward transforms are unscaled, inverses carry 1/N.

Continuous side: ``quad_ft`` integrates map(t) * exp(-+ i 2 pi f t) with an
adaptive Simpson rule, with an optional exponential damping factor for
slowly decaying tails, and ``half_transform`` does the cosine/sine integral
over the half line with the kernel argument in radians per second.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .config import MAX_SUBDIVISIONS, QUADRATURE_TOLERANCE
from .core import (
    EmptyBins,
    IndexOutOfRange,
    NonPositiveInterval,
    Spectrum,
    ToleranceNotReached,
    Waveform,
    validate_waveform,
)

FORWARD = "forward"
INVERSE = "inverse"
COSINE = "cosine"
SINE = "sine"


# ---------------------------------------------------------------------------
# discrete transforms
# ---------------------------------------------------------------------------

def _dft_raw(x: np.ndarray, sign: float = -1.0) -> np.ndarray:
    """Direct summation sum_n x[n] exp(sign * i 2 pi k n / N).

    The angle is built from (k*n) mod N in exact integer arithmetic, so
    conjugate bins agree to machine precision even for large N.  Rows are
    processed in chunks to keep the kernel matrix small.
    """
    x = np.asarray(x, dtype=np.complex128)
    n = x.size
    if n == 0:
        return x.copy()
    out = np.empty(n, dtype=np.complex128)
    idx = np.arange(n, dtype=np.int64)
    chunk = max(1, 2_000_000 // n)
    for lo in range(0, n, chunk):
        ks = idx[lo:lo + chunk, None]
        ang = (ks * idx[None, :]) % n
        out[lo:lo + chunk] = np.exp((sign * 2j * np.pi / n) * ang) @ x
    return out


def dft(w: Waveform) -> Spectrum:
    """Forward discrete transform by direct summation, no scaling."""
    validate_waveform(w)
    n = len(w)
    return Spectrum(_dft_raw(w.samples, -1.0), bin_spacing=1.0 / (n * w.sample_interval))


def idft(s: Spectrum) -> Waveform:
    """Inverse discrete transform by direct summation, scaled by 1/N.

    The spectrum carries no time origin, so the waveform starts at t = 0.
    """
    n = _require_bins(s)
    samples = _dft_raw(s.bins, +1.0) / n
    return Waveform(samples, sample_interval=1.0 / (n * s.bin_spacing))


@lru_cache(maxsize=64)
def _halfturn(m: int) -> np.ndarray:
    """Twiddle table exp(-i pi k / m), k = 0..m-1, immutable once built."""
    w = np.exp(-1j * np.pi * np.arange(m) / m)
    w.setflags(write=False)
    return w


def _fft_pow2(x: np.ndarray) -> np.ndarray:
    """Iterative radix-2 transform; len(x) must be a power of two."""
    n = x.size
    stage = np.asarray(x, dtype=np.complex128).reshape(1, n).copy()
    while stage.shape[0] < n:
        rows, cols = stage.shape
        half = cols // 2
        even = stage[:, :half]
        odd = stage[:, half:] * _halfturn(rows)[:, None]
        stage = np.vstack([even + odd, even - odd])
    return stage.reshape(n)


def _ifft_pow2(x: np.ndarray) -> np.ndarray:
    return np.conj(_fft_pow2(np.conj(x))) / x.size


def _bluestein(x: np.ndarray) -> np.ndarray:
    """Arbitrary-length transform as a chirp-modulated convolution.

    The quadratic exponent is reduced mod 2N in integer arithmetic before
    the complex exponential so large N does not lose phase accuracy.
    """
    n = x.size
    ks = np.arange(n, dtype=np.int64)
    chirp = np.exp((-1j * np.pi / n) * ((ks * ks) % (2 * n)))
    m = 1 << (2 * n - 1).bit_length()
    a = np.zeros(m, dtype=np.complex128)
    a[:n] = x * chirp
    b = np.zeros(m, dtype=np.complex128)
    b[:n] = np.conj(chirp)
    b[m - n + 1:] = np.conj(chirp[1:])[::-1]
    conv = _ifft_pow2(_fft_pow2(a) * _fft_pow2(b))
    return chirp * conv[:n]


def _fft_raw(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    n = x.size
    if n <= 1:
        return x.copy()
    if n & (n - 1) == 0:
        return _fft_pow2(x)
    return _bluestein(x)


def _ifft_raw(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    if x.size <= 1:
        return x.copy()
    return np.conj(_fft_raw(np.conj(x))) / x.size


def fft(w: Waveform) -> Spectrum:
    """Fast transform, same contract as ``dft``."""
    validate_waveform(w)
    n = len(w)
    return Spectrum(_fft_raw(w.samples), bin_spacing=1.0 / (n * w.sample_interval))


def ifft(s: Spectrum) -> Waveform:
    """Fast inverse, same contract as ``idft``."""
    n = _require_bins(s)
    return Waveform(_ifft_raw(s.bins), sample_interval=1.0 / (n * s.bin_spacing))


def _require_bins(s: Spectrum) -> int:
    if len(s) == 0:
        raise EmptyBins("spectrum has no bins")
    if not (s.bin_spacing > 0.0) or not np.isfinite(s.bin_spacing):
        raise NonPositiveInterval(f"bin_spacing must be > 0, got {s.bin_spacing!r}")
    return len(s)


def dtft_eval(w: Waveform, f: float) -> complex:
    """Evaluate sum_n x[n] exp(-i 2 pi f n T) at one frequency.

    This is the sample-sum transform of the sequence; it is periodic in f
    with period 1/T.  The waveform's start time does not enter.
    """
    validate_waveform(w)
    n = np.arange(len(w))
    return complex(np.dot(w.samples, np.exp(-2j * np.pi * f * w.sample_interval * n)))


def bin_to_frequency(k: int, n: int, sample_rate: float) -> float:
    """Frequency in Hz of bin k: k*Fs/N below the midpoint, negative above."""
    if n < 1:
        raise EmptyBins(f"bin count must be >= 1, got {n}")
    if not sample_rate > 0.0:
        raise NonPositiveInterval(f"sample_rate must be > 0, got {sample_rate!r}")
    if not 0 <= k < n:
        raise IndexOutOfRange(f"bin {k} outside 0..{n - 1}")
    if k < (n + 1) // 2:
        return k * sample_rate / n
    return (k - n) * sample_rate / n


def centered(s: Spectrum) -> tuple[np.ndarray, np.ndarray]:
    """Reorder bins for display: (frequencies ascending, matching values)."""
    n = _require_bins(s)
    fs = s.bin_spacing * n
    freqs = np.array([bin_to_frequency(k, n, fs) for k in range(n)])
    order = np.argsort(freqs, kind="stable")
    return freqs[order], s.bins[order]


# ---------------------------------------------------------------------------
# numerically integrated transforms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadratureSpec:
    """Integration window and budget for the adaptive rule.

    ``max_subdivisions`` caps the number of interval halvings; ``damping``
    multiplies the integrand by exp(-damping * |t|) to tame slowly decaying
    oscillatory tails.
    """

    lower: float
    upper: float
    max_subdivisions: int = MAX_SUBDIVISIONS
    abs_tolerance: float = QUADRATURE_TOLERANCE
    damping: float = 0.0

    def __post_init__(self):
        if not self.lower < self.upper:
            raise NonPositiveInterval(f"need lower < upper, got [{self.lower}, {self.upper}]")
        if self.max_subdivisions < 1:
            raise ValueError(f"max_subdivisions must be >= 1, got {self.max_subdivisions}")
        if not self.abs_tolerance > 0.0:
            raise ValueError(f"abs_tolerance must be > 0, got {self.abs_tolerance!r}")
        if self.damping < 0.0:
            raise ValueError(f"damping must be >= 0, got {self.damping!r}")


@dataclass(frozen=True)
class QuadResult:
    """Integral estimate with its error estimate and convergence flag."""

    value: complex
    error: float
    converged: bool


class _Budget:
    __slots__ = ("left", "ok")

    def __init__(self, splits: int):
        self.left = splits
        self.ok = True


_MIN_DEPTH = 2   # forced halvings so an oscillatory integrand cannot pass on a coarse fluke
_MAX_DEPTH = 60  # past this, interval widths reach the floating point floor


def _simpson(fa: complex, fm: complex, fb: complex, h: float) -> complex:
    return (h / 6.0) * (fa + 4.0 * fm + fb)


def _adapt(g, a, m, b, fa, fm, fb, whole, tol, budget, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = g(lm)
    frm = g(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    refined = left + right
    err = abs(refined - whole)
    if depth >= _MIN_DEPTH and err <= 15.0 * tol:
        return refined + (refined - whole) / 15.0, err / 15.0
    if budget.left <= 0 or depth >= _MAX_DEPTH:
        budget.ok = False
        return refined, err
    budget.left -= 1
    v1, e1 = _adapt(g, a, lm, m, fa, flm, fm, left, tol / 2.0, budget, depth + 1)
    v2, e2 = _adapt(g, m, rm, b, fm, frm, fb, right, tol / 2.0, budget, depth + 1)
    return v1 + v2, e1 + e2


def _integrate(g: Callable[[float], complex], lower: float, upper: float,
               abs_tolerance: float, max_subdivisions: int, panels: int) -> QuadResult:
    """Adaptive Simpson over an initial uniform panelization."""
    edges = np.linspace(lower, upper, panels + 1)
    tol = abs_tolerance / panels
    budget = _Budget(max_subdivisions)
    total = 0.0 + 0.0j
    err = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        m = 0.5 * (a + b)
        fa, fm, fb = g(a), g(m), g(b)
        whole = _simpson(fa, fm, fb, b - a)
        v, e = _adapt(g, a, m, b, fa, fm, fb, whole, tol, budget, 0)
        total += v
        err += e
    return QuadResult(total, err, budget.ok)


def _initial_panels(cycles: float) -> int:
    """At least 16 panels, or 8 per oscillation cycle, capped at 4096."""
    return int(min(4096, max(16, math.ceil(8.0 * cycles))))


def quad_ft(map: Callable[[float], complex], f: float, spec: QuadratureSpec,
            direction: str = FORWARD) -> QuadResult:
    """Continuous transform value integral map(t) exp(-+ i 2 pi f t) dt.

    direction "forward" uses exp(-i 2 pi f t), "inverse" exp(+i 2 pi f t).
    The damping factor exp(-damping |t|) from ``spec`` multiplies the
    integrand.  On budget exhaustion the best estimate is returned with
    ``converged = False`` rather than raising.
    """
    if direction not in (FORWARD, INVERSE):
        raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    sign = -2j * np.pi * f if direction == FORWARD else 2j * np.pi * f
    damping = spec.damping

    if damping == 0.0:
        def g(t: float) -> complex:
            return complex(map(t)) * np.exp(sign * t)
    else:
        def g(t: float) -> complex:
            return complex(map(t)) * np.exp(sign * t - damping * abs(t))

    panels = _initial_panels(abs(f) * (spec.upper - spec.lower))
    return _integrate(g, spec.lower, spec.upper, spec.abs_tolerance,
                      spec.max_subdivisions, panels)


def half_transform(map: Callable[[float], float], q: float, kind: str,
                   spec: QuadratureSpec) -> float:
    """Half-line integral of map(x) cos(q x) or map(x) sin(q x), x >= 0.

    ``q`` is in radians per second.  Integration runs from max(spec.lower, 0)
    to spec.upper; raises ToleranceNotReached if the budget runs out.
    """
    if kind not in (COSINE, SINE):
        raise ValueError(f"kind must be 'cosine' or 'sine', got {kind!r}")
    kernel = math.cos if kind == COSINE else math.sin
    damping = spec.damping
    lower = max(0.0, spec.lower)
    if not lower < spec.upper:
        raise NonPositiveInterval(f"empty half-line window [{lower}, {spec.upper}]")

    def g(x: float) -> complex:
        val = float(map(x)) * kernel(q * x)
        if damping:
            val *= math.exp(-damping * x)
        return val

    panels = _initial_panels(abs(q) / (2.0 * math.pi) * (spec.upper - lower))
    result = _integrate(g, lower, spec.upper, spec.abs_tolerance,
                        spec.max_subdivisions, panels)
    if not result.converged:
        raise ToleranceNotReached(
            f"half transform stopped at estimate {result.value.real!r} "
            f"with error {result.error:.3e} after exhausting the budget")
    return float(result.value.real)
