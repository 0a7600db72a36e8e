"""Time-frequency layer: analytic signal, Gabor atoms, short-time spectra,
the discrete distribution built from the instantaneous autocorrelation, and
RMS duration-bandwidth products.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .core import (
    FrameTooLong,
    GaborAtom,
    OddLength,
    REAL,
    RealTagViolation,
    TFDistribution,
    Waveform,
    ZeroEnergy,
    validate_waveform,
)
from .transforms import _fft_raw, _ifft_raw, bin_to_frequency


def analytic_signal(w: Waveform) -> Waveform:
    """One-sided counterpart of a real waveform.

    Built in the transform domain: DC and (for even N) the midpoint bin are
    kept, positive-frequency bins are doubled, negative-frequency bins are
    zeroed, then the inverse transform is applied.  The real part of the
    result reproduces the input.
    """
    validate_waveform(w)
    if w.tag != REAL:
        raise RealTagViolation("analytic signal needs a real-tagged waveform")
    n = len(w)
    if n < 2:
        raise ValueError(f"need at least 2 samples, got {n}")
    gains = np.zeros(n)
    gains[0] = 1.0
    if n % 2 == 0:
        gains[n // 2] = 1.0
        gains[1:n // 2] = 2.0
    else:
        gains[1:(n + 1) // 2] = 2.0
    bins = _fft_raw(w.samples) * gains
    return Waveform(_ifft_raw(bins), w.sample_interval, w.start_time)


def gabor_atom_eval(g: GaborAtom, t):
    """Atom value exp(-alpha^2 (t - t0)^2) * cis(2 pi f0 t + phase)."""
    ts = np.asarray(t, dtype=float)
    out = np.exp(-(g.alpha ** 2) * (ts - g.t0) ** 2
                 + 1j * (2.0 * np.pi * g.f0 * ts + g.phase))
    if np.isscalar(t) or ts.ndim == 0:
        return complex(out)
    return out


def gabor_atom_spectrum(g: GaborAtom, f):
    """Atom spectrum with unit peak at f0.

    The continuous transform of the atom is (sqrt(pi)/alpha) times this
    value; that constant is dropped so the envelope peaks at 1, leaving
    exp(-(pi/alpha)^2 (f - f0)^2) * cis(phase - 2 pi t0 (f - f0)).
    """
    fs = np.asarray(f, dtype=float)
    df = fs - g.f0
    out = np.exp(-((np.pi / g.alpha) ** 2) * df ** 2
                 + 1j * (g.phase - 2.0 * np.pi * g.t0 * df))
    if np.isscalar(f) or fs.ndim == 0:
        return complex(out)
    return out


def stft(w: Waveform, window_alpha: float, hop: int, frame: int) -> TFDistribution:
    """Short-time spectra under a Gaussian window.

    Args:
        w: input waveform (real or complex).
        window_alpha: Gaussian width parameter; 0 gives a flat (rectangular)
            window, making the result a blockwise discrete transform.
        hop: frame advance in samples.
        frame: frame length in samples; frames never cross the record edge.

    Returns:
        TFDistribution of kind "stft-complex": one row per frame position,
        row time at the frame center, columns in transform bin order.
    """
    validate_waveform(w)
    if window_alpha < 0.0:
        raise ValueError(f"window_alpha must be >= 0, got {window_alpha!r}")
    if hop < 1:
        raise ValueError(f"hop must be >= 1, got {hop}")
    if frame < 1:
        raise ValueError(f"frame must be >= 1, got {frame}")
    n = len(w)
    if frame > n:
        raise FrameTooLong(f"frame {frame} longer than record {n}")

    half = (frame - 1) / 2.0
    offsets = (np.arange(frame) - half) * w.sample_interval
    if window_alpha == 0.0:
        window = np.ones(frame)
    else:
        window = np.exp(-(window_alpha ** 2) * offsets ** 2)
        window[np.abs(offsets) > 4.0 / window_alpha] = 0.0

    starts = np.arange(0, n - frame + 1, hop)
    rows = np.empty((starts.size, frame), dtype=np.complex128)
    for i, s in enumerate(starts):
        rows[i] = _fft_raw(w.samples[s:s + frame] * window)
    times = w.start_time + (starts + half) * w.sample_interval
    fs = 1.0 / w.sample_interval
    freqs = np.array([bin_to_frequency(k, frame, fs) for k in range(frame)])
    return TFDistribution(rows, times, freqs, kind="stft-complex")


def wvd(w: Waveform) -> TFDistribution:
    """Discrete distribution from the instantaneous autocorrelation.

    A real input is first made analytic.  For each time index n the lag
    product Psi(n+m) * conj(Psi(n-m)) is formed over a symmetric lag window
    of half the record and transformed over m; rows are emitted only where
    the full lag window fits, so every row has the same frequency
    resolution.  Because the lag product is conjugate symmetric each row is
    real up to round-off; the stored values are exactly real.

    The lag variable advances two samples of delay per step, so a tone at
    f0 peaks at the bin nearest 2 * f0 * T * M on a frequency axis of
    k / (2 * M * T), i.e. at f0 in axis units.
    """
    validate_waveform(w)
    n = len(w)
    if n % 2 != 0:
        raise OddLength(f"need an even sample count, got {n}")
    if n < 4:
        raise ValueError(f"need at least 4 samples, got {n}")
    psi = analytic_signal(w).samples if w.tag == REAL else w.samples

    lags = n // 2
    reach = lags // 2 - 1
    centers = np.arange(reach, n - reach)
    rows = np.empty((centers.size, lags))
    base = np.zeros(lags, dtype=np.complex128)
    for i, c in enumerate(centers):
        r = base.copy()
        m = np.arange(0, reach + 1)
        prod = psi[c + m] * np.conj(psi[c - m])
        r[m] = prod
        r[-m[1:]] = np.conj(prod[1:])
        rows[i] = _fft_raw(r).real
    times = w.start_time + centers * w.sample_interval
    freqs = np.arange(lags) / (2.0 * lags * w.sample_interval)
    return TFDistribution(rows, times, freqs, kind="wvd-real")


class UncertaintyProduct(NamedTuple):
    sigma_t: float
    sigma_f: float
    product: float


def uncertainty_product(w: Waveform) -> UncertaintyProduct:
    """RMS duration, RMS bandwidth, and their product.

    A real input is replaced by its analytic form so the spectral centroid
    is one-sided.  sigma_t is the RMS width of |x(t)|^2 over the sample
    grid; sigma_f the RMS width of |X(f)|^2 on an eight-fold zero-padded
    transform grid.  For a well-resolved Gaussian envelope on a carrier the
    product approaches 1/(4 pi), the smallest value any waveform attains.
    """
    validate_waveform(w)
    psi = analytic_signal(w).samples if w.tag == REAL else w.samples
    energy = float(np.sum(np.abs(psi) ** 2))
    if energy == 0.0:
        raise ZeroEnergy("uncertainty product of an all-zero waveform")

    ts = w.start_time + w.sample_interval * np.arange(psi.size)
    pt = np.abs(psi) ** 2 / energy
    mean_t = float(np.dot(ts, pt))
    sigma_t = math.sqrt(float(np.dot((ts - mean_t) ** 2, pt)))

    padded = np.zeros(8 * psi.size, dtype=np.complex128)
    padded[:psi.size] = psi
    spec = np.abs(_fft_raw(padded)) ** 2
    fs = 1.0 / w.sample_interval
    freqs = np.array([bin_to_frequency(k, padded.size, fs) for k in range(padded.size)])
    pf = spec / float(spec.sum())
    mean_f = float(np.dot(freqs, pf))
    sigma_f = math.sqrt(float(np.dot((freqs - mean_f) ** 2, pf)))
    return UncertaintyProduct(sigma_t, sigma_f, sigma_t * sigma_f)
