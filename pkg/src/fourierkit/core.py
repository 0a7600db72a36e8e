"""Shared value types: waveforms, spectra, impulse trains, piecewise maps,
Gabor atoms, and time-frequency grids.

Every type here is an immutable value object.  Operations in the rest of the
package take these values and return new ones; nothing is mutated in place,
so instances are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

REAL = "real"
COMPLEX = "complex"

TIME = "time"
FREQUENCY = "frequency"


class FourierKitError(Exception):
    """Base class for every error raised by this package."""


class NonPositiveInterval(FourierKitError, ValueError):
    """A sample interval, bin spacing, period, or width was not > 0."""


class EmptySamples(FourierKitError, ValueError):
    """A waveform with no samples was passed where data is required."""


class EmptyBins(FourierKitError, ValueError):
    """A spectrum with no bins was passed where data is required."""


class RealTagViolation(FourierKitError, ValueError):
    """A waveform tagged real carries a nonzero imaginary part."""


class IndexOutOfRange(FourierKitError, IndexError):
    """A bin or sample index fell outside 0..N-1."""


class LengthMismatch(FourierKitError, ValueError):
    """Two sequences that must share a length do not."""


class NonFiniteSample(FourierKitError, ValueError):
    """A sampled map produced NaN or infinity."""


class ToleranceNotReached(FourierKitError, RuntimeError):
    """A quadrature budget ran out before the requested tolerance was met."""


class FrameTooLong(FourierKitError, ValueError):
    """An analysis frame is longer than the waveform it should slide over."""


class OddLength(FourierKitError, ValueError):
    """An operation that needs an even sample count got an odd one."""


class ZeroEnergy(FourierKitError, ValueError):
    """An all-zero waveform was passed where moments must be normalized."""


class ParseError(FourierKitError, ValueError):
    """An input file exists but its contents cannot be understood."""


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Waveform:
    """Uniformly sampled signal x(t0 + n*T) for n = 0..N-1.

    Samples are stored as complex128 regardless of tag; ``tag == "real"``
    asserts that every imaginary part is exactly zero.  When ``tag`` is
    omitted it is inferred from the data.
    """

    samples: np.ndarray
    sample_interval: float
    start_time: float = 0.0
    tag: str | None = None

    def __post_init__(self):
        arr = np.asarray(self.samples, dtype=np.complex128).reshape(-1)
        object.__setattr__(self, "samples", _frozen(arr))
        object.__setattr__(self, "sample_interval", float(self.sample_interval))
        object.__setattr__(self, "start_time", float(self.start_time))
        if self.tag is None:
            inferred = REAL if np.all(arr.imag == 0.0) else COMPLEX
            object.__setattr__(self, "tag", inferred)

    def __len__(self) -> int:
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        """Sample instants t0 + n*T."""
        return self.start_time + self.sample_interval * np.arange(self.samples.size)

    @property
    def duration(self) -> float:
        return self.sample_interval * self.samples.size


def validate_waveform(w: Waveform) -> Waveform:
    """Check waveform invariants and return the same value unchanged.

    Raises NonPositiveInterval, EmptySamples, or RealTagViolation.
    """
    if not (w.sample_interval > 0.0) or not np.isfinite(w.sample_interval):
        raise NonPositiveInterval(f"sample_interval must be > 0, got {w.sample_interval!r}")
    if w.samples.size == 0:
        raise EmptySamples("waveform has no samples")
    if w.tag == REAL and np.any(w.samples.imag != 0.0):
        raise RealTagViolation("waveform tagged real has nonzero imaginary parts")
    if w.tag not in (REAL, COMPLEX):
        raise FourierKitError(f"unknown tag {w.tag!r}")
    return w


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Discrete transform output: bin k holds X(k), k = 0..N-1.

    Bin ordering follows the transform itself: bin 0 is DC and bins past
    the midpoint wrap to negative frequencies.  ``centered`` in transforms
    reorders for display only.
    """

    bins: np.ndarray
    bin_spacing: float

    def __post_init__(self):
        arr = np.asarray(self.bins, dtype=np.complex128).reshape(-1)
        object.__setattr__(self, "bins", _frozen(arr))
        object.__setattr__(self, "bin_spacing", float(self.bin_spacing))

    def __len__(self) -> int:
        return self.bins.size


@dataclass(frozen=True, eq=False)
class ImpulseTrain:
    """Weighted impulses on a time or frequency axis.

    ``impulses`` is a tuple of (location, weight) pairs with strictly
    increasing locations.  Impulses are never evaluated pointwise; they are
    consumed by sifting and synthesis operations.
    """

    impulses: tuple[tuple[float, complex], ...]
    domain: str = TIME

    def __post_init__(self):
        pairs = tuple((float(loc), complex(wt)) for loc, wt in self.impulses)
        pairs = tuple(sorted(pairs, key=lambda p: p[0]))
        locs = [p[0] for p in pairs]
        if len(set(locs)) != len(locs):
            raise ValueError("impulse locations must be distinct")
        if self.domain not in (TIME, FREQUENCY):
            raise ValueError(f"domain must be 'time' or 'frequency', got {self.domain!r}")
        object.__setattr__(self, "impulses", pairs)

    def locations(self) -> np.ndarray:
        return np.array([loc for loc, _ in self.impulses], dtype=float)

    def weights(self) -> np.ndarray:
        return np.array([wt for _, wt in self.impulses], dtype=np.complex128)

    def __len__(self) -> int:
        return len(self.impulses)


@dataclass(frozen=True, eq=False)
class SegmentedFunction:
    """Piecewise map: a sorted tuple of (a, b, map) pieces, zero outside.

    Pieces may share endpoints but must not overlap.  Evaluation at a shared
    endpoint averages the adjacent pieces (see ``segmented_eval``).
    """

    segments: tuple[tuple[float, float, Callable[[float], float]], ...]

    def __post_init__(self):
        segs = tuple((float(a), float(b), m) for a, b, m in self.segments)
        segs = tuple(sorted(segs, key=lambda s: s[0]))
        for a, b, _ in segs:
            if not b > a:
                raise NonPositiveInterval(f"segment ({a}, {b}) has nonpositive length")
        for (_, b0, _), (a1, _, _) in zip(segs, segs[1:]):
            if a1 < b0:
                raise ValueError("segments overlap")
        object.__setattr__(self, "segments", segs)


def segmented_eval(s: SegmentedFunction, x: float) -> float:
    """Evaluate a piecewise map with half-value junctions.

    Interior points use the covering piece; a junction shared by two pieces
    yields the mean of both; a boundary next to the implicit zero region
    yields half the one-sided value; everywhere else the value is 0.
    """
    x = float(x)
    touching = []
    for a, b, m in s.segments:
        if a < x < b:
            return float(m(x))
        if x == a or x == b:
            touching.append(m)
    if not touching:
        return 0.0
    if len(touching) == 1:
        return 0.5 * float(touching[0](x))
    return 0.5 * (float(touching[0](x)) + float(touching[1](x)))


@dataclass(frozen=True)
class GaborAtom:
    """Gaussian-envelope tone: exp(-alpha^2 (t-t0)^2) * cis(2 pi f0 t + phase)."""

    t0: float
    f0: float
    alpha: float
    phase: float = 0.0

    def __post_init__(self):
        if not (self.alpha > 0.0):
            raise ValueError(f"alpha must be > 0, got {self.alpha!r}")


@dataclass(frozen=True, eq=False)
class TFDistribution:
    """Time-frequency grid: values[i, j] at time_axis[i], freq_axis[j].

    ``kind`` is "stft-complex" for short-time spectra or "wvd-real" for the
    distribution rows, which are real by construction.
    """

    values: np.ndarray
    time_axis: np.ndarray
    freq_axis: np.ndarray
    kind: str

    def __post_init__(self):
        vals = np.asarray(self.values)
        ta = np.asarray(self.time_axis, dtype=float).reshape(-1)
        fa = np.asarray(self.freq_axis, dtype=float).reshape(-1)
        if vals.ndim != 2 or vals.shape != (ta.size, fa.size):
            raise LengthMismatch(
                f"values shape {vals.shape} does not match axes ({ta.size}, {fa.size})"
            )
        if self.kind not in ("stft-complex", "wvd-real"):
            raise ValueError(f"unknown kind {self.kind!r}")
        object.__setattr__(self, "values", _frozen(vals))
        object.__setattr__(self, "time_axis", _frozen(ta))
        object.__setattr__(self, "freq_axis", _frozen(fa))
