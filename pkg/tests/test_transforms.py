"""Discrete and integrated transforms, with numpy.fft as an outside oracle."""

import cmath
import math

import numpy as np
import pytest
from numpy.fft import fft as np_fft

from fourierkit import (
    EmptyBins,
    IndexOutOfRange,
    NonPositiveInterval,
    QuadratureSpec,
    Spectrum,
    ToleranceNotReached,
    Waveform,
    bin_to_frequency,
    centered,
    dft,
    dtft_eval,
    fft,
    half_transform,
    idft,
    ifft,
    quad_ft,
    rect,
    sinc,
)


def _random_waveform(rng, n, interval=1.0):
    data = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return Waveform(data, interval)


# ---------------------------------------------------------------------------
# discrete transforms
# ---------------------------------------------------------------------------

def test_dft_known_sequence():
    # cos at half Nyquist: [1, 0, -1, 0] -> [0, 2, 0, 2]
    s = dft(Waveform([1.0, 0.0, -1.0, 0.0], 1.0))
    assert np.allclose(s.bins, [0.0, 2.0, 0.0, 2.0], atol=1e-14)


def test_dft_impulse_is_flat():
    s = dft(Waveform([1.0, 0.0, 0.0, 0.0, 0.0], 1.0))
    assert np.allclose(s.bins, np.ones(5), atol=1e-15)


def test_dft_dc_concentrates_in_bin_zero():
    s = dft(Waveform(np.ones(8), 1.0))
    assert s.bins[0] == pytest.approx(8.0, abs=1e-13)
    assert np.max(np.abs(s.bins[1:])) <= 1e-13


def test_dft_single_sample():
    s = dft(Waveform([3.0 - 1.0j], 1.0))
    assert s.bins[0] == pytest.approx(3.0 - 1.0j)


def test_dft_linearity():
    rng = np.random.default_rng(0)
    x = _random_waveform(rng, 33)
    y = _random_waveform(rng, 33)
    lhs = dft(Waveform(2.0 * x.samples - 1.5j * y.samples, 1.0)).bins
    rhs = 2.0 * dft(x).bins - 1.5j * dft(y).bins
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * np.max(np.abs(rhs))


def test_dft_shift_theorem():
    rng = np.random.default_rng(8)
    x = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    shifted = np.roll(x, 3)
    lhs = dft(Waveform(shifted, 1.0)).bins
    k = np.arange(16)
    rhs = dft(Waveform(x, 1.0)).bins * np.exp(-2j * np.pi * k * 3 / 16)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * np.max(np.abs(rhs))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 12, 60, 64, 255, 256, 1024])
def test_fft_matches_dft_and_numpy(n):
    rng = np.random.default_rng(n)
    w = _random_waveform(rng, n)
    ours_fast = fft(w).bins
    ours_direct = dft(w).bins
    oracle = np_fft(w.samples)
    scale = np.max(np.abs(oracle)) or 1.0
    assert np.max(np.abs(ours_fast - ours_direct)) <= 1e-12 * scale
    assert np.max(np.abs(ours_fast - oracle)) <= 1e-12 * scale


@pytest.mark.parametrize("n", [1, 2, 5, 16, 60, 255, 1024])
def test_round_trip_both_paths(n):
    rng = np.random.default_rng(1000 + n)
    w = _random_waveform(rng, n, interval=0.125)
    scale = np.max(np.abs(w.samples))
    for fwd, inv in ((dft, idft), (fft, ifft)):
        back = inv(fwd(w))
        assert np.max(np.abs(back.samples - w.samples)) <= 1e-12 * scale
        assert back.sample_interval == pytest.approx(w.sample_interval, rel=1e-15)


@pytest.mark.parametrize("n", [64, 255, 1024])
def test_hermitian_symmetry_for_real_input(n):
    rng = np.random.default_rng(n)
    w = Waveform(rng.standard_normal(n), 1.0)
    bins = dft(w).bins
    k = np.arange(1, n)
    assert np.max(np.abs(bins[n - k] - np.conj(bins[k]))) <= 1e-12


def test_parseval():
    rng = np.random.default_rng(12)
    w = _random_waveform(rng, 300)
    energy_t = np.sum(np.abs(w.samples) ** 2)
    energy_f = np.sum(np.abs(dft(w).bins) ** 2) / 300
    assert abs(energy_t - energy_f) <= 1e-12 * energy_t


def test_bin_spacing_and_inverse_interval():
    w = Waveform(np.ones(100), 0.01)
    s = dft(w)
    assert s.bin_spacing == pytest.approx(1.0, rel=1e-15)
    back = idft(s)
    assert back.sample_interval == pytest.approx(0.01, rel=1e-15)
    assert back.start_time == 0.0


def test_bin_to_frequency_even_and_odd():
    # even count: bins 0..3 nonnegative, 4 is -Fs/2, 5..7 negative
    fs = 8.0
    got = [bin_to_frequency(k, 8, fs) for k in range(8)]
    assert got == [0.0, 1.0, 2.0, 3.0, -4.0, -3.0, -2.0, -1.0]
    # odd count has no Nyquist bin
    got5 = [bin_to_frequency(k, 5, 10.0) for k in range(5)]
    assert got5 == [0.0, 2.0, 4.0, -4.0, -2.0]


def test_bin_to_frequency_validation():
    with pytest.raises(IndexOutOfRange):
        bin_to_frequency(8, 8, 1.0)
    with pytest.raises(IndexOutOfRange):
        bin_to_frequency(-1, 8, 1.0)
    with pytest.raises(EmptyBins):
        bin_to_frequency(0, 0, 1.0)
    with pytest.raises(NonPositiveInterval):
        bin_to_frequency(0, 8, 0.0)


def test_centered_orders_frequencies():
    rng = np.random.default_rng(3)
    w = _random_waveform(rng, 8, interval=0.125)
    s = fft(w)
    freqs, vals = centered(s)
    assert np.all(np.diff(freqs) > 0)
    assert freqs[0] == -4.0 and freqs[-1] == 3.0
    # bin 0 of the spectrum is DC and must sit at frequency 0
    assert vals[np.where(freqs == 0.0)[0][0]] == s.bins[0]


def test_dtft_matches_dft_at_bin_frequencies():
    rng = np.random.default_rng(5)
    w = _random_waveform(rng, 64, interval=1.0 / 16.0)
    bins = dft(w).bins
    for k in (0, 1, 7, 32, 63):
        f = bin_to_frequency(k, 64, 16.0)
        assert abs(dtft_eval(w, f) - bins[k]) <= 1e-10


def test_dtft_periodic_in_sample_rate():
    rng = np.random.default_rng(6)
    w = _random_waveform(rng, 48, interval=0.25)
    for f in (-1.3, 0.7, 1.9):
        assert abs(dtft_eval(w, f + 4.0) - dtft_eval(w, f)) <= 1e-10


def test_dtft_ignores_start_time():
    rng = np.random.default_rng(7)
    data = rng.standard_normal(20)
    a = Waveform(data, 0.5, start_time=0.0)
    b = Waveform(data, 0.5, start_time=-3.25)
    assert dtft_eval(a, 0.77) == dtft_eval(b, 0.77)


def test_windowed_tone_peak_and_nulls():
    # 32 kept samples of a unit complex tone: peak 32 at f0, nulls Fs/32 away
    fs, n, f0 = 16.0, 64, 3.0
    t = np.arange(n) / fs
    w = Waveform(np.exp(2j * np.pi * f0 * t), 1.0 / fs)
    gains = rect(t - (n / 2 - 0.5) / fs, 32.0 / fs)
    ww = Waveform(w.samples * gains, 1.0 / fs)
    assert dtft_eval(ww, f0) == pytest.approx(32.0, abs=1e-10)
    assert abs(dtft_eval(ww, f0 + fs / 32.0)) <= 1e-10
    assert abs(dtft_eval(ww, f0 - fs / 32.0)) <= 1e-10


# ---------------------------------------------------------------------------
# integrated transforms
# ---------------------------------------------------------------------------

def test_quadrature_spec_validation():
    with pytest.raises(NonPositiveInterval):
        QuadratureSpec(1.0, 1.0)
    with pytest.raises(ValueError):
        QuadratureSpec(0.0, 1.0, max_subdivisions=0)
    with pytest.raises(ValueError):
        QuadratureSpec(0.0, 1.0, abs_tolerance=0.0)
    with pytest.raises(ValueError):
        QuadratureSpec(0.0, 1.0, damping=-0.5)


def test_quad_ft_rect_gives_sinc():
    spec = QuadratureSpec(-0.5, 0.5, abs_tolerance=1e-8)
    for f in np.linspace(-10.0, 10.0, 21):
        result = quad_ft(lambda t: rect(t), float(f), spec)
        assert result.converged
        assert abs(result.value - sinc(float(f))) <= 1e-7


def test_quad_ft_gaussian_self_transform():
    # exp(-pi t^2) transforms to exp(-pi f^2)
    spec = QuadratureSpec(-6.0, 6.0, abs_tolerance=1e-10)
    for f in (0.0, 0.5, 1.0, 2.0):
        result = quad_ft(lambda t: math.exp(-math.pi * t * t), f, spec)
        assert result.converged
        assert abs(result.value - math.exp(-math.pi * f * f)) <= 1e-8


def test_quad_ft_inverse_direction():
    spec = QuadratureSpec(-6.0, 6.0, abs_tolerance=1e-10)
    result = quad_ft(lambda f: math.exp(-math.pi * f * f), 0.3, spec,
                     direction="inverse")
    assert abs(result.value - math.exp(-math.pi * 0.09)) <= 1e-8


def test_quad_ft_shift_shows_as_linear_phase():
    spec = QuadratureSpec(-0.25, 0.75, abs_tolerance=1e-10)
    result = quad_ft(lambda t: rect(t - 0.25), 1.5, spec)
    want = cmath.exp(-2j * math.pi * 1.5 * 0.25) * sinc(1.5)
    assert abs(result.value - want) <= 1e-8


def test_quad_ft_damping_factor():
    # map 1 with damping d=1 integrates exp(-|t|): transform 2 / (1 + (2 pi f)^2)
    spec = QuadratureSpec(-40.0, 40.0, abs_tolerance=1e-10, damping=1.0)
    result = quad_ft(lambda t: 1.0, 0.7, spec)
    want = 2.0 / (1.0 + (2.0 * math.pi * 0.7) ** 2)
    assert result.converged
    assert abs(result.value - want) <= 1e-8


def test_quad_ft_reports_budget_exhaustion_without_raising():
    spec = QuadratureSpec(0.0, 10.0, max_subdivisions=1, abs_tolerance=1e-14)
    result = quad_ft(lambda t: math.sin(50.0 * t), 3.0, spec)
    assert not result.converged
    assert result.error > 0.0


def test_quad_ft_rejects_bad_direction():
    spec = QuadratureSpec(0.0, 1.0)
    with pytest.raises(ValueError):
        quad_ft(lambda t: 1.0, 0.0, spec, direction="backward")


def test_half_transform_exponential_pair():
    # integral of exp(-x) cos(qx) is 1/(1+q^2); with sin it is q/(1+q^2)
    spec = QuadratureSpec(0.0, 40.0, abs_tolerance=1e-10)
    got_cos = half_transform(lambda x: math.exp(-x), 1.0, "cosine", spec)
    got_sin = half_transform(lambda x: math.exp(-x), 1.0, "sine", spec)
    assert abs(got_cos - 0.5) <= 1e-8
    assert abs(got_sin - 0.5) <= 1e-8


def test_half_transform_unit_window():
    spec = QuadratureSpec(0.0, 1.0, abs_tolerance=1e-10)
    q = 2.0
    assert abs(half_transform(lambda x: 1.0, q, "cosine", spec)
               - math.sin(q) / q) <= 1e-8
    assert abs(half_transform(lambda x: 1.0, q, "sine", spec)
               - (1.0 - math.cos(q)) / q) <= 1e-8
    # q = 0 degenerates to the plain window integral
    assert half_transform(lambda x: 1.0, 0.0, "cosine", spec) == pytest.approx(1.0)
    assert half_transform(lambda x: 1.0, 0.0, "sine", spec) == pytest.approx(0.0)


def test_half_transform_clips_negative_lower_bound():
    a = half_transform(lambda x: 1.0, 2.0, "sine", QuadratureSpec(0.0, 1.0))
    b = half_transform(lambda x: 1.0, 2.0, "sine", QuadratureSpec(-5.0, 1.0))
    assert a == b


def test_half_transform_raises_when_budget_runs_out():
    spec = QuadratureSpec(0.0, 10.0, max_subdivisions=1, abs_tolerance=1e-14)
    with pytest.raises(ToleranceNotReached):
        half_transform(lambda x: math.sin(50.0 * x), 30.0, "cosine", spec)


def test_half_transform_rejects_bad_kind():
    with pytest.raises(ValueError):
        half_transform(lambda x: 1.0, 0.0, "tangent", QuadratureSpec(0.0, 1.0))


def test_half_transform_rejects_empty_window():
    with pytest.raises(NonPositiveInterval):
        half_transform(lambda x: 1.0, 0.0, "cosine", QuadratureSpec(-2.0, -1.0))
