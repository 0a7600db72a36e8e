"""Command line front end.

Reads waveforms from CSV/WAV files or built-in generators, dispatches to the
library, and writes plain CSV tables (UTF-8, LF, 17 significant digits) that
plot directly.  Exit status: 0 on success, 1 on runtime errors, 2 on bad
flags.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
import wave
from typing import Callable

import numpy as np

from . import config, sampling, series, timefreq, transforms
from .core import FourierKitError, GaborAtom, ParseError, Spectrum, Waveform

_FMT = "%.17g"


def _fmt(x: float) -> str:
    return _FMT % x


def _write_csv(path: str | None, header: list[str], rows) -> None:
    out = open(path, "w", encoding="utf-8", newline="") if path else sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) if isinstance(v, float) else str(v) for v in row])
    finally:
        if path:
            out.close()


# ---------------------------------------------------------------------------
# input
# ---------------------------------------------------------------------------

def _read_wav(path: str) -> Waveform:
    with wave.open(path, "rb") as fh:
        if fh.getnchannels() != 1:
            raise ParseError(f"{path}: only mono WAV input is supported")
        if fh.getsampwidth() != 2:
            raise ParseError(f"{path}: only 16-bit PCM WAV input is supported")
        if fh.getcomptype() != "NONE":
            raise ParseError(f"{path}: compressed WAV input is not supported")
        rate = fh.getframerate()
        raw = fh.readframes(fh.getnframes())
    pcm = np.frombuffer(raw, dtype="<i2").astype(float) / 32768.0
    return Waveform(pcm, 1.0 / rate, 0.0)


def _read_table(path: str) -> tuple[list[str], list[list[float]]]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise ParseError(f"{path}: empty file") from None
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                rows.append([float(v) for v in row])
            except ValueError as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from None
    if not rows:
        raise ParseError(f"{path}: no data rows")
    widths = {len(r) for r in rows}
    if widths != {len(header)}:
        raise ParseError(f"{path}: ragged rows or header/data mismatch")
    return header, rows


def _column(header: list[str], rows: list[list[float]], name: str) -> np.ndarray | None:
    if name not in header:
        return None
    i = header.index(name)
    return np.array([r[i] for r in rows])


def _read_waveform_csv(path: str, fs: float | None) -> Waveform:
    header, rows = _read_table(path)
    re = _column(header, rows, "re")
    if re is None:
        raise ParseError(f"{path}: waveform CSV needs a 're' column, got {header}")
    im = _column(header, rows, "im")
    samples = re if im is None else re + 1j * im
    times = _column(header, rows, "time_s")
    if times is not None and len(times) > 1:
        interval = float(times[1] - times[0])
        start = float(times[0])
    elif fs:
        interval, start = 1.0 / fs, 0.0
    else:
        raise ParseError(f"{path}: no time_s column; pass --fs to set the sample rate")
    return Waveform(samples, interval, start)


def _read_spectrum_csv(path: str, fs: float | None) -> Spectrum:
    header, rows = _read_table(path)
    re = _column(header, rows, "re")
    im = _column(header, rows, "im")
    if re is None or im is None:
        raise ParseError(f"{path}: spectrum CSV needs 're' and 'im' columns, got {header}")
    freqs = _column(header, rows, "freq_hz")
    if freqs is not None and len(freqs) > 1:
        spacing = float(freqs[1] - freqs[0])
    elif fs:
        spacing = fs / len(rows)
    else:
        raise ParseError(f"{path}: no freq_hz column; pass --fs to set the bin spacing")
    return Spectrum(re + 1j * im, spacing)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

GENERATORS = ("dc", "impulse", "sine", "square", "chirp", "gabor")


def _square_wave(cycles: float) -> float:
    """Unit square wave at a phase given in cycles, zero exactly at the jumps.

    sign(sin(2*pi*cycles)) drifts off the jump values in floating point
    (sin(pi) evaluates to ~1.2e-16, so the sign comes out +1 where the
    half-value convention wants 0); folding the phase keeps the jumps exact.
    """
    u = cycles % 1.0
    if u == 0.0 or u == 0.5:
        return 0.0
    return 1.0 if u < 0.5 else -1.0


def _need(parser: argparse.ArgumentParser, args: argparse.Namespace, names: list[str]) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n.replace("-", "_")) is None]
    if missing:
        parser.error(f"generator '{args.gen}' needs {', '.join(missing)}")


def _generated_waveform(parser: argparse.ArgumentParser, args: argparse.Namespace) -> Waveform:
    fs = args.fs if args.fs else 1.0
    n = args.n
    interval = 1.0 / fs
    phase = args.phase or 0.0
    if args.gen == "dc":
        return Waveform(np.ones(n), interval)
    if args.gen == "impulse":
        samples = np.zeros(n)
        samples[0] = 1.0
        return Waveform(samples, interval)
    if args.gen == "sine":
        _need(parser, args, ["f"])
        return sampling.sample(lambda t: math.sin(2.0 * math.pi * args.f * t + phase),
                               interval, n)
    if args.gen == "square":
        _need(parser, args, ["f"])
        return sampling.sample(
            lambda t: _square_wave(args.f * t + phase / (2.0 * math.pi)),
            interval, n)
    if args.gen == "chirp":
        _need(parser, args, ["f0", "f1"])
        dur = n * interval
        rate = (args.f1 - args.f0) / (2.0 * dur)
        return sampling.sample(
            lambda t: math.cos(2.0 * math.pi * (args.f0 * t + rate * t * t) + phase),
            interval, n)
    if args.gen == "gabor":
        _need(parser, args, ["t0", "f0", "alpha"])
        atom = GaborAtom(args.t0, args.f0, args.alpha, phase)
        return sampling.sample(lambda t: timefreq.gabor_atom_eval(atom, t), interval, n)
    parser.error(f"unknown generator {args.gen!r}")


def _input_waveform(parser: argparse.ArgumentParser, args: argparse.Namespace) -> Waveform:
    if args.input:
        if args.input.lower().endswith(".wav"):
            return _read_wav(args.input)
        return _read_waveform_csv(args.input, args.fs)
    if args.gen:
        return _generated_waveform(parser, args)
    parser.error("give an input file or --gen")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _cmd_transform(parser, args, settings) -> int:
    method = args.method or settings.get("fft_strategy") or "fft"
    if method not in ("dft", "fft"):
        parser.error(f"--method must be dft or fft, got {method!r}")
    if args.inverse:
        if not args.input:
            parser.error("--inverse needs a spectrum CSV input")
        spec = _read_spectrum_csv(args.input, args.fs)
        w = transforms.idft(spec) if method == "dft" else transforms.ifft(spec)
        rows = [(i, i * w.sample_interval, v.real, v.imag)
                for i, v in enumerate(w.samples)]
        _write_csv(args.output, ["index", "time_s", "re", "im"], rows)
        return 0
    w = _input_waveform(parser, args)
    s = transforms.dft(w) if method == "dft" else transforms.fft(w)
    n = len(s)
    fs = s.bin_spacing * n
    rows = [(k, transforms.bin_to_frequency(k, n, fs), v.real, v.imag,
             abs(v), math.atan2(v.imag, v.real))
            for k, v in enumerate(s.bins)]
    _write_csv(args.output, ["bin", "freq_hz", "re", "im", "mag", "phase"], rows)
    return 0


def _series_map(parser, args) -> Callable[[float], float]:
    period = args.period
    if args.gen == "square":
        return lambda t: _square_wave(t / period)
    if args.gen == "sine":
        return lambda t: math.sin(2.0 * math.pi * t / period)
    if args.gen == "dc":
        return lambda t: 1.0
    parser.error(f"series supports --gen square|sine|dc, got {args.gen!r}")


def _cmd_series(parser, args, settings) -> int:
    tol = args.tolerance or float(settings.get("quad_tolerance", config.QUADRATURE_TOLERANCE))
    qspec = transforms.QuadratureSpec(0.0, args.period, abs_tolerance=tol)
    coeffs = series.series_coefficients(_series_map(parser, args), args.period,
                                        args.k, qspec)
    if args.synthesize:
        ts = np.linspace(0.0, args.period, args.synthesize, endpoint=False)
        vals = series.series_synthesize(coeffs, ts)
        _write_csv(args.output, ["t", "value"], [(float(t), float(v)) for t, v in zip(ts, vals)])
        return 0
    rows = [(0, coeffs.a0, 0.0)]
    rows += [(m, float(coeffs.cosine[m - 1]), float(coeffs.sine[m - 1]))
             for m in range(1, coeffs.harmonics + 1)]
    _write_csv(args.output, ["n", "a", "b"], rows)
    return 0


def _cmd_sample(parser, args, settings) -> int:
    w = _generated_waveform(parser, args)
    rows = [(i, w.start_time + i * w.sample_interval, v.real, v.imag)
            for i, v in enumerate(w.samples)]
    _write_csv(args.output, ["index", "time_s", "re", "im"], rows)
    return 0


def _cmd_reconstruct(parser, args, settings) -> int:
    w = _input_waveform(parser, args)
    span = w.sample_interval * (len(w) - 1)
    ts = w.start_time + np.linspace(0.0, span, args.grid)
    rows = []
    for t in ts:
        v = sampling.sinc_reconstruct(w, float(t), args.taps)
        rows.append((float(t), v.real, v.imag))
    _write_csv(args.output, ["t", "re", "im"], rows)
    return 0


def _cmd_stft(parser, args, settings) -> int:
    w = _input_waveform(parser, args)
    dist = timefreq.stft(w, args.window_alpha, args.hop, args.frame)
    rows = []
    for i, t in enumerate(dist.time_axis):
        for j, f in enumerate(dist.freq_axis):
            v = dist.values[i, j]
            rows.append((float(t), float(f), v.real, v.imag))
    _write_csv(args.output, ["t", "f", "re", "im"], rows)
    return 0


def _cmd_wvd(parser, args, settings) -> int:
    w = _input_waveform(parser, args)
    dist = timefreq.wvd(w)
    rows = []
    for i, t in enumerate(dist.time_axis):
        for j, f in enumerate(dist.freq_axis):
            rows.append((float(t), float(f), float(dist.values[i, j])))
    _write_csv(args.output, ["t", "f", "value"], rows)
    return 0


def _cmd_atoms(parser, args, settings) -> int:
    atom = GaborAtom(args.t0, args.f0, args.alpha, args.phase or 0.0)
    if args.domain == "time":
        span = 5.0 / atom.alpha
        xs = np.linspace(atom.t0 - span, atom.t0 + span, args.points)
        vals = [timefreq.gabor_atom_eval(atom, float(x)) for x in xs]
        _write_csv(args.output, ["t", "re", "im"],
                   [(float(x), v.real, v.imag) for x, v in zip(xs, vals)])
    else:
        span = 5.0 * atom.alpha / math.pi
        xs = np.linspace(atom.f0 - span, atom.f0 + span, args.points)
        vals = [timefreq.gabor_atom_spectrum(atom, float(x)) for x in xs]
        _write_csv(args.output, ["f", "re", "im"],
                   [(float(x), v.real, v.imag) for x, v in zip(xs, vals)])
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_gen_flags(p: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        p.add_argument("input", nargs="?", help="input CSV or WAV file")
    p.add_argument("--gen", choices=GENERATORS, help="built-in signal generator")
    p.add_argument("--n", type=int, default=64, help="sample count for generators")
    p.add_argument("--fs", type=float, help="sample rate in Hz (generators and raw CSV)")
    p.add_argument("--f", type=float, help="tone frequency in Hz")
    p.add_argument("--phase", type=float, help="phase offset in radians")
    p.add_argument("--f0", type=float, help="start frequency / atom frequency in Hz")
    p.add_argument("--f1", type=float, help="chirp end frequency in Hz")
    p.add_argument("--t0", type=float, help="atom center time in seconds")
    p.add_argument("--alpha", type=float, help="atom width parameter")
    p.add_argument("-o", "--output", help="output CSV path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourierkit",
        description="Fourier analysis toolkit: transforms, series, sampling, "
                    "and time-frequency tables as CSV.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="discrete transform of a waveform")
    _add_gen_flags(p)
    p.add_argument("--inverse", action="store_true", help="invert a spectrum CSV")
    p.add_argument("--method", choices=("dft", "fft"), help="direct or fast path")
    p.set_defaults(run=_cmd_transform)

    p = sub.add_parser("series", help="trigonometric series coefficients")
    p.add_argument("--gen", required=True, help="periodic map: square, sine, or dc")
    p.add_argument("--period", type=float, required=True, help="period in seconds")
    p.add_argument("--k", type=int, required=True, help="highest harmonic")
    p.add_argument("--synthesize", type=int, metavar="POINTS",
                   help="emit the partial sum on a grid instead of coefficients")
    p.add_argument("--tolerance", type=float, help="quadrature tolerance per coefficient")
    p.add_argument("-o", "--output", help="output CSV path (default: stdout)")
    p.set_defaults(run=_cmd_series)

    p = sub.add_parser("sample", help="sample a generator to a waveform table")
    _add_gen_flags(p, with_input=False)
    p.set_defaults(run=_cmd_sample)

    p = sub.add_parser("reconstruct", help="truncated sinc interpolation table")
    _add_gen_flags(p)
    p.add_argument("--taps", type=int, default=64, help="samples used per side")
    p.add_argument("--grid", type=int, default=257, help="output grid size")
    p.set_defaults(run=_cmd_reconstruct)

    p = sub.add_parser("stft", help="short-time spectra under a Gaussian window")
    _add_gen_flags(p)
    p.add_argument("--window-alpha", type=float, default=0.0,
                   help="Gaussian window width parameter (0 = flat)")
    p.add_argument("--hop", type=int, required=True, help="frame advance in samples")
    p.add_argument("--frame", type=int, required=True, help="frame length in samples")
    p.set_defaults(run=_cmd_stft)

    p = sub.add_parser("wvd", help="time-frequency distribution table")
    _add_gen_flags(p)
    p.set_defaults(run=_cmd_wvd)

    p = sub.add_parser("atoms", help="Gabor atom waveform or spectrum table")
    p.add_argument("--t0", type=float, required=True, help="center time in seconds")
    p.add_argument("--f0", type=float, required=True, help="center frequency in Hz")
    p.add_argument("--alpha", type=float, required=True, help="width parameter")
    p.add_argument("--phase", type=float, help="phase offset in radians")
    p.add_argument("--domain", choices=("time", "freq"), default="time")
    p.add_argument("--points", type=int, default=257, help="grid size")
    p.add_argument("-o", "--output", help="output CSV path (default: stdout)")
    p.set_defaults(run=_cmd_atoms)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = config.load_config()
        return args.run(parser, args, settings)
    except BrokenPipeError:
        return 1
    except (FourierKitError, OSError, ValueError) as exc:
        print(f"fourierkit: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
