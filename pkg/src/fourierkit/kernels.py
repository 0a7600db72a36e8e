"""Named kernels and impulse calculus.

Scalar in, scalar out; numpy arrays broadcast elementwise.  The rectangle and
step take the half value at their jumps, which is the value every partial sum
and inversion formula in this package actually converges to there.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .core import ImpulseTrain, NonPositiveInterval, TIME

# Below this, sin(theta/2) is treated as zero and the kernel's limit is used.
_SINGULAR = 1e-12


def _match(x, out):
    """Return a scalar when the input was one."""
    if np.isscalar(x) or (isinstance(x, np.ndarray) and x.ndim == 0):
        return float(out)
    return out


def dirichlet_sum(i: int, theta) -> float:
    """Truncated cosine kernel 1/2 + sum_{m=1..i} cos(m*theta)."""
    if i < 0:
        raise ValueError(f"order must be >= 0, got {i}")
    th = np.asarray(theta, dtype=float)
    if i == 0:
        return _match(theta, np.full(th.shape, 0.5))
    m = np.arange(1, i + 1)
    out = 0.5 + np.cos(np.multiply.outer(th, m)).sum(axis=-1)
    return _match(theta, out)


def dirichlet_closed(i: int, theta) -> float:
    """Closed form sin((i+1/2)theta) / (2 sin(theta/2)) of the same kernel.

    The quotient repeats every full turn, and near a turn the two sines must
    stay correlated or rounding in the numerator is divided by a vanishing
    denominator.  Reducing theta to the nearest turn first keeps them on the
    same small argument; the (-1)^m factors picked up by numerator and
    denominator cancel because 2i+1 is odd.  At the turns themselves the
    quotient is replaced by its limit i + 1/2.
    """
    if i < 0:
        raise ValueError(f"order must be >= 0, got {i}")
    th = np.asarray(theta, dtype=float)
    ph = th - 2.0 * np.pi * np.round(th / (2.0 * np.pi))
    half = np.sin(ph / 2.0)
    singular = np.abs(half) < _SINGULAR
    denom = np.where(singular, 1.0, 2.0 * half)
    out = np.where(singular, i + 0.5, np.sin((i + 0.5) * ph) / denom)
    return _match(theta, out)


def rect(t, width: float = 1.0):
    """Rectangle of unit height: 1 inside (-w/2, w/2), 1/2 at the edges."""
    if not width > 0.0:
        raise NonPositiveInterval(f"width must be > 0, got {width!r}")
    at = np.abs(np.asarray(t, dtype=float))
    half = width / 2.0
    out = np.where(at < half, 1.0, np.where(at == half, 0.5, 0.0))
    return _match(t, out)


def sinc(u):
    """Normalized sinc sin(pi u)/(pi u) with sinc(0) = 1."""
    arr = np.asarray(u, dtype=float)
    pu = np.pi * np.where(arr == 0.0, 1.0, arr)
    out = np.where(arr == 0.0, 1.0, np.sin(pu) / pu)
    return _match(u, out)


def sinc_scaled(u, width: float):
    """Transform of a width-`width` rectangle: width * sinc(width * u)."""
    if not width > 0.0:
        raise NonPositiveInterval(f"width must be > 0, got {width!r}")
    return width * sinc(np.multiply(u, width))


def step(x):
    """Unit step: 0 for x < 0, 1 for x > 0, 1/2 at x = 0."""
    arr = np.asarray(x, dtype=float)
    out = np.where(arr < 0.0, 0.0, np.where(arr > 0.0, 1.0, 0.5))
    return _match(x, out)


def make_comb(period: float, count: int, weight: complex = 1.0, domain: str = TIME) -> ImpulseTrain:
    """Equally weighted impulses at 0, period, ..., (count-1)*period."""
    if not period > 0.0:
        raise NonPositiveInterval(f"period must be > 0, got {period!r}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    return ImpulseTrain(tuple((k * period, weight) for k in range(count)), domain=domain)


def sift(train: ImpulseTrain, map: Callable[[float], complex]) -> complex:
    """Apply the train to a map: sum of weight * map(location)."""
    total = 0.0 + 0.0j
    for loc, wt in train.impulses:
        total += wt * complex(map(loc))
    return total
