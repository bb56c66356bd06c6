"""Kak's discrete Hilbert transform on finite windows.

All sums are accumulated exactly; the ``2/pi`` prefactor is irrational and
is therefore applied only when rendering to floats (see :func:`render`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exactlin import RationalMatrix
from .modmath import DomainError

SCALE = 2 / math.pi


@dataclass(frozen=True)
class Signal:
    """A finite exact sequence; ``samples[i]`` sits at index ``origin + i``."""

    samples: tuple
    origin: int = 0

    def __init__(self, samples: Iterable, origin: int = 0):
        vals = tuple(Fraction(s) for s in samples)
        if not vals:
            raise DomainError("a signal needs at least one sample")
        object.__setattr__(self, "samples", vals)
        object.__setattr__(self, "origin", int(origin))

    @classmethod
    def delta(cls, at: int = 0) -> Signal:
        return cls([1], origin=at)

    @property
    def indices(self) -> range:
        return range(self.origin, self.origin + len(self.samples))

    def __len__(self):
        return len(self.samples)

    def __getitem__(self, n: int) -> Fraction:
        """Sample at absolute index ``n``; zero outside the support."""
        i = n - self.origin
        return self.samples[i] if 0 <= i < len(self.samples) else Fraction(0)

    def items(self):
        return zip(self.indices, self.samples)


@dataclass(frozen=True)
class DhtWindowSpec:
    """Truncation of the infinite sums to absolute indices ``|n| <= half_width``.

    ``half_width=None`` means no clipping beyond the signal's own support.
    """

    half_width: int | None = None
    scale: float = SCALE

    def __post_init__(self):
        if self.half_width is not None and self.half_width < 1:
            raise DomainError("window half-width must be >= 1")

    def admits(self, n: int) -> bool:
        return self.half_width is None or abs(n) <= self.half_width


def _as_range(r) -> range:
    if isinstance(r, range):
        return r
    lo, hi = r
    if hi < lo:
        raise DomainError(f"empty index interval [{lo}, {hi}]")
    return range(lo, hi + 1)


def _odd_kernel_sum(sig: Signal, out_range, window: DhtWindowSpec, sign: int) -> Signal:
    out_range = _as_range(out_range)
    terms = [(n, v) for n, v in sig.items() if v and window.admits(n)]
    out = []
    for k in out_range:
        acc = Fraction(0)
        for n, v in terms:
            if (k - n) % 2:
                acc += v / (k - n)
        out.append(sign * acc)
    return Signal(out, origin=out_range.start)


def dht_forward(f: Signal, k_range, window: DhtWindowSpec | None = None) -> Signal:
    """Forward DHT, before the ``2/pi`` scale.

    ``g(k) = sum f(n)/(k-n)`` over odd ``n`` for even ``k`` and over even
    ``n`` for odd ``k``; both cases are "``k-n`` odd".

    Args:
        f: input signal.
        k_range: a ``range`` or an inclusive ``(lo, hi)`` pair of output indices.
        window: truncation of the input index range.
    """
    return _odd_kernel_sum(f, k_range, window or DhtWindowSpec(), 1)


def dht_inverse(g: Signal, n_range, window: DhtWindowSpec | None = None) -> Signal:
    """Inverse DHT, before the ``2/pi`` scale: ``f(n) = -sum g(k)/(n-k)``."""
    return _odd_kernel_sum(g, n_range, window or DhtWindowSpec(), -1)


def render(sig: Signal, scale: float = SCALE) -> list[float]:
    """Float values of a pre-scale transform output."""
    return [float(v) * scale for v in sig.samples]


def dht_matrix(n: int) -> RationalMatrix:
    """The ``n x n`` truncated DHT matrix, ``1/(k-n)`` on odd differences.

    The ``2/pi`` factor is not folded in; it is carried by :data:`SCALE`.
    """
    if n < 2 or n % 2:
        raise DomainError(f"DHT matrix size must be even and >= 2, got {n}")
    return RationalMatrix(
        n, n,
        tuple(Fraction(1, k - j) if (k - j) % 2 else 0 for k in range(n) for j in range(n)),
    )


@dataclass(frozen=True)
class RoundtripError:
    half_width: int
    max_abs: float
    rms: float
    recovered: tuple


def roundtrip_error(f: Signal, half_width: int) -> RoundtripError:
    """Reconstruction error of inverse(forward(f)) on a window of ``half_width``.

    The forward output is evaluated on ``[-W, W]`` and the inverse sums over
    that same window; the two ``2/pi`` factors are applied in float.
    """
    w = DhtWindowSpec(half_width)
    g = dht_forward(f, (-half_width, half_width), w)
    back = dht_inverse(g, f.indices, w)
    rec = tuple(SCALE * SCALE * float(v) for v in back.samples)
    diffs = [r - float(x) for r, x in zip(rec, f.samples)]
    return RoundtripError(
        half_width,
        max(abs(d) for d in diffs),
        math.sqrt(math.fsum(d * d for d in diffs) / len(diffs)),
        rec,
    )
