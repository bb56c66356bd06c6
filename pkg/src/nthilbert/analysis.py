"""Figure presets, transition and peak analysis, CSV/SVG emission."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .modmath import DomainError


class UsageError(DomainError):
    pass


class FigureId(str, enum.Enum):
    FIG1 = "fig1"
    FIG2 = "fig2"
    FIG3 = "fig3"
    FIG4 = "fig4"


@dataclass(frozen=True)
class FigurePreset:
    id: FigureId
    samples: tuple[int, ...]
    caption: str
    provenance_note: str

    def __post_init__(self):
        if len(self.samples) != 16:
            raise DomainError("figure presets have exactly 16 samples")


FIG1_ERRATUM = (
    "The printed Figure 1 caption lists 15 values. The ninth token '13' is read as "
    "'1 3', giving two identical ramps 1,3,...,15. Pass --input to use another reading."
)

_PRESETS = {
    FigureId.FIG1: FigurePreset(
        FigureId.FIG1,
        (1, 3, 5, 7, 9, 11, 13, 15, 1, 3, 5, 7, 9, 11, 13, 15),
        "1 3 5 7 9 11 13 15 13 5 7 9 11 13 15",
        FIG1_ERRATUM,
    ),
    FigureId.FIG2: FigurePreset(
        FigureId.FIG2, (1,) * 8 + (0,) * 8, "1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0", "verbatim caption"),
    FigureId.FIG3: FigurePreset(
        FigureId.FIG3, (1,) * 4 + (0,) * 8 + (1,) * 4, "1 1 1 1 0 0 0 0 0 0 0 0 1 1 1 1", "verbatim caption"),
    FigureId.FIG4: FigurePreset(
        FigureId.FIG4, (0,) * 4 + (1,) * 8 + (0,) * 4, "0 0 0 0 1 1 1 1 1 1 1 1 0 0 0 0", "verbatim caption"),
}


def preset(fig: FigureId | str) -> FigurePreset:
    if not isinstance(fig, FigureId):
        fig = FigureId(fig.lower())
    return _PRESETS[fig]


def count_transitions(x: Sequence) -> int:
    """Adjacent unequal pairs, not wrapping around."""
    if len(x) == 0:
        raise DomainError("empty signal")
    return sum(a != b for a, b in zip(x, x[1:]))


@dataclass(frozen=True)
class PeakReport:
    transition_count: int
    peak_indices: tuple[int, ...]
    peak_values: tuple[int, ...]
    note: str = ""

    def to_text(self) -> str:
        return (
            f"transitions={self.transition_count} "
            f"peaks={list(self.peak_indices)} values={list(self.peak_values)}"
            + (f" note={self.note}" if self.note else "")
        )


def find_peaks(y: Sequence[int], source: Sequence | None = None) -> PeakReport:
    """Local maxima of ``|y|``.

    A run of equal values is one peak, reported at its leftmost index, when
    every neighbour it has is strictly smaller. A run touching an end of the
    signal has one neighbour; a run covering the whole signal has none and
    is not a peak.

    ``transition_count`` counts transitions in ``source`` (the untransformed
    signal) when given, otherwise in ``y``.
    """
    if len(y) == 0:
        raise DomainError("empty signal")
    mag = [abs(v) for v in y]
    idx, vals = [], []
    i, n = 0, len(mag)
    while i < n:
        j = i
        while j + 1 < n and mag[j + 1] == mag[i]:
            j += 1
        neighbours = ([mag[i - 1]] if i > 0 else []) + ([mag[j + 1]] if j + 1 < n else [])
        if neighbours and all(v < mag[i] for v in neighbours):
            idx.append(i)
            vals.append(mag[i])
        i = j + 1
    tc = count_transitions(source if source is not None else y)
    return PeakReport(tc, tuple(idx), tuple(vals))


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


_TRIPLE = ("value_original", "value_transformed", "value_recovered")


def emit_csv(*series: Sequence, names: Sequence[str] | None = None, origin: int = 0) -> bytes:
    """CSV with an ``index`` column plus one column per series.

    Default headers: ``value`` for one series, the original/transformed/
    recovered triple for three, ``value_<i>`` otherwise.
    """
    if not series:
        raise UsageError("no series to emit")
    n = len(series[0])
    if any(len(s) != n for s in series):
        raise DomainError("series lengths differ")
    if names is None:
        names = ["value"] if len(series) == 1 else _TRIPLE if len(series) == 3 else [
            f"value_{i}" for i in range(len(series))]
    if len(names) != len(series):
        raise UsageError("one header name per series")
    lines = [",".join(["index", *names])]
    for i in range(n):
        lines.append(",".join([str(origin + i), *(_fmt(s[i]) for s in series)]))
    return ("\n".join(lines) + "\n").encode()


_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")


def emit_svg(*series: Sequence, names: Sequence[str] | None = None, title: str = "",
             width: int = 640, height: int = 360) -> bytes:
    """Minimal standalone line chart; output depends only on the inputs."""
    if not series:
        raise UsageError("no series to emit")
    n = len(series[0])
    if any(len(s) != n for s in series):
        raise DomainError("series lengths differ")
    names = list(names) if names else [f"series {i}" for i in range(len(series))]
    vals = [[float(v) for v in s] for s in series]
    lo = min(min(s) for s in vals)
    hi = max(max(s) for s in vals)
    if hi == lo:
        hi, lo = hi + 1, lo - 1
    pad = 40
    sx = (width - 2 * pad) / max(n - 1, 1)
    sy = (height - 2 * pad) / (hi - lo)

    def pt(i, v):
        return f"{pad + i * sx:.2f},{height - pad - (v - lo) * sy:.2f}"

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>',
        f'<text x="{pad}" y="{pad - 20}" font-size="14">{title}</text>',
        f'<text x="2" y="{pad + 4}" font-size="10">{hi:g}</text>',
        f'<text x="2" y="{height - pad + 4}" font-size="10">{lo:g}</text>',
    ]
    for k, (s, name) in enumerate(zip(vals, names)):
        color = _COLORS[k % len(_COLORS)]
        pts = " ".join(pt(i, v) for i, v in enumerate(s))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{pts}"/>')
        out.append(f'<text x="{width - pad - 120}" y="{pad + 14 * k}" font-size="11" '
                   f'fill="{color}">{name}</text>')
    out.append("</svg>")
    return ("\n".join(out) + "\n").encode()
