"""Number-theoretic DHT matrices modulo powers of two.

Odd reciprocals ``1/d`` become modular inverses ``d^-1 mod 2^t``. Two
placement rules are offered:

* ``PAPER_RULE`` reproduces the published 16-point table: ``d = n-k+1`` on
  and above the diagonal, ``d = n-k-1`` below it, zero where ``n-k`` is odd.
* ``ODD_DIFFERENCE`` is the entrywise image of the classical DHT matrix:
  ``d = k-n`` where ``k-n`` is odd, zero elsewhere.

The published forward table and its 3-decimal inverse are kept verbatim
for comparison. The inverse listing has two malformed rows.
"""

from __future__ import annotations

import enum
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .exactlin import IntMatrix, RationalMatrix, _Dense
from .modmath import DomainError, PowerOfTwoModulus, mod_inverse, signed_reduce


class Variant(str, enum.Enum):
    PAPER_RULE = "paper"
    ODD_DIFFERENCE = "odd-diff"


@dataclass(frozen=True)
class NtMatrixSpec:
    size: int
    modulus: PowerOfTwoModulus
    variant: Variant = Variant.PAPER_RULE

    def __post_init__(self):
        if self.size < 2 or self.size % 2:
            raise DomainError(f"size must be even and >= 2, got {self.size}")
        object.__setattr__(self, "modulus", PowerOfTwoModulus.of(self.modulus))
        object.__setattr__(self, "variant", Variant(self.variant))

    @classmethod
    def parse(cls, text: str) -> NtMatrixSpec:
        """Parse ``"n,modulus,variant"``, e.g. ``"16,16,paper"``."""
        try:
            n, m, v = (t.strip() for t in text.split(","))
            return cls(int(n), PowerOfTwoModulus.of(int(m)), Variant(v))
        except (ValueError, TypeError) as exc:
            raise DomainError(f"bad spec {text!r}; expected n,modulus,paper|odd-diff") from exc

    def __str__(self):
        return f"{self.size},{self.modulus.value},{self.variant.value}"


PAPER16 = NtMatrixSpec(16, PowerOfTwoModulus(4), Variant.PAPER_RULE)

_FORWARD16_TEXT = """\
1 0 11 0 13 0 7 0 9 0 3 0 5 0 15 0
0 1 0 11 0 13 0 7 0 9 0 3 0 5 0 15
5 0 1 0 11 0 13 0 7 0 9 0 3 0 5 0
0 5 0 1 0 11 0 13 0 7 0 9 0 3 0 5
3 0 5 0 1 0 11 0 13 0 7 0 9 0 3 0
0 3 0 5 0 1 0 11 0 13 0 7 0 9 0 3
9 0 3 0 5 0 1 0 11 0 13 0 7 0 9 0
0 9 0 3 0 5 0 1 0 11 0 13 0 7 0 9
7 0 9 0 3 0 5 0 1 0 11 0 13 0 7 0
0 7 0 9 0 3 0 5 0 1 0 11 0 13 0 7
13 0 7 0 9 0 3 0 5 0 1 0 11 0 13 0
0 13 0 7 0 9 0 3 0 5 0 1 0 11 0 13
11 0 13 0 7 0 9 0 3 0 5 0 1 0 11 0
0 11 0 13 0 7 0 9 0 3 0 5 0 1 0 11
1 0 11 0 13 0 7 0 9 0 3 0 5 0 1 0
0 1 0 11 0 13 0 7 0 9 0 3 0 5 0 1
"""

# Verbatim, including the two trailing 17-token rows.
_INVERSE16_TEXT = """\
-0.071 0.000 0.004 0.000 -0.002 0.000 0.018 0.000 -0.031 0.000 0.049 0.000 0.042 0.000 0.012 0.000
0.000 -0.071 0.000 0.004 0.000 -0.002 0.000 0.018 0.000 -0.031 0.000 0.049 0.000 0.042 0.000 0.012
0.000 0.000 -0.060 0.000 0.004 0.000 -0.002 0.000 0.018 0.000 -0.031 0.000 0.049 0.000 0.042 0.000
0.000 0.000 0.000 -0.060 0.000 0.004 0.000 -0.002 0.000 0.018 0.000 -0.031 0.000 0.049 0.000 0.042
0.000 0.000 0.042 0.000 -0.060 0.000 0.004 0.000 -0.002 0.000 0.018 0.000 -0.031 0.000 0.049 0.000
0.000 0.000 0.000 0.042 0.000 -0.060 0.000 0.004 0.000 -0.002 0.000 0.018 0.000 -0.031 0.000 0.049
0.000 0.000 0.049 0.000 0.042 0.000 -0.060 0.000 0.004 0.000 -0.002 0.000 0.018 0.000 -0.031 0.000
0.000 0.000 0.000 0.049 0.000 0.042 0.000 -0.060 0.000 0.004 0.000 -0.002 0.000 0.018 0.000 -0.031
0.000 0.000 -0.031 0.000 0.049 0.000 0.042 0.000 -0.060 0.000 0.004 0.000 -0.002 0.000 0.018 0.000
0.000 0.000 0.000 -0.031 0.000 0.049 0.000 0.042 0.000 -0.060 0.000 0.004 0.000 -0.002 0.000 0.018
0.000 0.000 0.018 0.000 -0.031 0.000 0.049 0.000 0.042 0.000 -0.060 0.000 0.004 0.000 -0.002 0.000
0.000 0.000 0.000 0.018 0.000 -0.031 0.000 0.049 0.000 0.042 0.000 -0.060 0.000 0.004 0.000 -0.002
0.000 0.000 -0.002 0.000 0.018 0.000 -0.031 0.000 0.049 0.000 0.042 0.000 -0.060 0.000 0.004 0.000
0.000 0.000 0.000 -0.002 0.000 0.018 0.000 -0.031 0.000 0.049 0.000 0.042 0.000 -0.060 0.000 0.004
0.071 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 -0.071 0.000
0.000 0.071 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 0.000 -0.071
"""


@dataclass(frozen=True)
class PrintedRow:
    text: str
    values: tuple[float, ...] | None
    well_formed: bool


@dataclass(frozen=True)
class PrintedTables:
    forward16: IntMatrix
    inverse16_printed: tuple[PrintedRow, ...]

    @property
    def erratum_rows(self) -> list[int]:
        return [i for i, r in enumerate(self.inverse16_printed) if not r.well_formed]


def embedded_forward16() -> IntMatrix:
    """The published 16-point table, parsed from its verbatim text."""
    return IntMatrix.from_rows([int(t) for t in line.split()] for line in _FORWARD16_TEXT.splitlines())


def _parse_printed_row(line: str) -> PrintedRow:
    toks = line.split()
    try:
        vals = tuple(float(t) for t in toks)
    except ValueError:
        return PrintedRow(line, None, False)
    return PrintedRow(line, vals, len(vals) == 16)


def embedded_inverse16_printed() -> PrintedTables:
    rows = tuple(_parse_printed_row(line) for line in _INVERSE16_TEXT.splitlines())
    return PrintedTables(embedded_forward16(), rows)


def paper_denominator(k: int, n: int) -> int | None:
    """Signed odd denominator behind entry ``(k, n)`` of the published table.

    ``None`` where ``n - k`` is odd (those entries are zero).
    """
    if k < 0 or n < 0:
        raise DomainError("indices must be non-negative")
    diff = n - k
    if diff % 2:
        return None
    return diff + 1 if diff >= 0 else diff - 1


def _odd_difference_denominator(k: int, n: int) -> int | None:
    return k - n if (k - n) % 2 else None


def build_nt_matrix(spec: NtMatrixSpec) -> IntMatrix:
    rule = paper_denominator if spec.variant is Variant.PAPER_RULE else _odd_difference_denominator
    n = spec.size
    entries = []
    for k in range(n):
        for j in range(n):
            d = rule(k, j)
            entries.append(0 if d is None else mod_inverse(signed_reduce(d, spec.modulus).value, spec.modulus).value)
    return IntMatrix(n, n, tuple(entries))


@dataclass(frozen=True)
class CirculantVerdict:
    is_circulant: bool
    witness: tuple[int, int, object, object] | None = None  # (row, col, expected, found)


def check_circulant(A: _Dense) -> CirculantVerdict:
    """Check that row ``i`` is row 0 cyclically shifted right by ``i``.

    The first disagreement in row-major order is returned as the witness.
    """
    if not A.is_square:
        raise DomainError("circulant check needs a square matrix")
    n = A.n_rows
    first = A.row(0)
    for i in range(1, n):
        for j in range(n):
            expected = first[(j - i) % n]
            if A[i, j] != expected:
                return CirculantVerdict(False, (i, j, expected, A[i, j]))
    return CirculantVerdict(True)


def parity_blocks(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Split a parity-preserving matrix into its (even, even) and (odd, odd) blocks."""
    n = A.n_rows
    if not A.is_square or n % 2:
        raise DomainError("parity blocks need a square matrix of even size")
    for i in range(n):
        for j in range(n):
            if (i - j) % 2 and A[i, j] != 0:
                raise DomainError(f"entry ({i}, {j}) couples even and odd indices")
    h = n // 2
    even = type(A).from_rows([A[2 * i, 2 * j] for j in range(h)] for i in range(h))
    odd = type(A).from_rows([A[2 * i + 1, 2 * j + 1] for j in range(h)] for i in range(h))
    return even, odd


@dataclass
class ComparisonReport:
    tolerance: float
    total_compared: int = 0
    matches: int = 0
    mismatches: list[dict] = field(default_factory=list)
    erratum_rows: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_text(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def compare_printed_inverse(exact_inv: RationalMatrix, tolerance: float = 5e-4) -> ComparisonReport:
    """Compare the published 3-decimal inverse to an exact inverse.

    Malformed printed rows are listed in ``erratum_rows`` and skipped.
    Mismatches are reported, never raised.
    """
    if exact_inv.shape != (16, 16):
        raise DomainError(f"expected a 16x16 inverse, got {exact_inv.shape}")
    printed = embedded_inverse16_printed()
    report = ComparisonReport(tolerance, erratum_rows=printed.erratum_rows)
    for i, row in enumerate(printed.inverse16_printed):
        if not row.well_formed:
            continue
        for j, p in enumerate(row.values):
            exact = float(Fraction(exact_inv[i, j]))
            report.total_compared += 1
            if abs(exact - p) <= tolerance:
                report.matches += 1
            else:
                report.mismatches.append({"row": i, "col": j, "printed": p, "exact": exact})
    return report
