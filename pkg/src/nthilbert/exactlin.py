"""Exact dense linear algebra over Q and over Z/2^t.

Entries are Python ints or :class:`fractions.Fraction`, so nothing ever
overflows or rounds. Matrices are small (a few hundred rows at most) and
stored densely in row-major order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .modmath import DomainError, PowerOfTwoModulus, mod_inverse

BigFraction = Fraction


class Singular(DomainError, ArithmeticError):
    """The matrix has zero determinant over the rationals."""


class NonInvertible(DomainError, ArithmeticError):
    """The matrix has no inverse modulo the requested power of two."""


@dataclass(frozen=True)
class _Dense:
    n_rows: int
    n_cols: int
    entries: tuple

    def __post_init__(self):
        if self.n_rows < 1 or self.n_cols < 1:
            raise DomainError("matrix dimensions must be positive")
        if len(self.entries) != self.n_rows * self.n_cols:
            raise DomainError(
                f"{len(self.entries)} entries for a {self.n_rows}x{self.n_cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]):
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise DomainError("rows must be non-empty and of equal length")
        return cls(len(rows), len(rows[0]), tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(ij)
        return self.entries[i * self.n_cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.n_cols:(i + 1) * self.n_cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.n_cols]

    def rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.n_rows)]

    def transpose(self):
        return type(self).from_rows(self.col(j) for j in range(self.n_cols))

    def __matmul__(self, other):
        if not isinstance(other, _Dense):
            return NotImplemented
        if self.n_cols != other.n_rows:
            raise DomainError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.n_cols)]
        out = [
            sum(a * b for a, b in zip(self.row(i), c))
            for i in range(self.n_rows)
            for c in cols
        ]
        cls = IntMatrix if all(isinstance(x, int) for x in out) else RationalMatrix
        return cls(self.n_rows, other.n_cols, tuple(out))

    def __str__(self):
        return matrix_to_csv(self)


@dataclass(frozen=True)
class IntMatrix(_Dense):
    """Dense matrix of arbitrary-precision integers."""

    def __post_init__(self):
        super().__post_init__()
        if not all(isinstance(x, int) for x in self.entries):
            raise DomainError("IntMatrix entries must be integers")

    def reduce(self, m: int | PowerOfTwoModulus) -> IntMatrix:
        m = PowerOfTwoModulus.of(m).value
        return IntMatrix(self.n_rows, self.n_cols, tuple(x % m for x in self.entries))


@dataclass(frozen=True)
class RationalMatrix(_Dense):
    """Dense matrix of reduced fractions."""

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))
        super().__post_init__()


def as_rational(A: _Dense) -> RationalMatrix:
    return A if isinstance(A, RationalMatrix) else RationalMatrix(A.n_rows, A.n_cols, A.entries)


def mat_vec(A: _Dense, x: Sequence) -> list[Fraction]:
    """Exact product ``A @ x`` as a list of fractions."""
    if len(x) != A.n_cols:
        raise DomainError(f"vector of length {len(x)} against {A.n_cols} columns")
    x = [Fraction(v) for v in x]
    return [sum((a * v for a, v in zip(A.row(i), x)), Fraction(0)) for i in range(A.n_rows)]


def _require_square(A: _Dense):
    if not A.is_square:
        raise DomainError(f"matrix must be square, got {A.shape}")


def determinant(A: _Dense) -> Fraction:
    """Determinant by Gaussian elimination over the rationals."""
    _require_square(A)
    n = A.n_rows
    M = [[Fraction(x) for x in r] for r in A.rows()]
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            det = -det
        piv = M[c][c]
        det *= piv
        for r in range(c + 1, n):
            if M[r][c]:
                f = M[r][c] / piv
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def determinant_bareiss(A: _Dense) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Rational input is first scaled row by row to integers; the scale is
    divided back out at the end. Every intermediate value is an integer.
    """
    _require_square(A)
    n = A.n_rows
    scale = 1
    M = []
    for r in A.rows():
        fr = [Fraction(x) for x in r]
        d = lcm(*(x.denominator for x in fr))
        scale *= d
        M.append([int(x * d) for x in fr])
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            p = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if p is None:
                return Fraction(0)
            M[k], M[p] = M[p], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return Fraction(sign * M[n - 1][n - 1], scale)


def rational_inverse(A: _Dense) -> RationalMatrix:
    """Exact inverse over Q by Gauss-Jordan elimination.

    Raises:
        Singular: if ``A`` has zero determinant.
    """
    _require_square(A)
    n = A.n_rows
    M = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(A.rows())]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            raise Singular("matrix is singular over the rationals")
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return RationalMatrix.from_rows(r[n:] for r in M)


def det_mod2(A: IntMatrix) -> int:
    """Parity of ``det(A)`` by elimination over GF(2) on bitmask rows."""
    _require_square(A)
    n = A.n_rows
    rows = [sum(1 << j for j, x in enumerate(A.row(i)) if x % 2) for i in range(n)]
    for c in range(n):
        bit = 1 << c
        p = next((r for r in range(c, n) if rows[r] & bit), None)
        if p is None:
            return 0
        rows[c], rows[p] = rows[p], rows[c]
        for r in range(c + 1, n):
            if rows[r] & bit:
                rows[r] ^= rows[c]
    return 1


def mod_matrix_inverse(A: IntMatrix, m: int | PowerOfTwoModulus) -> IntMatrix:
    """Inverse of ``A`` over Z/2^t.

    Pivots are odd entries only (the units of Z/2^t). In each column the
    first odd entry at or below the diagonal wins.

    Raises:
        NonInvertible: when some column has no odd pivot, i.e. det(A) is even.
    """
    _require_square(A)
    m = PowerOfTwoModulus.of(m)
    M_ = m.value
    n = A.n_rows
    M = [[x % M_ for x in r] + [int(i == j) for j in range(n)] for i, r in enumerate(A.rows())]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] % 2), None)
        if p is None:
            raise NonInvertible(f"no odd pivot in column {c} modulo {M_}")
        M[c], M[p] = M[p], M[c]
        inv = mod_inverse(M[c][c], m).value
        M[c] = [x * inv % M_ for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [(a - f * b) % M_ for a, b in zip(M[r], M[c])]
    return IntMatrix.from_rows(r[n:] for r in M)


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def matrix_to_csv(A: _Dense) -> str:
    """Comma-separated rows, LF endings; rationals as ``p/q`` (``q`` dropped when 1)."""
    return "".join(",".join(_fmt(x) for x in A.row(i)) + "\n" for i in range(A.n_rows))


def matrix_from_csv(text: str) -> IntMatrix | RationalMatrix:
    rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        try:
            rows.append([Fraction(tok.strip()) for tok in line.split(",")])
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"bad matrix CSV line {line!r}") from exc
    if all(x.denominator == 1 for r in rows for x in r):
        return IntMatrix.from_rows([int(x) for x in r] for r in rows)
    return RationalMatrix.from_rows(rows)
