"""Modular arithmetic over the rings Z/2^t.

Only power-of-two moduli are supported. Their units are exactly the odd
residues, which is what makes every odd reciprocal well defined.
"""

from __future__ import annotations

from dataclasses import dataclass


class DomainError(ValueError):
    """Input outside the domain of an operation."""


class NotAUnit(DomainError, ArithmeticError):
    """Raised when inverting an even residue modulo a power of two."""


@dataclass(frozen=True)
class PowerOfTwoModulus:
    """The modulus ``M = 2**exponent`` with ``exponent >= 1``."""

    exponent: int

    def __post_init__(self):
        if not isinstance(self.exponent, int) or self.exponent < 1:
            raise DomainError(f"exponent must be a positive integer, got {self.exponent!r}")

    @property
    def value(self) -> int:
        return 1 << self.exponent

    @classmethod
    def of(cls, m: int | PowerOfTwoModulus) -> PowerOfTwoModulus:
        """Coerce an integer power of two (or an existing modulus) to a modulus."""
        if isinstance(m, PowerOfTwoModulus):
            return m
        if isinstance(m, bool) or not isinstance(m, int) or m < 2 or m & (m - 1):
            raise DomainError(f"modulus must be a power of two >= 2, got {m!r}")
        return cls(m.bit_length() - 1)

    def __int__(self):
        return self.value

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: PowerOfTwoModulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.value:
            raise DomainError(f"{self.value} not in [0, {self.modulus.value})")

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other
        if isinstance(other, Residue):
            return (self.value, self.modulus) == (other.value, other.modulus)
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid.

    Returns ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y == g``.
    """
    if a == 0 and b == 0:
        raise DomainError("egcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def signed_reduce(d: int, m: int | PowerOfTwoModulus) -> Residue:
    """Canonical representative of ``d`` in ``[0, M)``, negative ``d`` included."""
    m = PowerOfTwoModulus.of(m)
    return Residue(d % m.value, m)


def mod_inverse(a: int, m: int | PowerOfTwoModulus) -> Residue:
    """Inverse of ``a`` modulo ``M = 2**t`` via extended Euclid.

    Raises:
        NotAUnit: if ``a`` is even (no inverse exists modulo a power of two).
    """
    m = PowerOfTwoModulus.of(m)
    r = signed_reduce(a, m).value
    if r % 2 == 0:
        raise NotAUnit(f"{a} is even and has no inverse modulo {m.value}")
    g, x, _ = egcd(r, m.value)
    assert g == 1
    return Residue(x % m.value, m)


def hensel_inverse(a: int, m: int | PowerOfTwoModulus) -> Residue:
    """Inverse of odd ``a`` modulo ``2**t`` by Newton doubling.

    ``x <- x*(2 - a*x)`` doubles the number of correct low bits each step;
    the seed ``x = a`` is already correct to three bits since ``a*a = 1 (mod 8)``.
    """
    m = PowerOfTwoModulus.of(m)
    r = signed_reduce(a, m).value
    if r % 2 == 0:
        raise NotAUnit(f"{a} is even and has no inverse modulo {m.value}")
    x, bits = r, 3
    while bits < m.exponent:
        x = x * (2 - r * x) % m.value
        bits *= 2
    return Residue(x % m.value, m)
