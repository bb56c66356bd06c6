"""Forward/inverse number-theoretic transforms on integer signals.

Also hosts the search for a fully modular inverse: a matrix ``Q`` with
``Q A = I (mod M)`` would recover any input with entries in ``[0, M)`` from
the reduced transform alone.
"""

from __future__ import annotations

import enum
import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .exactlin import (
    IntMatrix,
    NonInvertible,
    RationalMatrix,
    det_mod2,
    determinant_bareiss,
    mat_vec,
    mod_matrix_inverse,
    rational_inverse,
)
from .modmath import DomainError, PowerOfTwoModulus
from .ntdht import PAPER16, NtMatrixSpec, Variant, build_nt_matrix

DEFAULT_SEED = 16
DEFAULT_TRIALS = 1000
EXHAUSTIVE_BITS = 16


class ReductionMode(str, enum.Enum):
    PLAIN = "plain"
    MOD_M = "mod-m"


@lru_cache(maxsize=None)
def nt_matrix(spec: NtMatrixSpec) -> IntMatrix:
    return build_nt_matrix(spec)


@lru_cache(maxsize=None)
def nt_inverse_matrix(spec: NtMatrixSpec) -> RationalMatrix:
    return rational_inverse(nt_matrix(spec))


def _int_signal(x: Sequence, n: int) -> list[int]:
    if len(x) != n:
        raise DomainError(f"signal of length {len(x)} for a {n}-point transform")
    out = []
    for v in x:
        if Fraction(v).denominator != 1:
            raise DomainError(f"non-integer sample {v!r}")
        out.append(int(v))
    return out


def nt_forward(x: Sequence[int], spec: NtMatrixSpec = PAPER16,
               mode: ReductionMode = ReductionMode.PLAIN) -> list[int]:
    """``A @ x`` over the integers, optionally reduced modulo ``M``."""
    A = nt_matrix(spec)
    x = _int_signal(x, spec.size)
    y = [sum(a * v for a, v in zip(A.row(i), x)) for i in range(A.n_rows)]
    if ReductionMode(mode) is ReductionMode.MOD_M:
        m = spec.modulus.value
        y = [v % m for v in y]
    return y


def nt_inverse_exact(y: Sequence[int], spec: NtMatrixSpec = PAPER16) -> list[Fraction]:
    """``A^-1 @ y`` over the rationals. Raises :class:`~nthilbert.exactlin.Singular`."""
    return mat_vec(nt_inverse_matrix(spec), _int_signal(y, spec.size))


@dataclass
class TransformRun:
    spec: NtMatrixSpec
    reduction_mode: ReductionMode
    input: list[int]
    output: list[int]
    recovered: list[Fraction] | None = None

    @property
    def residual(self) -> Fraction | None:
        if self.recovered is None:
            return None
        return max(abs(r - v) for r, v in zip(self.recovered, self.input))


def run_transform(x: Sequence[int], spec: NtMatrixSpec = PAPER16,
                  mode: ReductionMode = ReductionMode.PLAIN, invert: bool = True) -> TransformRun:
    y = nt_forward(x, spec, mode)
    rec = nt_inverse_exact(y, spec) if invert else None
    return TransformRun(spec, ReductionMode(mode), list(x), y, rec)


def roundtrip(x: Sequence[int], spec: NtMatrixSpec = PAPER16,
              mode: ReductionMode = ReductionMode.PLAIN) -> Fraction:
    """Exact ``max |A^-1 (A x) - x|``; zero in plain mode."""
    return run_transform(x, spec, mode).residual


@dataclass
class RoundtripSuite:
    trials: int
    seed: int
    failures: list[tuple[list[int], Fraction]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def random_roundtrip_suite(trials: int = DEFAULT_TRIALS, seed: int = DEFAULT_SEED,
                           spec: NtMatrixSpec = PAPER16,
                           mode: ReductionMode = ReductionMode.PLAIN) -> RoundtripSuite:
    """Round-trip ``trials`` seeded random signals with entries in ``[0, M)``."""
    rng = random.Random(seed)
    m = spec.modulus.value
    suite = RoundtripSuite(trials, seed)
    for _ in range(trials):
        x = [rng.randrange(m) for _ in range(spec.size)]
        r = roundtrip(x, spec, mode)
        if r != 0:
            suite.failures.append((x, r))
    return suite


class DetParity(str, enum.Enum):
    ODD = "odd"
    EVEN = "even"


@dataclass
class ModInverseSearchResult:
    spec: NtMatrixSpec
    det_parity: DetParity
    exact_det_parity: DetParity
    mod_inverse_matrix: IntMatrix | None = None
    inverse_verified: bool | None = None
    roundtrip_ok_mod_m: bool | None = None
    sweep: str = ""
    counterexample: list[int] | None = None

    def to_record(self) -> dict:
        return {
            "n": self.spec.size,
            "modulus": self.spec.modulus.value,
            "variant": self.spec.variant.value,
            "det_parity": self.det_parity.value,
            "exact_det_parity": self.exact_det_parity.value,
            "inverse_found": self.mod_inverse_matrix is not None,
            "inverse_verified": self.inverse_verified,
            "roundtrip_ok": self.roundtrip_ok_mod_m,
            "sweep": self.sweep,
            "counterexample": self.counterexample,
        }


def _sweep_inputs(n: int, m: int, trials: int, seed: int) -> tuple[np.ndarray, str]:
    if n * (m.bit_length() - 1) <= EXHAUSTIVE_BITS:
        X = np.array(list(itertools.product(range(m), repeat=n)), dtype=np.int64)
        return X, f"exhaustive:{len(X)}"
    rng = random.Random(seed)
    X = np.array([[rng.randrange(m) for _ in range(n)] for _ in range(trials)], dtype=np.int64)
    return X, f"random:{trials}:seed={seed}"


def _search_one(spec: NtMatrixSpec, trials: int, seed: int) -> ModInverseSearchResult:
    A = nt_matrix(spec)
    m = spec.modulus.value
    parity = DetParity.ODD if det_mod2(A) else DetParity.EVEN
    exact = DetParity.ODD if determinant_bareiss(A).numerator % 2 else DetParity.EVEN
    result = ModInverseSearchResult(spec, parity, exact)
    try:
        Q = mod_matrix_inverse(A, spec.modulus)
    except NonInvertible:
        return result
    result.mod_inverse_matrix = Q
    QA = (Q @ A).reduce(m)
    result.inverse_verified = QA.entries == IntMatrix.identity(A.n_rows).entries
    # Entries stay below 2**63: n * (m-1)**2 is tiny for the search space.
    An = np.array(A.rows(), dtype=np.int64) % m
    Qn = np.array(Q.rows(), dtype=np.int64)
    X, result.sweep = _sweep_inputs(spec.size, m, trials, seed)
    back = ((X @ An.T) % m @ Qn.T) % m
    bad = np.flatnonzero((back != X).any(axis=1))
    result.roundtrip_ok_mod_m = bad.size == 0
    if bad.size:
        result.counterexample = X[bad[0]].tolist()
    return result


def default_search_space() -> list[NtMatrixSpec]:
    return [
        NtMatrixSpec(n, PowerOfTwoModulus(t), v)
        for n in (2, 4, 8, 16, 32)
        for t in range(1, 9)
        for v in Variant
    ]


def search_mod_inverse(specs: Iterable[NtMatrixSpec] | None = None, trials: int = DEFAULT_TRIALS,
                       seed: int = DEFAULT_SEED, workers: int = 1) -> list[ModInverseSearchResult]:
    """Probe each spec for an inverse modulo ``M``; results keep input order."""
    specs = default_search_space() if specs is None else list(specs)
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_search_one, specs, [trials] * len(specs), [seed] * len(specs)))
    return [_search_one(s, trials, seed) for s in specs]


def search_report(results: Iterable[ModInverseSearchResult]) -> str:
    """One JSON record per line."""
    return "".join(json.dumps(r.to_record(), sort_keys=True) + "\n" for r in results)
