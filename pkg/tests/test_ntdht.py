import itertools
import json
from fractions import Fraction

import pytest

from nthilbert.exactlin import IntMatrix, RationalMatrix, rational_inverse
from nthilbert.modmath import DomainError, PowerOfTwoModulus, signed_reduce
from nthilbert.ntdht import (
    PAPER16,
    NtMatrixSpec,
    Variant,
    build_nt_matrix,
    check_circulant,
    compare_printed_inverse,
    embedded_forward16,
    embedded_inverse16_printed,
    paper_denominator,
    parity_blocks,
)


def test_spec_validation_and_parse():
    with pytest.raises(DomainError):
        NtMatrixSpec(3, 16)
    with pytest.raises(DomainError):
        NtMatrixSpec(4, 12)
    s = NtMatrixSpec.parse("16,16,paper")
    assert s == PAPER16 and str(s) == "16,16,paper"
    assert NtMatrixSpec.parse("8, 4, odd-diff").variant is Variant.ODD_DIFFERENCE
    with pytest.raises(DomainError):
        NtMatrixSpec.parse("16,16")


def test_paper_denominator_examples():
    assert paper_denominator(0, 0) == 1
    assert paper_denominator(2, 0) == -3
    assert paper_denominator(0, 1) is None
    assert paper_denominator(0, 14) == 15
    assert paper_denominator(14, 0) == -15


def test_forward16_embedded_constants():
    A = embedded_forward16()
    assert [x for x in A.row(0) if x] == [1, 11, 13, 7, 9, 3, 5, 15]
    assert A[15, 15] == 1
    assert len(A.entries) == 256
    assert A.entries.count(0) == 128
    assert all(x % 2 == 1 and 1 <= x <= 15 for x in A.entries if x)


def test_rule_verified_against_every_printed_entry():
    # Independent of build_nt_matrix: check e * d == 1 (mod 16) straight off the table.
    A = embedded_forward16()
    for k, n in itertools.product(range(16), repeat=2):
        d = paper_denominator(k, n)
        e = A[k, n]
        if d is None:
            assert e == 0, (k, n)
        else:
            assert e * d % 16 == 1, (k, n, e, d)


def test_build_reproduces_printed_table():
    built = build_nt_matrix(PAPER16)
    printed = embedded_forward16()
    mismatches = [i for i, (a, b) in enumerate(zip(built.entries, printed.entries)) if a != b]
    assert mismatches == []


def test_build_small_and_odd_difference():
    assert build_nt_matrix(NtMatrixSpec(2, 2)).entries == IntMatrix.identity(2).entries
    B = build_nt_matrix(NtMatrixSpec(16, 16, Variant.ODD_DIFFERENCE))
    assert B[0, 1] == 15
    assert B[1, 0] == 1


@pytest.mark.parametrize("n", [2, 4, 8, 16, 32])
@pytest.mark.parametrize("t", [1, 3, 4, 8])
def test_build_invariants(n, t):
    m = PowerOfTwoModulus(t)
    P = build_nt_matrix(NtMatrixSpec(n, m, Variant.PAPER_RULE))
    O = build_nt_matrix(NtMatrixSpec(n, m, Variant.ODD_DIFFERENCE))
    for k, j in itertools.product(range(n), repeat=2):
        assert (P[k, j] == 0) == ((j - k) % 2 == 1)
        assert (O[k, j] == 0) == ((k - j) % 2 == 0)
        if P[k, j]:
            assert P[k, j] * signed_reduce(paper_denominator(k, j), m).value % m.value == 1
    even, odd = parity_blocks(P)
    assert even == odd


def test_printed_inverse_rows():
    tables = embedded_inverse16_printed()
    rows = tables.inverse16_printed
    assert len(rows) == 16
    assert tables.erratum_rows == [14, 15]
    assert all(len(rows[i].text.split()) == 17 for i in (14, 15))
    assert all(r.well_formed and len(r.values) == 16 for r in rows[:14])
    assert rows[0].values[0] == -0.071


def test_check_circulant():
    assert check_circulant(IntMatrix.identity(4)).is_circulant
    first = [3, 1, 4, 1, 5]
    C = IntMatrix.from_rows([first[-i:] + first[:-i] if i else first for i in range(5)])
    assert check_circulant(C).is_circulant
    verdict = check_circulant(embedded_forward16())
    assert not verdict.is_circulant
    assert verdict.witness == (2, 0, 15, 5)
    with pytest.raises(DomainError):
        check_circulant(IntMatrix.from_rows([[1, 2]]))


def test_parity_blocks():
    even, odd = parity_blocks(embedded_forward16())
    assert even == odd and even.shape == (8, 8)
    e, o = parity_blocks(IntMatrix.identity(4))
    assert e.entries == o.entries == IntMatrix.identity(2).entries
    with pytest.raises(DomainError):
        parity_blocks(build_nt_matrix(NtMatrixSpec(16, 16, Variant.ODD_DIFFERENCE)))


def test_exact_inverse_is_not_a_multiple_of_forward():
    A = embedded_forward16()
    B = rational_inverse(A)
    pairs = [(i, j) for i, j in itertools.product(range(16), repeat=2) if A[i, j] and B[i, j]]
    (k1, n1) = pairs[0]
    witness = next(
        (p for p in pairs[1:] if A[k1, n1] * B[p] != A[p] * B[k1, n1]), None)
    assert witness is not None


def test_compare_printed_report():
    exact = rational_inverse(embedded_forward16())
    report = compare_printed_inverse(exact)
    assert report.erratum_rows == [14, 15]
    assert report.total_compared == 16 * 14
    assert report.matches + len(report.mismatches) == report.total_compared
    # Every well-formed printed entry agrees with the exact inverse to 3 decimals.
    assert report.matches == 224
    data = json.loads(report.to_text())
    assert set(data) >= {"total_compared", "matches", "mismatches", "erratum_rows"}


def test_compare_printed_never_raises_on_mismatch():
    wrong = RationalMatrix(16, 16, tuple(Fraction(1) for _ in range(256)))
    report = compare_printed_inverse(wrong)
    assert report.matches < report.total_compared == 224
    assert report.mismatches[0].keys() == {"row", "col", "printed", "exact"}


def test_compare_printed_dimension_check():
    with pytest.raises(DomainError):
        compare_printed_inverse(RationalMatrix.identity(4))
