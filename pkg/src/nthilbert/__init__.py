"""Discrete Hilbert transforms, classical and number-theoretic (mod 2^t)."""

__version__ = "0.1.0"

from .modmath import (
    DomainError,
    NotAUnit,
    PowerOfTwoModulus,
    Residue,
    egcd,
    mod_inverse,
    signed_reduce,
)
from .exactlin import (
    BigFraction,
    IntMatrix,
    NonInvertible,
    RationalMatrix,
    Singular,
    det_mod2,
    determinant,
    determinant_bareiss,
    mat_vec,
    matrix_from_csv,
    matrix_to_csv,
    mod_matrix_inverse,
    rational_inverse,
)
from .classic_dht import (
    SCALE,
    DhtWindowSpec,
    Signal,
    dht_forward,
    dht_inverse,
    dht_matrix,
    render,
    roundtrip_error,
)
from .ntdht import (
    PAPER16,
    CirculantVerdict,
    ComparisonReport,
    NtMatrixSpec,
    PrintedTables,
    Variant,
    build_nt_matrix,
    check_circulant,
    compare_printed_inverse,
    embedded_forward16,
    embedded_inverse16_printed,
    paper_denominator,
    parity_blocks,
)
from .pipeline import (
    DetParity,
    ModInverseSearchResult,
    ReductionMode,
    TransformRun,
    nt_forward,
    nt_inverse_exact,
    random_roundtrip_suite,
    roundtrip,
    run_transform,
    search_mod_inverse,
)
from .analysis import (
    FigureId,
    FigurePreset,
    PeakReport,
    count_transitions,
    emit_csv,
    emit_svg,
    find_peaks,
    preset,
)
