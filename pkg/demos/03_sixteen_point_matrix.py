"""
The 16-point number-theoretic matrix
====================================

Rebuild the published table from a closed-form rule, then look at its
structure and its exact inverse.
"""

# %%
from nthilbert import (
    PAPER16,
    build_nt_matrix,
    check_circulant,
    compare_printed_inverse,
    determinant,
    embedded_forward16,
    parity_blocks,
    rational_inverse,
)

A = build_nt_matrix(PAPER16)
print("matches published table:", A == embedded_forward16())
for i in range(16):
    print(" ".join(f"{x:2d}" for x in A.row(i)))

# %%
# Described as circulant, but row 2 is not row 0 shifted by two.
verdict = check_circulant(A)
print("circulant:", verdict.is_circulant, "first disagreement (row, col, expected, found):", verdict.witness)

# %%
# Even and odd samples never mix, and both halves see the same 8x8 block.
even, odd = parity_blocks(A)
print("even block == odd block:", even == odd)

# %%
# Exact inverse over the rationals.
Ai = rational_inverse(A)
print("det A =", determinant(A))
print("row 0 of inverse:", [f"{float(x):+.4f}" for x in Ai.row(0)])

# %%
# Against the published 3-decimal inverse (two of its rows are malformed).
report = compare_printed_inverse(Ai)
print(f"compared {report.total_compared}, matched {report.matches}, errata rows {report.erratum_rows}")
