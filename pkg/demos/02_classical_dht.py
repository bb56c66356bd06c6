"""
The classical discrete Hilbert transform
========================================

Exact pre-scale sums, the truncated matrix form, and how truncation
limits reconstruction.
"""

# %%
from nthilbert import Signal, dht_forward, dht_matrix, render, roundtrip_error

delta = Signal.delta(0)
g = dht_forward(delta, (-5, 5))
for k, v, fv in zip(g.indices, g.samples, render(g)):
    print(f"k={k:>2}  exact={str(v):>5}  scaled={fv:+.6f}")

# %%
# The 8x8 matrix: antisymmetric, Toeplitz, zero on even differences.
D = dht_matrix(8)
for i in range(8):
    print(" ".join(f"{str(x):>5}" for x in D.row(i)))

# %%
# Inverse of forward recovers the impulse only as the window grows.
for w in (1, 5, 25, 125, 625):
    err = roundtrip_error(delta, w)
    print(f"W={w:<4} recovered f(0)={err.recovered[0]:.6f}  max error={err.max_abs:.2e}")
