"""
Odd reciprocals modulo a power of two
=====================================

Every odd integer is a unit modulo 2**t, so 1/d has a unique residue.
"""

# %%
from nthilbert import mod_inverse, signed_reduce

# The reciprocals that appear in a 16-point transform, reduced mod 16.
for d in (1, 3, 5, 7, 9, 11, 13, 15):
    inv = mod_inverse(d, 16).value
    print(f"1/{d:<2} = {inv:2d} (mod 16)   check: {d}*{inv} = {d * inv} = {d * inv % 16} mod 16")

# %%
# Negative denominators first wrap into [0, 16). Note -15 and +1 collide.
for d in (-1, -3, -15):
    r = signed_reduce(d, 16).value
    print(f"{d:>3} -> {r:2d} -> inverse {mod_inverse(r, 16).value}")

# %%
# Even numbers have no inverse at all.
try:
    mod_inverse(6, 16)
except ArithmeticError as exc:
    print("error:", exc)
