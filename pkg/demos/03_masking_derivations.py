"""Mask derivations: zero a family of dense diagonal blocks, get a derivation.

Run:  python demos/03_masking_derivations.py
"""

import random

from trideriv import (
    MAXPLUS,
    MaskDerivation,
    UTMatrix,
    d_m,
    delta_k,
    enumerate_family_derivations,
    enumerate_interval_derivations,
    format_matrix,
    leibniz_check,
    linearity_check,
    random_matrix,
    triangle_size,
)

a = UTMatrix(4, MAXPLUS, tuple(range(1, triangle_size(4) + 1)))
print("=== a 4x4 max-plus matrix with distinct entries ===")
print(format_matrix(a), end="")

print()
print("=== zero_set {2,3} zeroes the dense block spanned by rows/cols 2..3 ===")
mask = MaskDerivation(4, {2, 3})
print(format_matrix(mask(a)), end="")
print("blocks:", mask.blocks)

print()
print("=== the row and column chains are special cases ===")
print("delta_2 keeps the first 2 rows:")
print(format_matrix(delta_k(4, 2)(a)), end="")
print("d_1 keeps the last column:")
print(format_matrix(d_m(4, 1)(a)), end="")

print()
print("=== every such mask satisfies the Leibniz rule ===")
rng = random.Random(0)
checked = 0
for mask in enumerate_family_derivations(4):
    for _ in range(20):
        x = random_matrix(4, MAXPLUS, rng)
        y = random_matrix(4, MAXPLUS, rng)
        assert leibniz_check(mask, x, y) is None
        assert linearity_check(mask, x, y) is None
        checked += 1
print(f"checked {checked} (mask, pair) combinations: all pass")

print()
print("=== counting ===")
for n in (3, 5, 8):
    singles = len(enumerate_interval_derivations(n))
    families = len(enumerate_family_derivations(n))
    print(f"n={n}: single-block masks (plus identity) {singles} = n(n+1)/2;"
          f" all subsets {families} = 2^n")

print()
print("=== sums and the natural order ===")
d1 = delta_k(4, 1)
d2_plus = delta_k(4, 2) + d_m(4, 1)
print("delta_1 + delta_2 == delta_2:", delta_k(4, 1) + delta_k(4, 2) == delta_k(4, 2))
print("delta_1 <= delta_2 + d_1:    ", d1 <= d2_plus)
