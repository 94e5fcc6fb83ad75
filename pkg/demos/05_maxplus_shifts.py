"""Scalar shift derivations of max-plus and their entrywise matrix lift.

Run:  python demos/05_maxplus_shifts.py
"""

import random

from trideriv import (
    MAXPLUS,
    MINUS_INF,
    MaskDerivation,
    ShiftDerivation,
    UTMatrix,
    format_matrix,
    leibniz_check,
    pointwise_sum,
    random_matrix,
)

print("=== shift by x: a -> a + x ===")
s3 = ShiftDerivation(3)
print("shift_3(5) =", s3(5))
print("shift_3(-inf) =", s3(MINUS_INF))
print("shift_0 is the identity:", ShiftDerivation(0).is_identity)

print()
print("=== scalar Leibniz rule over (R u {-inf}, max, +) ===")
rng = random.Random(4)
x, a, b = (MAXPLUS.sample(rng) for _ in range(3))
shift = ShiftDerivation(x)
lhs = shift(MAXPLUS.mul(a, b))
rhs = MAXPLUS.add(MAXPLUS.mul(shift(a), b), MAXPLUS.mul(a, shift(b)))
print(f"x={x}, a={a}, b={b}:  shift(a*b)={lhs} == shift(a)*b (+) a*shift(b)={rhs}")

print()
print("=== finite shifts form an Abelian group under composition ===")
print("shift_3 then shift_4  ==  shift_7:", s3.compose(ShiftDerivation(4)) == ShiftDerivation(7))
print("shift_3 then shift_-3 is the identity:", s3.compose(s3.inverse()).is_identity)
print("but composition is NOT idempotent away from 0: shift_3 twice =",
      s3.compose(s3))
print("sums ARE idempotent: shift_3 + shift_3 == shift_3:", s3 + s3 == s3)
print("and pointwise sums take the larger offset: shift_3 + shift_5 =",
      s3 + ShiftDerivation(5))

print()
print("=== the hereditary lift shifts every stored entry ===")
m = UTMatrix.from_rows(MAXPLUS, [[1, MINUS_INF], [3]])
lifted = ShiftDerivation(2).hereditary()
print(format_matrix(m), end="")
print("  -- shift every entry by 2 -->")
print(format_matrix(lifted(m)), end="")

print()
print("=== lifted shifts satisfy Leibniz on matrices, and mix with masks ===")
ok = 0
for _ in range(50):
    a_m = random_matrix(3, MAXPLUS, rng)
    b_m = random_matrix(3, MAXPLUS, rng)
    assert leibniz_check(lifted, a_m, b_m) is None
    mixed = pointwise_sum(lifted, MaskDerivation(3, {2}))
    assert leibniz_check(mixed, a_m, b_m) is None
    ok += 1
print(f"{ok} random pairs: hereditary shift and (shift + mask) both pass")
