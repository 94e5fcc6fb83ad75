"""Compositions of row/column masks: when they fail Leibniz, when they
do not, and how every mask rewrites as a sum of delta/d terms.

Run:  python demos/04_compositions_and_decompositions.py
"""

import random

from trideriv import (
    MAXPLUS,
    MaskDerivation,
    UTMatrix,
    d_m,
    decompose,
    delta_k,
    format_matrix,
    iter_positions,
    leibniz_check,
    pointwise_sum,
    random_matrix,
    strip_diagonal,
    theorem2_predicate,
)

print("=== composing delta_1 with d_1 at n=3 keeps only the corner (1,3) ===")
composed = delta_k(3, 1).compose(d_m(3, 1))
kept = {p for p in iter_positions(3)} - set(composed.positions)
print("surviving positions:", sorted(kept))

print()
print("=== and that map is NOT a derivation: a concrete witness ===")
ones = {p: 0 for p in iter_positions(3)}
a = UTMatrix.from_dict(3, MAXPLUS, {**ones, (1, 2): 5})
b = UTMatrix.from_dict(3, MAXPLUS, {**ones, (2, 3): 5})
w = leibniz_check(composed, a, b)
print(f"f(AB) at {w.position} is {w.lhs}, but f(A)B + Af(B) there is {w.rhs}")

print()
print("=== the composition is a derivation exactly when k + m >= n ===")
n = 4
for k in range(1, n + 1):
    row = []
    for m in range(1, n + 1):
        predicted = theorem2_predicate(n, k, m)
        observed = delta_k(n, k).compose(d_m(n, m)).is_derivation()
        assert predicted == observed
        row.append("yes" if observed else "no ")
    print(f"k={k}:  " + "  ".join(row))

print()
print("=== stripping the diagonal = summing all complementary products ===")
stripper = strip_diagonal(4)
combined = pointwise_sum(*[delta_k(4, k).compose(d_m(4, 4 - k)) for k in range(1, 4)])
x = random_matrix(4, MAXPLUS, random.Random(1))
print(format_matrix(stripper(x)), end="")
print("agree on a random matrix:", stripper(x) == combined(x))

print()
print("=== decomposing masks into delta/d terms ===")
for n, zero_set in [(3, {2}), (4, {1, 2, 4}), (5, {1, 3, 4}), (3, {1, 2, 3}), (3, set())]:
    mask = MaskDerivation(n, frozenset(zero_set))
    expr = decompose(mask)
    y = random_matrix(n, MAXPLUS, random.Random(n))
    assert expr(y) == mask(y)
    print(f"n={n} zero_set={sorted(zero_set) or '{}'}:  {expr}")
