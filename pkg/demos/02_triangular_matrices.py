"""Upper-triangular matrices: units, projectors, and the Jordan product.

Run:  python demos/02_triangular_matrices.py
"""

from trideriv import (
    BOOLEAN,
    MAXPLUS,
    UTMatrix,
    diag_head,
    diag_tail,
    format_matrix,
    jordan,
    matrix_unit,
    parse_matrix,
)

print("=== matrix units multiply by index matching ===")
e12 = matrix_unit(3, 1, 2, BOOLEAN)
e23 = matrix_unit(3, 2, 3, BOOLEAN)
e13 = matrix_unit(3, 1, 3, BOOLEAN)
print("E12 * E23 == E13:", e12 * e23 == e13)
print("E12 * E13 == 0:  ", e12 * e13 == UTMatrix.zeros(3, BOOLEAN))

print()
print("=== a max-plus matrix and its text form ===")
a = UTMatrix.from_rows(MAXPLUS, [[1, 2, 3], [4, 5], [6]])
print(format_matrix(a), end="")
print("round-trips:", parse_matrix(format_matrix(a)) == a)

print()
print("=== the diagonal (0,1) projectors ===")
head = diag_head(3, 1, MAXPLUS)   # ones at 1..1
tail = diag_tail(3, 1, MAXPLUS)   # ones at 3..3
print("head_1, as a matrix:")
print(format_matrix(head), end="")

print()
print("=== Jordan product A o D = AD + DA ===")
print("A o head_1 keeps the first row:")
print(format_matrix(jordan(a, head)), end="")
print("A o tail_1 keeps the last column:")
print(format_matrix(jordan(a, tail)), end="")

print()
print("=== with idempotent addition the Jordan product collapses one-sidedly ===")
print("A o head_1 == head_1 * A:", jordan(a, head) == head * a)
print("A o tail_1 == A * tail_1:", jordan(a, tail) == a * tail)
print("absorption: head A head == A head:", head * a * head == a * head)
