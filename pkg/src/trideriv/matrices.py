"""Upper-triangular matrices over a semiring, with the Jordan product.

Storage is triangular: positions below the main diagonal do not exist,
so closure under sums and products is a structural fact rather than a
runtime check.  Positions are 1-based ``(i, j)`` with ``i <= j``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Mapping

from .semirings import Semiring, get_semiring


class TriangularityError(ValueError):
    """A position below the main diagonal was addressed."""


class MatrixMismatchError(ValueError):
    """Operands differ in dimension or in scalar semiring."""


def triangle_size(n: int) -> int:
    return n * (n + 1) // 2


def iter_positions(n: int) -> Iterator[tuple[int, int]]:
    """All stored positions in row-major order."""
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            yield (i, j)


def _offset(n: int, i: int, j: int) -> int:
    return (i - 1) * n - (i - 1) * (i - 2) // 2 + (j - i)


@dataclass(frozen=True)
class UTMatrix:
    """Immutable n x n upper-triangular matrix over ``semiring``.

    ``entries`` holds the upper triangle row-major:
    ``(1,1) .. (1,n), (2,2) .. (2,n), ..., (n,n)``.
    Equality is entrywise exact equality.
    """

    n: int
    semiring: Semiring
    entries: tuple

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("dimension must be >= 1")
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != triangle_size(self.n):
            raise ValueError(
                f"expected {triangle_size(self.n)} entries for n={self.n}, "
                f"got {len(self.entries)}"
            )

    # -- constructors

    @classmethod
    def zeros(cls, n: int, semiring: Semiring) -> "UTMatrix":
        return cls(n, semiring, (semiring.zero,) * triangle_size(n))

    @classmethod
    def identity(cls, n: int, semiring: Semiring) -> "UTMatrix":
        zero, one = semiring.zero, semiring.one
        return cls(
            n, semiring, tuple(one if i == j else zero for i, j in iter_positions(n))
        )

    @classmethod
    def from_dict(
        cls, n: int, semiring: Semiring, values: Mapping[tuple[int, int], Any]
    ) -> "UTMatrix":
        """Build from a sparse {(i, j): value} mapping; missing entries are zero."""
        cells = [semiring.zero] * triangle_size(n)
        for (i, j), value in values.items():
            _check_position(n, i, j)
            cells[_offset(n, i, j)] = semiring.check(value)
        return cls(n, semiring, tuple(cells))

    @classmethod
    def from_rows(cls, semiring: Semiring, rows: Iterable[Iterable[Any]]) -> "UTMatrix":
        """Build from upper rows: row i lists a_ii .. a_in (so lengths n, n-1, .., 1)."""
        rows = [list(row) for row in rows]
        n = len(rows)
        cells: list[Any] = []
        for i, row in enumerate(rows, start=1):
            if len(row) != n - i + 1:
                raise ValueError(f"row {i}: expected {n - i + 1} entries, got {len(row)}")
            cells.extend(semiring.check(v) for v in row)
        return cls(n, semiring, tuple(cells))

    # -- access

    def __getitem__(self, pos: tuple[int, int]) -> Any:
        i, j = pos
        _check_position(self.n, i, j)
        return self.entries[_offset(self.n, i, j)]

    def map_entries(self, fn: Callable[[Any], Any]) -> "UTMatrix":
        return UTMatrix(self.n, self.semiring, tuple(fn(v) for v in self.entries))

    # -- arithmetic

    def __add__(self, other: "UTMatrix") -> "UTMatrix":
        ensure_compatible(self, other)
        add = self.semiring.add
        return UTMatrix(
            self.n,
            self.semiring,
            tuple(add(a, b) for a, b in zip(self.entries, other.entries)),
        )

    def __mul__(self, other: "UTMatrix") -> "UTMatrix":
        ensure_compatible(self, other)
        n = self.n
        add, mul, zero = self.semiring.add, self.semiring.mul, self.semiring.zero
        a, b = self.entries, other.entries
        cells = []
        row_off = 0
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                acc = zero
                for k in range(i, j + 1):
                    acc = add(acc, mul(a[row_off + k - i], b[_offset(n, k, j)]))
                cells.append(acc)
            row_off += n - i + 1
        return UTMatrix(n, self.semiring, tuple(cells))


def ensure_compatible(a: UTMatrix, b: UTMatrix) -> None:
    if a.n != b.n:
        raise MatrixMismatchError(f"dimension mismatch: {a.n} vs {b.n}")
    if a.semiring is not b.semiring:
        raise MatrixMismatchError(
            f"semiring mismatch: {a.semiring.name} vs {b.semiring.name}"
        )


def _check_position(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"position ({i}, {j}) outside 1..{n}")
    if i > j:
        raise TriangularityError(f"position ({i}, {j}) is below the diagonal")


def jordan(a: UTMatrix, b: UTMatrix) -> UTMatrix:
    """Jordan product A∘B = AB + BA (idempotent addition, no halving)."""
    return a * b + b * a


def matrix_unit(n: int, i: int, j: int, semiring: Semiring) -> UTMatrix:
    """E_ij: the matrix with the multiplicative one at (i, j) and zero elsewhere."""
    _check_position(n, i, j)
    cells = [semiring.zero] * triangle_size(n)
    cells[_offset(n, i, j)] = semiring.one
    return UTMatrix(n, semiring, tuple(cells))


def diag_head(n: int, k: int, semiring: Semiring) -> UTMatrix:
    """Diagonal (0,1)-matrix with ones at positions 1..k."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    return UTMatrix.from_dict(n, semiring, {(i, i): semiring.one for i in range(1, k + 1)})


def diag_tail(n: int, m: int, semiring: Semiring) -> UTMatrix:
    """Diagonal (0,1)-matrix with ones at positions n-m+1..n."""
    if not 1 <= m <= n:
        raise ValueError(f"m={m} outside 1..{n}")
    return UTMatrix.from_dict(
        n, semiring, {(i, i): semiring.one for i in range(n - m + 1, n + 1)}
    )


def random_matrix(n: int, semiring: Semiring, rng: random.Random) -> UTMatrix:
    """Matrix with every stored entry drawn from the semiring's sampler."""
    sample = semiring.sample
    return UTMatrix(n, semiring, tuple(sample(rng) for _ in range(triangle_size(n))))


# --- text format ---------------------------------------------------------------
# Line 1:      utm n=<n> semiring=<name>
# Lines 2..n+1: row i = (i-1) '.' placeholders, then a_ii .. a_in.

def format_matrix(matrix: UTMatrix) -> str:
    fmt = matrix.semiring.format_element
    n = matrix.n
    lines = [f"utm n={n} semiring={matrix.semiring.name}"]
    for i in range(1, n + 1):
        tokens = ["."] * (i - 1)
        tokens.extend(fmt(matrix[i, j]) for j in range(i, n + 1))
        lines.append(" ".join(tokens))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> UTMatrix:
    """Strict inverse of :func:`format_matrix`."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if (
        len(head) != 3
        or head[0] != "utm"
        or not head[1].startswith("n=")
        or not head[2].startswith("semiring=")
    ):
        raise ValueError(f"bad header {lines[0]!r}")
    try:
        n = int(head[1][2:])
    except ValueError:
        raise ValueError(f"bad dimension {head[1]!r}") from None
    if n < 1:
        raise ValueError(f"bad dimension n={n}")
    semiring = get_semiring(head[2][len("semiring="):])
    if len(lines) - 1 != n:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    cells: list[Any] = []
    for i, line in enumerate(lines[1:], start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise ValueError(f"row {i}: expected {n} tokens, found {len(tokens)}")
        for tok in tokens[: i - 1]:
            if tok != ".":
                raise ValueError(f"row {i}: sub-diagonal token {tok!r} must be '.'")
        cells.extend(semiring.parse_element(tok) for tok in tokens[i - 1 :])
    return UTMatrix(n, semiring, tuple(cells))
