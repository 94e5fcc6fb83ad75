"""Brute-force ground truth over the boolean semiring at tiny dimensions.

The boolean semiring embeds in every unital additively idempotent
semiring (its 0 and 1 satisfy 1 + 1 = 1 there too), so a boolean Leibniz
counterexample kills a mask map over every carrier, while the local
characterization covers the sufficiency side.  The full sweep classifies
all 2^(n(n+1)/2) zero patterns by testing the Leibniz rule on all matrix
pairs.

Internally matrices are indexed by their entry bitmask (bit t of the
index is the t-th row-major entry), so masking is ``index & keep`` and
matrix addition is bitwise-or of indices; the product table is computed
once with the real matrix multiplication.  The encoding lemmas are
re-checked exhaustively in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .derivations import ZeroPattern, format_pattern, leibniz_check
from .matrices import UTMatrix, iter_positions, triangle_size
from .semirings import BOOLEAN

ENUMERATION_LIMIT = 4
CLASSIFY_LIMIT = 3


class CapacityError(ValueError):
    """Requested dimension exceeds the exhaustive-search budget."""


def enumerate_matrices(n: int) -> Iterator[UTMatrix]:
    """Every boolean upper-triangular matrix exactly once, in bitmask order."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if n > ENUMERATION_LIMIT:
        raise CapacityError(
            f"n={n} too large to enumerate (limit {ENUMERATION_LIMIT})"
        )
    size = triangle_size(n)
    for bits in range(1 << size):
        yield UTMatrix(n, BOOLEAN, tuple(bits >> t & 1 for t in range(size)))


def matrix_bits(matrix: UTMatrix) -> int:
    """The bitmask index of a boolean matrix in the enumeration order."""
    return sum(1 << t for t, v in enumerate(matrix.entries) if v)


def exhaustive_leibniz_witness(
    f: Callable[[UTMatrix], UTMatrix], n: int
) -> tuple[UTMatrix, UTMatrix, object] | None:
    """First (A, B, witness) violating the Leibniz rule over all boolean pairs."""
    mats = list(enumerate_matrices(n))
    for a in mats:
        for b in mats:
            witness = leibniz_check(f, a, b)
            if witness is not None:
                return (a, b, witness)
    return None


@dataclass(frozen=True)
class OracleReport:
    """Classification of every zero pattern at dimension n."""

    n: int
    total_patterns: int
    derivation_patterns: tuple[ZeroPattern, ...]
    interval_form_count: int
    predicate_mismatches: tuple[ZeroPattern, ...]

    @property
    def derivation_count(self) -> int:
        return len(self.derivation_patterns)

    @property
    def other_count(self) -> int:
        return self.derivation_count - self.interval_form_count

    @property
    def counts(self) -> tuple[int, int, int]:
        return (self.derivation_count, self.interval_form_count, self.other_count)

    @property
    def predicate_agrees(self) -> bool:
        return not self.predicate_mismatches


def brute_force_classify(n: int) -> OracleReport:
    """Sweep every zero pattern against every boolean matrix pair.

    A pattern is recorded as a derivation iff no pair witnesses a Leibniz
    failure; each verdict is also cross-checked against the local
    characterization, and disagreements (there should be none) are
    returned rather than raised.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if n > CLASSIFY_LIMIT:
        raise CapacityError(f"n={n} too large to classify (limit {CLASSIFY_LIMIT})")
    size = triangle_size(n)
    positions = list(iter_positions(n))
    mats = list(enumerate_matrices(n))
    count = 1 << size
    product = [[matrix_bits(a * b) for b in mats] for a in mats]

    derivations = []
    mismatches = []
    indices = range(count)
    for pattern_bits in range(count):
        keep = ~pattern_bits & (count - 1)
        holds = all(
            product[a & keep][b] | product[a][b & keep] == product[a][b] & keep
            for a in indices
            for b in indices
        )
        pattern = ZeroPattern(
            n,
            frozenset(p for t, p in enumerate(positions) if pattern_bits >> t & 1),
        )
        if holds:
            derivations.append(pattern)
        if holds != pattern.is_derivation():
            mismatches.append(pattern)
    interval = sum(1 for p in derivations if p.interval_form() is not None)
    return OracleReport(n, count, tuple(derivations), interval, tuple(mismatches))


def format_report(report: OracleReport) -> str:
    """Line-oriented rendering: one derivation pattern per line, then counts."""
    lines = [f"derivation={format_pattern(p)}" for p in report.derivation_patterns]
    lines.append(f"total={report.derivation_count}")
    lines.append(f"interval_form={report.interval_form_count}")
    lines.append(f"other={report.other_count}")
    return "\n".join(lines) + "\n"
