"""Mask derivations: application, operator algebra, checks, enumeration,
and the rewriting into delta/d terms."""

import random

import pytest

from trideriv import (
    BOOLEAN,
    FUZZY,
    MAXPLUS,
    MINPLUS,
    MINUS_INF,
    DecompositionExpr,
    DecompositionTerm,
    MaskDerivation,
    MatrixMismatchError,
    UTMatrix,
    ZeroPattern,
    d_m,
    decompose,
    delta_k,
    diag_head,
    diag_tail,
    enumerate_family_derivations,
    enumerate_interval_derivations,
    format_pattern,
    format_zero_set,
    jordan,
    leibniz_check,
    linearity_check,
    parse_pattern,
    parse_zero_set,
    pointwise_sum,
    random_matrix,
    strip_diagonal,
    theorem2_predicate,
    triangle_size,
)

INSTANCES = [BOOLEAN, MAXPLUS, MINPLUS, FUZZY]


def distinct_maxplus(n):
    """A matrix whose stored entries are pairwise distinct (1, 2, 3, ...)."""
    return UTMatrix(n, MAXPLUS, tuple(range(1, triangle_size(n) + 1)))


# --- construction and application ------------------------------------------------

def test_delta_k_zero_sets():
    assert delta_k(3, 2).zero_set == frozenset({3})
    assert delta_k(3, 3).zero_set == frozenset()          # identity
    assert delta_k(3, 0).zero_set == frozenset({1, 2, 3})  # constant-zero map
    with pytest.raises(ValueError):
        delta_k(3, 4)
    with pytest.raises(ValueError):
        delta_k(3, -1)


def test_d_m_zero_sets():
    assert d_m(3, 1).zero_set == frozenset({1, 2})
    assert d_m(3, 3).zero_set == frozenset()
    assert d_m(3, 0).zero_set == frozenset({1, 2, 3})
    with pytest.raises(ValueError):
        d_m(3, 5)


def test_delta_k_keeps_first_rows():
    a = distinct_maxplus(3)
    result = delta_k(3, 2)(a)
    for i, j in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)]:
        assert result[i, j] == a[i, j]
    assert result[3, 3] == MINUS_INF


def test_d_m_keeps_last_columns():
    a = distinct_maxplus(3)
    result = d_m(3, 1)(a)
    for i, j in [(1, 3), (2, 3), (3, 3)]:
        assert result[i, j] == a[i, j]
    for i, j in [(1, 1), (1, 2), (2, 2)]:
        assert result[i, j] == MINUS_INF


def test_apply_single_diagonal_zero():
    a = distinct_maxplus(3)
    result = MaskDerivation(3, {2})(a)
    assert result[2, 2] == MINUS_INF
    changed = [p for p in [(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)] if result[p] != a[p]]
    assert changed == []


def test_apply_identity_and_zero_map():
    a = distinct_maxplus(3)
    assert MaskDerivation(3, frozenset())(a) == a
    assert MaskDerivation(3, {1, 2, 3})(a) == UTMatrix.zeros(3, MAXPLUS)


def test_apply_block_rule():
    # Z = {2, 3} zeroes the dense block on rows/columns 2..3 and nothing else.
    a = distinct_maxplus(4)
    result = MaskDerivation(4, {2, 3})(a)
    expected_zero = {(2, 2), (2, 3), (3, 3)}
    for i in range(1, 5):
        for j in range(i, 5):
            if (i, j) in expected_zero:
                assert result[i, j] == MINUS_INF
            else:
                assert result[i, j] == a[i, j]


def test_mask_dimension_mismatch():
    with pytest.raises(MatrixMismatchError):
        MaskDerivation(3, {1})(UTMatrix.identity(2, BOOLEAN))


def test_mask_validates_indices():
    with pytest.raises(ValueError):
        MaskDerivation(3, {0})
    with pytest.raises(ValueError):
        MaskDerivation(3, {4})


def test_blocks_are_maximal_runs():
    assert MaskDerivation(6, {1, 2, 4, 6}).blocks == ((1, 2), (4, 4), (6, 6))
    assert MaskDerivation(3, frozenset()).blocks == ()


# --- agreement with the Jordan-product definition ---------------------------------

@pytest.mark.parametrize("semiring", INSTANCES, ids=lambda s: s.name)
def test_delta_agrees_with_jordan_and_projection(semiring):
    rng = random.Random(29)
    for n in (1, 3, 5):
        for _ in range(10):
            a = random_matrix(n, semiring, rng)
            for k in range(1, n + 1):
                head = diag_head(n, k, semiring)
                assert delta_k(n, k)(a) == jordan(a, head) == head * a
            for m in range(1, n + 1):
                tail = diag_tail(n, m, semiring)
                assert d_m(n, m)(a) == jordan(a, tail) == a * tail


# --- operator sum, composition, order ----------------------------------------------

def test_sum_intersects_zero_sets():
    s = MaskDerivation(4, {2, 3}) + MaskDerivation(4, {3, 4})
    assert s.zero_set == frozenset({3})


def test_sum_is_pointwise_sum():
    rng = random.Random(31)
    for semiring in INSTANCES:
        a = random_matrix(4, semiring, rng)
        d1 = MaskDerivation(4, {1, 2})
        d2 = MaskDerivation(4, {2, 4})
        assert (d1 + d2)(a) == d1(a) + d2(a)


def test_delta_chain_sum_and_composition():
    n = 5
    for k in range(n + 1):
        for l in range(n + 1):
            assert delta_k(n, k) + delta_k(n, l) == delta_k(n, max(k, l))
            assert d_m(n, k) + d_m(n, l) == d_m(n, max(k, l))
            composed = delta_k(n, k).compose(delta_k(n, l))
            assert composed == delta_k(n, min(k, l)).pattern
            assert d_m(n, k).compose(d_m(n, l)) == d_m(n, min(k, l)).pattern


def test_compose_example_all_but_corner():
    composed = delta_k(3, 1).compose(d_m(3, 1))
    everything = {(i, j) for i in range(1, 4) for j in range(i, 4)}
    assert composed.positions == frozenset(everything - {(1, 3)})


def test_compose_complementary_keeps_top_right_block():
    composed = delta_k(4, 2).compose(d_m(4, 2))
    kept = {(i, j) for i in range(1, 5) for j in range(i, 5)} - set(composed.positions)
    assert kept == {(1, 3), (1, 4), (2, 3), (2, 4)}


def test_compose_agreement_with_sequential_application():
    rng = random.Random(37)
    for semiring in INSTANCES:
        a = random_matrix(4, semiring, rng)
        d1 = MaskDerivation(4, {1, 2})
        d2 = MaskDerivation(4, {2, 3, 4})
        assert d1.compose(d2)(a) == d2(d1(a))


def test_order_examples():
    assert delta_k(4, 1) <= delta_k(4, 2) + d_m(4, 1)
    assert d_m(4, 1) <= delta_k(4, 2) + d_m(4, 1)
    assert delta_k(5, 1) + d_m(5, 1) <= delta_k(5, 2) + d_m(5, 2)
    assert not delta_k(4, 2) <= delta_k(4, 1)


def test_order_matches_natural_order_of_sum():
    for z1, z2 in [({1, 2}, {2}), ({2}, {1, 2}), ({1}, {3}), (set(), {1})]:
        d1, d2 = MaskDerivation(3, z1), MaskDerivation(3, z2)
        assert (d1 <= d2) == (d1 + d2 == d2)


def test_delta_chain_extremes():
    n = 4
    chain = [delta_k(n, k) for k in range(1, n + 1)]
    assert all(chain[0] <= d for d in chain)       # delta_1 is least
    assert all(d <= chain[-1] for d in chain)      # delta_n (identity) is greatest


# --- derivation predicate -----------------------------------------------------------

def test_interval_masks_are_derivation_patterns():
    for n in range(1, 6):
        for mask in enumerate_family_derivations(n):
            assert mask.pattern.is_derivation()


def test_lone_offdiagonal_zero_is_not_a_derivation():
    assert not ZeroPattern(2, {(1, 2)}).is_derivation()


def test_pattern_application_extremes():
    a = distinct_maxplus(3)
    assert ZeroPattern(3, frozenset())(a) == a
    everything = frozenset((i, j) for i in range(1, 4) for j in range(i, 4))
    assert ZeroPattern(3, everything)(a) == UTMatrix.zeros(3, MAXPLUS)
    stripped = strip_diagonal(3)(a)
    assert all(stripped[i, i] == MINUS_INF for i in range(1, 4))
    assert stripped[1, 2] == a[1, 2]


def test_strip_diagonal_is_a_derivation():
    assert strip_diagonal(2).positions == frozenset({(1, 1), (2, 2)})
    for n in range(1, 7):
        assert strip_diagonal(n).is_derivation()


def test_theorem2_predicate_examples():
    assert theorem2_predicate(3, 1, 1) is False
    assert theorem2_predicate(3, 1, 2) is True
    assert theorem2_predicate(5, 5, 5) is True
    with pytest.raises(ValueError):
        theorem2_predicate(3, 0, 1)


def test_theorem2_predicate_matches_pattern_condition():
    for n in range(1, 13):
        for k in range(1, n + 1):
            for m in range(1, n + 1):
                pattern = delta_k(n, k).compose(d_m(n, m))
                assert pattern.is_derivation() == theorem2_predicate(n, k, m)


# --- Leibniz and linearity checks ---------------------------------------------------

@pytest.mark.parametrize("semiring", INSTANCES, ids=lambda s: s.name)
def test_mask_derivations_satisfy_leibniz(semiring):
    rng = random.Random(41)
    for n in (1, 2, 4):
        for mask in enumerate_family_derivations(n):
            for _ in range(5):
                a = random_matrix(n, semiring, rng)
                b = random_matrix(n, semiring, rng)
                assert leibniz_check(mask, a, b) is None
                assert linearity_check(mask, a, b) is None


def test_leibniz_witness_for_composed_corner_map():
    ones = {p: 0 for p in [(i, j) for i in range(1, 4) for j in range(i, 4)]}
    a = UTMatrix.from_dict(3, MAXPLUS, {**ones, (1, 2): 5})
    b = UTMatrix.from_dict(3, MAXPLUS, {**ones, (2, 3): 5})
    witness = leibniz_check(delta_k(3, 1).compose(d_m(3, 1)), a, b)
    assert witness is not None
    assert witness.position == (1, 3)
    assert witness.lhs == 10
    assert witness.rhs == 0


def test_identity_mask_trivially_passes():
    rng = random.Random(43)
    a = random_matrix(3, MAXPLUS, rng)
    b = random_matrix(3, MAXPLUS, rng)
    assert leibniz_check(MaskDerivation(3, frozenset()), a, b) is None


def test_linearity_of_masks_and_patterns():
    rng = random.Random(47)
    a = random_matrix(4, MAXPLUS, rng)
    b = random_matrix(4, MAXPLUS, rng)
    assert linearity_check(MaskDerivation(4, {1, 4}), a, b) is None
    assert linearity_check(MaskDerivation(4, {1, 2, 3, 4}), a, b) is None
    assert linearity_check(strip_diagonal(4), a, b) is None


# --- enumeration ---------------------------------------------------------------------

@pytest.mark.parametrize("n,count", [(1, 1), (2, 3), (3, 6), (4, 10)])
def test_interval_enumeration_count(n, count):
    masks = enumerate_interval_derivations(n)
    assert len(masks) == count == n * (n + 1) // 2
    assert len(set(masks)) == count


def test_interval_enumeration_members():
    zero_sets = {m.zero_set for m in enumerate_interval_derivations(2)}
    assert zero_sets == {frozenset(), frozenset({1}), frozenset({2})}
    # the full-span zero map is excluded here but present among the families
    assert frozenset({1, 2}) in {m.zero_set for m in enumerate_family_derivations(2)}


def test_interval_enumeration_zero_sets_are_intervals():
    for mask in enumerate_interval_derivations(6):
        assert len(mask.blocks) <= 1


@pytest.mark.parametrize("n,count", [(1, 2), (2, 4), (3, 8)])
def test_family_enumeration_count(n, count):
    masks = enumerate_family_derivations(n)
    assert len(masks) == count == 2 ** n
    assert len({m.zero_set for m in masks}) == count


def test_family_enumeration_small_members():
    assert [m.zero_set for m in enumerate_family_derivations(2)] == [
        frozenset(),
        frozenset({1}),
        frozenset({2}),
        frozenset({1, 2}),
    ]


# --- strip diagonal as the sum of complementary products ----------------------------

def test_strip_diagonal_equals_sum_of_complementary_products():
    for n in range(2, 9):
        patterns = [delta_k(n, k).compose(d_m(n, n - k)) for k in range(1, n)]
        total = patterns[0]
        for p in patterns[1:]:
            total = total + p
        assert total == strip_diagonal(n)


def test_strip_diagonal_pointwise_on_matrices():
    rng = random.Random(53)
    for n in (2, 4, 6):
        maps = [delta_k(n, k).compose(d_m(n, n - k)) for k in range(1, n)]
        combined = pointwise_sum(*maps)
        for _ in range(20):
            a = random_matrix(n, MAXPLUS, rng)
            assert combined(a) == strip_diagonal(n)(a)


def test_strip_diagonal_kills_diagonal_matrices():
    a = UTMatrix.from_dict(2, MAXPLUS, {(1, 1): 7, (2, 2): 9})
    assert strip_diagonal(2)(a) == UTMatrix.zeros(2, MAXPLUS)


# --- decomposition -------------------------------------------------------------------

def test_decompose_gap_block():
    assert decompose(MaskDerivation(3, {2})) == DecompositionExpr(
        3, (DecompositionTerm(k=1), DecompositionTerm(m=1))
    )


def test_decompose_two_blocks():
    assert decompose(MaskDerivation(4, {1, 2, 4})) == DecompositionExpr(
        4, (DecompositionTerm(k=3, m=2),)
    )


def test_decompose_full_cover_is_zero_map_term():
    assert decompose(MaskDerivation(3, {1, 2, 3})) == DecompositionExpr(
        3, (DecompositionTerm(k=3, m=0),)
    )


def test_decompose_identity():
    expr = decompose(MaskDerivation(3, frozenset()))
    assert expr == DecompositionExpr(3, (DecompositionTerm(k=3),))
    a = distinct_maxplus(3)
    assert expr(a) == a


def test_decompose_rendering():
    assert str(decompose(MaskDerivation(3, {2}))) == "δ1 + d1"
    assert decompose(MaskDerivation(3, {2})).ascii() == "delta1 + d1"
    assert decompose(MaskDerivation(4, {1, 2, 4})).ascii() == "delta3*d2"


def test_decompose_exact_on_indicator_matrices():
    # Mask maps act entrywise, so the all-ones boolean matrix determines them.
    for n in range(1, 7):
        ones = UTMatrix(n, BOOLEAN, (1,) * triangle_size(n))
        for mask in enumerate_family_derivations(n):
            assert decompose(mask)(ones) == mask(ones)


def test_decompose_matches_mask_on_random_matrices():
    rng = random.Random(59)
    for n in (2, 5, 8):
        for _ in range(40):
            zero_set = frozenset(i for i in range(1, n + 1) if rng.random() < 0.5)
            mask = MaskDerivation(n, zero_set)
            expr = decompose(mask)
            a = random_matrix(n, MAXPLUS, rng)
            assert expr(a) == mask(a)


def test_decomposition_term_validation():
    with pytest.raises(ValueError):
        DecompositionTerm()
    with pytest.raises(ValueError):
        DecompositionTerm(k=-1)


# --- text syntaxes -------------------------------------------------------------------

def test_zero_set_syntax():
    assert parse_zero_set("2,3,5", 6) == frozenset({2, 3, 5})
    assert parse_zero_set("", 4) == frozenset()
    assert format_zero_set(frozenset({5, 2, 3})) == "2,3,5"
    with pytest.raises(ValueError):
        parse_zero_set("0", 4)
    with pytest.raises(ValueError):
        parse_zero_set("2,x", 4)


def test_pattern_syntax():
    pattern = parse_pattern("1,1;2,2", 3)
    assert pattern == ZeroPattern(3, {(1, 1), (2, 2)})
    assert format_pattern(pattern) == "1,1;2,2"
    assert parse_pattern("", 3) == ZeroPattern(3, frozenset())
    with pytest.raises(ValueError):
        parse_pattern("2,1", 3)  # below the diagonal
    with pytest.raises(ValueError):
        parse_pattern("1;2", 3)
