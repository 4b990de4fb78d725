"""The attribution oracle: consistency sets, the canonical rule, and the
agreement between the grouped sweep and per-pair enumeration."""

import pytest

from editdetect import (
    CountVector,
    Unreachable,
    apply_pattern,
    canonical_vector,
    consistent_vectors,
    attribution,
    enumerate_codewords,
    enumerate_patterns,
    model_count_vector,
    parse_pattern,
    validate_params,
)
from editdetect.oracle import canonical_from_raw, consistent_raw, reachable_map


def vecs(pairs_list):
    return frozenset(CountVector(tuple(p)) for p in pairs_list)


def test_identity_is_singleton_zero_for_deletion_codes(d1_3_6):
    for x in enumerate_codewords(d1_3_6):
        assert consistent_vectors(d1_3_6, x, x) == vecs([((0, 0), (0, 0))])


def test_identity_canonical_is_zero_for_mixed(c1_7_14):
    # delete-a-bit-and-reinsert-it across the boundary also reproduces x,
    # so the set is larger but the convention still reads "no errors"
    x = "0001011" + "0001000"
    assert consistent_raw(c1_7_14, x, x) == {
        ((0, 0), (0, 0)),
        ((1, 0), (0, 1)),
    }
    assert canonical_vector(c1_7_14, x, x).pairs == ((0, 0), (0, 0))


def test_duplication_at_both_boundaries(i1_3_9):
    # duplicating each block's final bit equals inserting it ahead of the
    # next block; the convention charges the earlier blocks
    x = "011001010"
    y = "01110011010"
    assert consistent_raw(i1_3_9, x, y) == {
        ((0, 1), (0, 1), (0, 0)),
        ((0, 1), (0, 0), (0, 1)),
        ((0, 0), (0, 1), (0, 1)),
    }
    assert canonical_vector(i1_3_9, x, y).pairs == ((0, 1), (0, 1), (0, 0))


def test_boundary_zero_insertion_belongs_to_the_next_block(i1_3_9):
    x = "011001010"
    y = "0110001010"  # a 0 between block 1's final 1 and block 2's leading 0
    assert consistent_raw(i1_3_9, x, y) == {((0, 0), (0, 1), (0, 0))}


def test_transposition_convention(c1_7_14):
    x = "0001011" + "0001000"
    y = "00010101001000"  # boundary bits swapped: ...011|000... -> ...010|100...
    assert consistent_raw(c1_7_14, x, y) == {
        ((0, 1), (1, 0)),
        ((1, 0), (0, 1)),
    }
    assert canonical_vector(c1_7_14, x, y).pairs == ((0, 1), (1, 0))


def test_unreachable(i1_3_9, d1_3_6):
    assert consistent_vectors(i1_3_9, "011001010", "000") == frozenset()
    with pytest.raises(Unreachable):
        canonical_vector(d1_3_6, "101001", "1")  # shorter than n - m*delta


def test_attribution_bundle(c1_7_14):
    x = "0001011" + "0001000"
    res = attribution(c1_7_14, x, x)
    assert res.canonical.pairs == ((0, 0), (0, 0))
    assert CountVector(((1, 0), (0, 1))) in res.vectors


def test_canonical_rule_is_order_free():
    pool = [((0, 1), (1, 0)), ((1, 0), (0, 1))]
    assert canonical_from_raw(pool) == canonical_from_raw(list(reversed(pool)))
    assert canonical_from_raw(pool) == ((0, 1), (1, 0))
    # fewest edits first, then most insertions first, then fewest deletions
    assert canonical_from_raw([((0, 0), (0, 0)), ((1, 0), (0, 1))]) == ((0, 0), (0, 0))
    assert canonical_from_raw([((1, 0), (0, 0)), ((0, 0), (1, 0))]) == ((0, 0), (1, 0))


@pytest.mark.parametrize(
    "family,delta,ell,n",
    [("del", 1, 3, 6), ("ins1", None, 3, 6), ("mix1", None, 7, 14)],
)
def test_grouped_sweep_matches_per_pair_oracle(family, delta, ell, n):
    params = validate_params(family, delta, ell, n)
    for x in list(enumerate_codewords(params))[:4]:
        rm = reachable_map(params, x.bits)
        for y, grouped in rm.items():
            assert grouped == consistent_raw(params, x.bits, y)


@pytest.mark.parametrize(
    "family,delta,ell,n",
    [("del", 1, 3, 6), ("ins1", None, 3, 6), ("mix1", None, 7, 14)],
)
def test_full_pattern_enumeration_route(family, delta, ell, n):
    """Dual route: positional attribution over the complete pattern space
    (boundary gaps included) reproduces the oracle's consistency sets."""
    params = validate_params(family, delta, ell, n)
    for x in list(enumerate_codewords(params))[:2]:
        by_y: dict[str, set] = {}
        for p in enumerate_patterns(params):
            v = model_count_vector(params, p)
            if not v.respects(params):
                continue  # over-budget once boundary insertions are re-homed
            y = apply_pattern(params, x, p)
            by_y.setdefault(y.bits, set()).add(v.pairs)
        for y, expected in by_y.items():
            assert consistent_raw(params, x.bits, y) == expected


def test_true_vector_of_aliasfree_pattern_is_consistent(c1_7_14):
    from editdetect.channel import enumerate_patterns as ep

    x = "0001011" + "0001000"
    for p in ep(c1_7_14, alias_free=True):
        y = apply_pattern(c1_7_14, x, p)
        v = model_count_vector(c1_7_14, p)
        assert v.pairs in consistent_raw(c1_7_14, x, y.bits)


def test_worked_example_canonical(d1_5_20):
    from conftest import EXAMPLE_PATTERN, EXAMPLE_X, EXAMPLE_Y

    p = parse_pattern(EXAMPLE_PATTERN, d1_5_20)
    y = apply_pattern(d1_5_20, EXAMPLE_X, p)
    assert y.bits == EXAMPLE_Y
    assert canonical_vector(d1_5_20, EXAMPLE_X, y).deletions == (1, 0, 1, 1)
