import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from editdetect import (
    LengthMismatch,
    TooLarge,
    count_codewords_by_scan,
    encode,
    enumerate_codewords,
    fixed_positions,
    free_positions,
    is_codeword,
    message_bits,
    redundancy,
    scan_codewords,
    validate_params,
)
from conftest import EXAMPLE_X


def small_params():
    """A desk-scale assortment across all four families."""
    out = []
    for delta, ell, n in [(1, 3, 6), (1, 3, 9), (2, 5, 10), (1, 4, 12)]:
        out.append(validate_params("del", delta, ell, n))
    for ell, n in [(3, 6), (3, 9), (4, 8)]:
        out.append(validate_params("ins1", None, ell, n))
    out.append(validate_params("ins2", None, 9, 18))
    out.append(validate_params("mix1", None, 7, 14))
    return out


def test_fixed_positions_d1_3_6(d1_3_6):
    assert fixed_positions(d1_3_6).entries == ((3, 1), (4, 0), (5, 0))


def test_fixed_positions_d1_5_20(d1_5_20):
    assert len(fixed_positions(d1_5_20)) == 9 == redundancy(d1_5_20)


def test_fixed_positions_i1_3_6(i1_3_6):
    assert fixed_positions(i1_3_6).entries == ((3, 1), (4, 0))


def test_fixed_positions_i2_anchor_values(i2_9_18):
    fp = fixed_positions(i2_9_18).as_dict()
    # block 1 carries only the trailing 011; block 2 carries both anchors
    assert [fp.get(p) for p in (7, 8, 9)] == [0, 1, 1]
    assert [fp.get(p) for p in range(10, 15)] == [0, 0, 1, 1, 1]
    assert [fp.get(p) for p in (16, 17, 18)] == [0, 1, 1]
    assert 15 not in fp and 6 not in fp


@pytest.mark.parametrize("params", small_params(), ids=lambda p: p.label())
def test_redundancy_equals_fixed_count(params):
    assert len(fixed_positions(params)) == redundancy(params)


def test_worked_example_membership(d1_5_20):
    assert is_codeword(d1_5_20, EXAMPLE_X)
    # flipping block 1's trailing anchor must break membership
    assert not is_codeword(d1_5_20, "10100" + EXAMPLE_X[5:])


def test_membership_rejects_wrong_length(d1_3_6):
    assert not is_codeword(d1_3_6, "10100")


def test_scan_d1_3_6_counts_eight(d1_3_6):
    members = scan_codewords(d1_3_6)
    assert len(members) == 8 == 2 ** (6 - redundancy(d1_3_6))


def test_encode_examples(d1_3_6, i1_3_6):
    assert encode(d1_3_6, "101").bits == "101001"
    assert encode(d1_3_6, "000").bits == "001000"
    assert encode(i1_3_6, "0110").bits == "011010"


def test_encode_rejects_bad_length(d1_3_6):
    with pytest.raises(LengthMismatch):
        encode(d1_3_6, "10")


@pytest.mark.parametrize("params", small_params(), ids=lambda p: p.label())
def test_encode_round_trip_all_messages(params):
    k = params.n - redundancy(params)
    seen = set()
    for v in range(1 << k):
        msg = format(v, f"0{k}b") if k else ""
        x = encode(params, msg)
        assert is_codeword(params, x)
        assert message_bits(params, x).bits == msg
        seen.add(x.bits)
    assert len(seen) == 1 << k  # encode is injective


@pytest.mark.parametrize("params", small_params(), ids=lambda p: p.label())
def test_enumerate_matches_full_scan(params):
    if params.n > 16:
        pytest.skip("full per-string scan kept to small n")
    enumerated = [x.bits for x in enumerate_codewords(params)]
    assert sorted(enumerated) == scan_codewords(params)
    messages = [message_bits(params, x).bits for x in enumerated]
    assert messages == sorted(messages)  # lexicographic message order


@pytest.mark.parametrize("params", small_params(), ids=lambda p: p.label())
def test_vectorized_scan_agrees(params):
    expected = 1 << (params.n - redundancy(params))
    assert count_codewords_by_scan(params) == expected
    if params.n <= 14:
        assert count_codewords_by_scan(params) == len(scan_codewords(params))


def test_enumerate_guard():
    big = validate_params("ins1", None, 40, 80)
    with pytest.raises(TooLarge):
        list(enumerate_codewords(big, max_message_bits=30))


def test_deletion_codes_nest():
    # every member at budget delta stays a member at any smaller budget
    outer = validate_params("del", 2, 5, 10)
    inner = validate_params("del", 1, 5, 10)
    for x in enumerate_codewords(outer):
        assert is_codeword(inner, x)
    assert len(list(enumerate_codewords(outer))) < len(list(enumerate_codewords(inner)))


@given(st.integers(0, 2**12 - 1))
@settings(max_examples=40, deadline=None)
def test_round_trip_random_messages(value):
    params = validate_params("del", 3, 8, 24)
    k = params.n - redundancy(params)
    msg = format(value % (1 << k), f"0{k}b")
    assert message_bits(params, encode(params, msg)).bits == msg


def test_free_positions_disjoint_and_complete(d1_5_20):
    fixed = set(fixed_positions(d1_5_20).positions)
    free = set(free_positions(d1_5_20))
    assert fixed.isdisjoint(free)
    assert fixed | free == set(range(1, 21))
