import pytest

from editdetect import (
    BitString,
    MalformedReceived,
    PROBE_NAMES,
    apply_pattern,
    decode,
    decode_deletions,
    decode_ins1,
    decode_ins2,
    decode_mixed1,
    parse_pattern,
    shifted_decoder,
    validate_params,
)
from conftest import EXAMPLE_DELS, EXAMPLE_X, EXAMPLE_Y


def test_worked_example_decode(d1_5_20):
    assert decode_deletions(d1_5_20, EXAMPLE_Y).deletions == EXAMPLE_DELS


def test_decode_untouched_codeword(d1_5_20):
    counts = decode_deletions(d1_5_20, EXAMPLE_X)
    assert counts.deletions == (0, 0, 0, 0)
    assert counts.insertions == (0, 0, 0, 0)


def test_decode_single_deletion_trace(d1_3_6):
    # 101001 with its second bit deleted: the trailing window shows a 0,
    # so one deletion is declared and the last block arrives intact
    assert decode_deletions(d1_3_6, "11001").deletions == (1, 0)


def test_decoders_are_pure(d1_5_20):
    assert decode(d1_5_20, EXAMPLE_Y) == decode(d1_5_20, EXAMPLE_Y)


def test_decode_accepts_bitstring_and_str(d1_5_20):
    assert decode(d1_5_20, BitString(EXAMPLE_Y)) == decode(d1_5_20, EXAMPLE_Y)


def test_decode_deletions_malformed(d1_3_6):
    with pytest.raises(MalformedReceived):
        decode_deletions(d1_3_6, "110")  # implies 3 deletions in block 2
    with pytest.raises(MalformedReceived):
        decode_deletions(d1_3_6, "1100110")  # longer than n


def test_decode_ins1_examples(i1_3_6):
    x = "011011"
    y = apply_pattern(i1_3_6, x, parse_pattern("1=ins@2:1", i1_3_6))
    assert y.bits == "0111011"
    assert decode_ins1(i1_3_6, y).insertions == (1, 0)
    assert decode_ins1(i1_3_6, x).insertions == (0, 0)
    # a 1 at the very start of block 2 duplicates block 1's final anchor and
    # is charged to block 1 by the leftmost convention
    y2 = apply_pattern(i1_3_6, x, parse_pattern("2=ins@0:1", i1_3_6))
    assert y2 == y
    assert decode_ins1(i1_3_6, y2).insertions == (1, 0)


def test_decode_ins1_malformed(i1_3_6):
    with pytest.raises(MalformedReceived):
        decode_ins1(i1_3_6, "011011000")  # three extra bits


def test_decode_ins2_examples(i2_9_18):
    x = "000000011" + "001110011"
    assert decode_ins2(i2_9_18, x).insertions == (0, 0)
    y1 = apply_pattern(i2_9_18, x, parse_pattern("1=ins@8:0", i2_9_18))
    assert decode_ins2(i2_9_18, y1).insertions == (1, 0)
    y2 = apply_pattern(i2_9_18, x, parse_pattern("2=ins@0:1,2=ins@0:1", i2_9_18))
    assert decode_ins2(i2_9_18, y2).insertions == (2, 0)


def test_decode_ins2_malformed(i2_9_18):
    with pytest.raises(MalformedReceived):
        decode_ins2(i2_9_18, "0" * 25)  # implies more than two per block


def test_decode_mixed_examples(c1_7_14):
    x = "0001011" + "0001000"
    assert decode_mixed1(c1_7_14, x).pairs == ((0, 0), (0, 0))
    y_del = apply_pattern(c1_7_14, x, parse_pattern("1=del@2", c1_7_14))
    assert decode_mixed1(c1_7_14, y_del).pairs == ((1, 0), (0, 0))
    # boundary transposition reads as insert-early / delete-late
    assert decode_mixed1(c1_7_14, "00010101001000").pairs == ((0, 1), (1, 0))


def test_decode_mixed_malformed(c1_7_14):
    with pytest.raises(MalformedReceived):
        decode_mixed1(c1_7_14, "0001011")  # a whole block missing


def test_family_dispatch_guards(d1_3_6, i1_3_6):
    with pytest.raises(ValueError):
        decode_ins1(d1_3_6, "101001")
    with pytest.raises(ValueError):
        decode_deletions(i1_3_6, "011011")


def test_shifted_decoder_rejects_unknown_probe(d1_3_6):
    with pytest.raises(ValueError):
        shifted_decoder(d1_3_6, "nonsense", 1)


def test_probe_shift_changes_output(d1_3_6):
    # the mutated decoder misreads a deletion boundary; the exhaustive
    # sensitivity check lives in the acceptance suite
    mutant = shifted_decoder(d1_3_6, "window", 1)
    assert mutant("00100").deletions != decode(d1_3_6, "00100").deletions


def test_probe_names_cover_all_families():
    assert set(PROBE_NAMES) == {p.family for p in (
        validate_params("del", 1, 3, 6),
        validate_params("ins1", None, 3, 6),
        validate_params("ins2", None, 9, 18),
        validate_params("mix1", None, 7, 14),
    )}
