import pytest
from hypothesis import given
from hypothesis import strategies as st

from editdetect import BitString

bits_text = st.text(alphabet="01", max_size=64)


def test_basic_construction():
    s = BitString("10101")
    assert len(s) == 5
    assert str(s) == "10101"
    assert list(s) == [1, 0, 1, 0, 1]
    assert BitString.from_ints([1, 0, 1]) == BitString("101")


def test_rejects_non_bits():
    with pytest.raises(ValueError):
        BitString("10201")


def test_one_based_indexing():
    s = BitString("10101")
    assert s.bit(1) == 1
    assert s.bit(5) == 1
    assert s.bit(2) == 0
    with pytest.raises(IndexError):
        s.bit(0)
    with pytest.raises(IndexError):
        s.bit(6)


def test_substring_inclusive_and_empty():
    s = BitString("10101")
    assert s.substring(1, 3) == BitString("101")
    assert s.substring(2, 2) == BitString("0")
    assert s.substring(3, 2) == BitString("")  # i == j + 1 is the empty range
    with pytest.raises(IndexError):
        s.substring(0, 2)
    with pytest.raises(IndexError):
        s.substring(2, 6)


def test_blocks():
    s = BitString("101001")
    assert s.block(1, 3) == BitString("101")
    assert s.block(2, 3) == BitString("001")


def test_concat_and_hash():
    assert BitString("10") + BitString("01") == BitString("1001")
    assert len({BitString("10"), BitString("10"), BitString("01")}) == 2


@given(bits_text, bits_text)
def test_concat_lengths(a, b):
    assert len(BitString(a) + BitString(b)) == len(a) + len(b)


@given(bits_text)
def test_bit_matches_substring(s):
    bs = BitString(s)
    for i in range(1, len(s) + 1):
        assert bs.substring(i, i).bits == s[i - 1]
        assert bs.bit(i) == int(s[i - 1])
