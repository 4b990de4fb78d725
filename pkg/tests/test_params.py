import pytest

from editdetect import (
    CountVector,
    Family,
    NonDivisible,
    RangeViolation,
    redundancy,
    validate_params,
)


def test_valid_deletion_params():
    p = validate_params("del", 1, 5, 20)
    assert (p.family, p.delta, p.ell, p.n, p.m) == (Family.DELETION, 1, 5, 20, 4)
    assert p.del_budget == 1 and p.ins_budget == 0


def test_deletion_block_too_short():
    with pytest.raises(RangeViolation):
        validate_params("del", 1, 2, 8)  # needs 2*delta < ell


def test_ins2_block_lower_bound():
    with pytest.raises(RangeViolation):
        validate_params("ins2", None, 8, 16)  # needs ell > 8


def test_ell_must_divide_n():
    with pytest.raises(NonDivisible):
        validate_params("del", 1, 5, 12)


def test_ell_at_most_half_n():
    with pytest.raises(RangeViolation):
        validate_params("ins1", None, 4, 4)


def test_delta_ignored_for_fixed_budget_families():
    p = validate_params("ins1", 3, 3, 6)
    assert p.delta is None
    assert p.ins_budget == 1


@pytest.mark.parametrize(
    "family,delta,ell,n,expected",
    [
        ("del", 1, 5, 20, 9),  # (2*1+1) * 3
        ("del", 2, 5, 20, 15),
        ("ins1", None, 3, 6, 2),
        ("ins2", None, 9, 18, 11),  # 8*2 - 5
        ("mix1", None, 7, 14, 6),  # 6*(2-1)
    ],
)
def test_redundancy_formulas(family, delta, ell, n, expected):
    assert redundancy(validate_params(family, delta, ell, n)) == expected


def test_count_vector_accessors():
    v = CountVector(((1, 0), (0, 2)))
    assert v.deletions == (1, 0)
    assert v.insertions == (0, 2)
    assert v.total_deletions() == 1
    assert v.total_insertions() == 2
    assert v.format_plain() == "del=(1,0) ins=(0,2)"
    assert len(v) == 2 and v[1] == (0, 2)


def test_count_vector_budgets():
    p_del = validate_params("del", 1, 3, 6)
    assert CountVector(((1, 0), (0, 0))).respects(p_del)
    assert not CountVector(((2, 0), (0, 0))).respects(p_del)
    assert not CountVector(((0, 1), (0, 0))).respects(p_del)
    p_mix = validate_params("mix1", None, 7, 14)
    assert CountVector(((1, 0), (0, 1))).respects(p_mix)
    assert not CountVector(((1, 1), (0, 0))).respects(p_mix)
