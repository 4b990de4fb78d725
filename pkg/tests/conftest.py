"""Shared parameter sets and helpers for the test suite."""

from __future__ import annotations

import pytest

from editdetect import Family, validate_params

# The desk-scale parameter sets the exhaustive suites run on.
ACCEPTANCE_PARAMS = {
    "del": [(1, 3, 6), (1, 3, 9), (2, 5, 10), (2, 5, 15)],
    "ins1": [(None, 3, 6), (None, 3, 9)],
    "ins2": [(None, 9, 18)],
    "mix1": [(None, 7, 14)],
}


def acceptance_param_list():
    out = []
    for family, triples in ACCEPTANCE_PARAMS.items():
        for delta, ell, n in triples:
            out.append(validate_params(family, delta, ell, n))
    return out


@pytest.fixture(scope="session")
def d1_3_6():
    return validate_params(Family.DELETION, 1, 3, 6)


@pytest.fixture(scope="session")
def d1_5_20():
    return validate_params(Family.DELETION, 1, 5, 20)


@pytest.fixture(scope="session")
def i1_3_6():
    return validate_params(Family.INSERT1, None, 3, 6)


@pytest.fixture(scope="session")
def i1_3_9():
    return validate_params(Family.INSERT1, None, 3, 9)


@pytest.fixture(scope="session")
def i2_9_18():
    return validate_params(Family.INSERT2, None, 9, 18)


@pytest.fixture(scope="session")
def c1_7_14():
    return validate_params(Family.MIXED1, None, 7, 14)


# The worked end-to-end example: one deletion in blocks 1, 3 and 4.
EXAMPLE_X = "10101001110001100100"
EXAMPLE_PATTERN = "1=del@3,3=del@5,4=del@1"
EXAMPLE_Y = "10010011100010100"
EXAMPLE_DELS = (1, 0, 1, 1)
