import math

import pytest

from twobridge import validate


def all_raw_forms(p_max):
    """Every valid odd-q pair with p <= p_max, no key dedup."""
    return [
        validate(p, q)
        for p in range(3, p_max + 1, 2)
        for q in range(1, p, 2)
        if math.gcd(p, q) == 1
    ]


@pytest.fixture(scope="session")
def raw_forms_99():
    return all_raw_forms(99)


@pytest.fixture(scope="session")
def raw_forms_49():
    return all_raw_forms(49)
