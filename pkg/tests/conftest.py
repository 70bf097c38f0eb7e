import itertools

import pytest

from duadic.gf2poly import FieldContext


@pytest.fixture(scope="session")
def gf8():
    return FieldContext(3)


@pytest.fixture(scope="session")
def gf32():
    return FieldContext(5)


@pytest.fixture(scope="session")
def gf128():
    return FieldContext(7)


def brute_force_weights(rows, n):
    """All codeword weights of the span of ``rows`` (int bitmasks), pure Python."""
    out = []
    for coeffs in itertools.product((0, 1), repeat=len(rows)):
        w = 0
        for c, r in zip(coeffs, rows):
            if c:
                w ^= r
        out.append(bin(w).count("1"))
    return out
