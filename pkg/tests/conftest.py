from __future__ import annotations

import pytest

from locrep import build_square_code

# Session scope: the codes are immutable and their entropy caches warm
# up across tests, which keeps the exhaustive suites fast.


@pytest.fixture(scope="session")
def square_r2_m3():
    return build_square_code(2, 3)


@pytest.fixture(scope="session")
def square_r2_m4():
    return build_square_code(2, 4)


@pytest.fixture(scope="session")
def square_r3_m9():
    return build_square_code(3, 9)
