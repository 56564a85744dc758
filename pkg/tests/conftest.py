from __future__ import annotations

import pytest

from crring import QuotientDatum, validate_datum


@pytest.fixture(scope="session")
def wp122333():
    return validate_datum(QuotientDatum((1, 2, 2, 3, 3, 3)))


@pytest.fixture(scope="session")
def wp112():
    return validate_datum(QuotientDatum((1, 1, 2)))


@pytest.fixture(scope="session")
def p11():
    return validate_datum(QuotientDatum((1, 1)))


@pytest.fixture(scope="session")
def mixed():
    return validate_datum(QuotientDatum((1, 1, -1)))
