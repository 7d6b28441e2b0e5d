import pytest

from kmoments import build_field, kloosterman_table


@pytest.fixture(scope="session")
def ctx3():
    return build_field(3)


@pytest.fixture(scope="session")
def ctx4():
    return build_field(4)


@pytest.fixture(scope="session")
def contexts():
    """Canonical contexts for r = 1..8, built once."""
    return {r: build_field(r) for r in range(1, 9)}


@pytest.fixture(scope="session")
def tables(contexts):
    """Kloosterman tables for r = 1..8."""
    return {r: kloosterman_table(ctx) for r, ctx in contexts.items()}
