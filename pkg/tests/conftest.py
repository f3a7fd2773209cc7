import pytest

from cornellspec import bottomonium_table


@pytest.fixture(scope="session")
def bottomonium_rows():
    return bottomonium_table()
