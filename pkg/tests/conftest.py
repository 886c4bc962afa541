import pytest

from bladesim import dense


@pytest.fixture(autouse=True)
def _restore_oracle_cap():
    cap = dense.oracle_cap()
    yield
    dense.set_oracle_cap(cap)
