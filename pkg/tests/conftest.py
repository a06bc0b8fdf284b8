import pytest

from k3bps import PairsLedger, bps_grid_from_kkv


@pytest.fixture(scope="session")
def grid5():
    return bps_grid_from_kkv(5)


@pytest.fixture(scope="session")
def grid20():
    return bps_grid_from_kkv(20)


@pytest.fixture(scope="session")
def ledger20(grid20):
    return PairsLedger(grid20)


@pytest.fixture(scope="session")
def grid65():
    return bps_grid_from_kkv(65)


@pytest.fixture(scope="session")
def ledger65(grid65):
    return PairsLedger(grid65)
