import pytest

from compmt.bank import default_bank
from compmt.build import RunConfig, build_splits


@pytest.fixture(scope="session")
def bank():
    return default_bank()


@pytest.fixture(scope="session")
def patterns(bank):
    return bank.patterns


@pytest.fixture(scope="session")
def small_build(bank):
    """Scale-0.01 corpus: fast, counts still exactly proportional."""
    return build_splits(RunConfig(master_seed=1, scale=0.01), bank=bank)


@pytest.fixture(scope="session")
def mid_build(bank):
    """Scale-0.05 corpus: large enough for audit prerequisites and
    distributional checks."""
    return build_splits(RunConfig(master_seed=1, scale=0.05), bank=bank)
