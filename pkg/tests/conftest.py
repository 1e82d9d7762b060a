from pathlib import Path

import pytest

from fairauction import load_instance

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def walkthrough_path() -> Path:
    return FIXTURES / "walkthrough.json"


@pytest.fixture(scope="session")
def two_bidder_path() -> Path:
    return FIXTURES / "two_bidder.json"


@pytest.fixture(scope="session")
def generated_path() -> Path:
    return FIXTURES / "generated_seed1.json"


@pytest.fixture(scope="session")
def walkthrough_instance(walkthrough_path):
    """The canonical walkthrough instance: 3 resources, 3 bidders, one tie."""
    return load_instance(walkthrough_path)


@pytest.fixture(scope="session")
def two_bidder_instance(two_bidder_path):
    """b0 bids {r0}=10; b1 bids {r1}=8 and {r0,r1}=15."""
    return load_instance(two_bidder_path)
