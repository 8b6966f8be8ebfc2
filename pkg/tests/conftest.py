import pytest

from lcthresh import threshold_sets


@pytest.fixture(scope="session")
def ht2_200():
    # ~10.2M values; enumerate once, share across every test that needs it
    return threshold_sets.ht2_enumerate(200)
