import os

import pytest
from hypothesis import settings

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("fast", max_examples=25, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))

from fmqchar.cartan import make_algebra  # noqa: E402


@pytest.fixture(scope="session")
def A2():
    return make_algebra("A", 2)


@pytest.fixture(scope="session")
def C2():
    return make_algebra("C", 2)


@pytest.fixture(scope="session")
def C3():
    return make_algebra("C", 3)


@pytest.fixture(scope="session")
def D4():
    return make_algebra("D", 4)

