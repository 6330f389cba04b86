import io

import pytest

from wtoll import Harness


@pytest.fixture
def make_harness():
    """
    Harnesses bind to the running loop, so tests build them inside coroutines.
    """

    def make():
        return Harness(stdout=io.StringIO(), stderr=io.StringIO())

    return make
