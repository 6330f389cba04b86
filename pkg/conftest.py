import networkx
import pytest

import wtoll


@pytest.fixture(autouse=True)
def add_libraries(doctest_namespace):
    doctest_namespace["networkx"] = networkx
    doctest_namespace["wtoll"] = wtoll
