import pytest

from wtoll.commands import ComputeHull


@pytest.mark.asyncio
async def test_1(make_harness):
    harness = make_harness()
    assert await harness.execute(ComputeHull("bridge(3)", (1, 5))) == 0
    assert await harness.execute(ComputeHull("bridge(3)", (1, 5), "geo")) == 0
    assert harness.stdout.getvalue() == "0 1 3 4 5\n0 1 3 4 5\n"


@pytest.mark.asyncio
async def test_2(make_harness):
    harness = make_harness()
    assert await harness.execute(ComputeHull("bridge(3)", ())) == 1
    assert await harness.execute(ComputeHull("bridge(3)", (1, 9))) == 1
    assert harness.stderr.getvalue().splitlines() == [
        "error [graph]: --set needs at least one vertex",
        "error [vertex-range]: vertex 9 out of range for order 7",
    ]
