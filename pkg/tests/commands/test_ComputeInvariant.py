import pytest

from wtoll.commands import ComputeInvariant


@pytest.mark.asyncio
async def test_1(make_harness):
    harness = make_harness()
    assert await harness.execute(ComputeInvariant("complete(5)")) == 0
    assert harness.stdout.getvalue() == "5\n"


@pytest.mark.asyncio
async def test_2(make_harness):
    harness = make_harness()
    command = ComputeInvariant("bridge(3)", witness=True)
    assert await harness.execute(command) == 0
    assert harness.stdout.getvalue() == "4\n1 2 5 6\n"


@pytest.mark.asyncio
async def test_3(make_harness):
    harness = make_harness()
    command = ComputeInvariant("cycle(6)", what="wth", kind="geo")
    assert await harness.execute(command) == 0
    assert harness.stdout.getvalue() == "2\n"


@pytest.mark.asyncio
async def test_4(make_harness):
    harness = make_harness()
    assert await harness.execute(ComputeInvariant('g6("C`")')) == 1
    assert harness.stderr.getvalue().startswith("error [disconnected]: ")
