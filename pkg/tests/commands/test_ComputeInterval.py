import pytest
import uqbar.strings

from wtoll.commands import ComputeInterval


@pytest.mark.asyncio
async def test_1(make_harness):
    harness = make_harness()
    assert await harness.execute(ComputeInterval("star(3)", "wt", 1, 2)) == 0
    assert await harness.execute(ComputeInterval("star(3)", "toll", 1, 2)) == 0
    assert harness.stdout.getvalue() == "0 1 2 3\n0 1 2\n"


@pytest.mark.asyncio
async def test_2(make_harness):
    """
    Weakly toll reports list the missed vertices.
    """
    harness = make_harness()
    command = ComputeInterval("bridge(3)", "wt", 1, 5, report=True)
    assert await harness.execute(command) == 0
    assert harness.stdout.getvalue() == uqbar.strings.normalize(
        """
        0 1 3 4 5
        X: 2 6
        X_u: 2
        X_v: 6
        """
    ) + "\n"


@pytest.mark.asyncio
async def test_3(make_harness):
    """
    Product vertices are echoed with their labels.
    """
    harness = make_harness()
    command = ComputeInterval("lex(path(3), path(3))", "wt", 0, 8)
    assert await harness.execute(command) == 0
    assert harness.stdout.getvalue().splitlines() == [
        "0 2 3 4 5 6 8",
        "0\t(0,0)",
        "2\t(0,2)",
        "3\t(1,0)",
        "4\t(1,1)",
        "5\t(1,2)",
        "6\t(2,0)",
        "8\t(2,2)",
    ]


@pytest.mark.asyncio
async def test_4(make_harness):
    harness = make_harness()
    assert await harness.execute(ComputeInterval("path(3)", "wt", 0, 7)) == 1
    assert harness.stderr.getvalue().startswith("error [vertex-range]: ")
    command = ComputeInterval("path(3)", "toll", 0, 2, report=True)
    assert await harness.execute(command) == 1
    assert "--report describes weakly toll intervals only" in harness.stderr.getvalue()
    assert harness.stdout.getvalue() == ""


@pytest.mark.asyncio
async def test_5(make_harness):
    harness = make_harness()
    assert await harness.execute(ComputeInterval("path(3)", "swt", 0, 1)) == 0
    assert await harness.execute(ComputeInterval("path(3)", "swt", 1, 0)) == 0
    assert harness.stdout.getvalue() == "0 1 2\n0 1\n"
