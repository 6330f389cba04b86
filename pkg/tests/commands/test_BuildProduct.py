import pytest
import uqbar.strings

from wtoll.commands import BuildProduct
from wtoll.graphs.io import read_graph


@pytest.mark.asyncio
async def test_1(make_harness):
    harness = make_harness()
    assert await harness.execute(BuildProduct("lex", "path(2)", ("path(1)",))) == 0
    assert harness.stdout.getvalue() == "A_\n"


@pytest.mark.asyncio
async def test_2(make_harness, tmp_path):
    """
    Writing to a file leaves the vertex labels on standard output.
    """
    harness = make_harness()
    path = tmp_path / "corona.g6"
    command = BuildProduct("corona", "path(2)", ("path(1)",), out=str(path))
    assert await harness.execute(command) == 0
    assert harness.stdout.getvalue() == uqbar.strings.normalize(
        """
        0\tg_0
        1\tg_1
        2\th_0^0
        3\th_0^1
        """
    ) + "\n"
    assert read_graph(path).edges() == [(0, 1), (0, 2), (1, 3)]


@pytest.mark.asyncio
async def test_3(make_harness):
    harness = make_harness()
    command = BuildProduct("cart", "path(2)", ("path(2)",), format="edges")
    assert await harness.execute(command) == 0
    assert harness.stdout.getvalue().splitlines() == [
        "4 4",
        "0 1",
        "0 2",
        "1 3",
        "2 3",
    ]


@pytest.mark.asyncio
async def test_4(make_harness):
    harness = make_harness()
    command = BuildProduct(
        "gcorona", "path(2)", ("complete(1)", "path(2)"), format="dot"
    )
    assert await harness.execute(command) == 0
    assert harness.stdout.getvalue() == uqbar.strings.normalize(
        """
        graph G {
            "0" [label="g_0"];
            "1" [label="g_1"];
            "2" [label="h_0^0"];
            "3" [label="h_0^1"];
            "4" [label="h_1^1"];
            "0" -- "1";
            "0" -- "2";
            "1" -- "3";
            "1" -- "4";
            "3" -- "4";
        }
        """
    ) + "\n"


@pytest.mark.asyncio
async def test_5(make_harness):
    harness = make_harness()
    command = BuildProduct("corona", "path(2)", ("path(1)", "path(1)"))
    assert await harness.execute(command) == 1
    assert harness.stderr.getvalue().startswith("error [product-arity]: ")
