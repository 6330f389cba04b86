import json

import pytest
import uqbar.strings

from wtoll.commands import RunVerification
from wtoll.core import CheckFinished, CheckStarted, VerdictRecorded


@pytest.mark.asyncio
async def test_1(make_harness):
    harness = make_harness()
    assert await harness.execute(RunVerification(suite="bridge-wtn")) == 0
    assert harness.stdout.getvalue() == uqbar.strings.normalize(
        """
        bridge-wtn: 2 checked, 2 match, 0 mismatch, 0 skipped
        total: 2 checked, 2 match, 0 mismatch, 0 skipped
        """
    ) + "\n"


@pytest.mark.asyncio
async def test_2(make_harness, tmp_path):
    harness = make_harness()
    out = tmp_path / "verdicts.jsonl"
    command = RunVerification(suite="examples", out=str(out))
    assert await harness.execute(command) == 0
    verdicts = [json.loads(line) for line in out.read_text().splitlines()]
    assert {verdict["status"] for verdict in verdicts} == {"match"}
    assert verdicts[0]["check"] == "star-example"
    assert "runtime" not in verdicts[0]
    summary = (tmp_path / "verdicts.csv").read_text().splitlines()
    assert summary[0] == "check,anchor,total,match,mismatch,skipped"
    assert verdicts[0]["anchor"] == "example: the star K_{1,3}"
    assert summary[1] == 'star-example,"example: the star K_{1,3}",2,2,0,0'


@pytest.mark.asyncio
async def test_3(make_harness, tmp_path):
    """
    Worker count changes nothing in the report.
    """
    spec = tmp_path / "corpus.yaml"
    spec.write_text("exhaustive_max_order: 4\nrandom_orders: [5]\nrandom_count: 4\n")
    outputs = []
    for workers in (1, 2):
        harness = make_harness()
        out = tmp_path / f"verdicts-{workers}.jsonl"
        command = RunVerification("oracle-toll", str(spec), str(out), workers)
        assert await harness.execute(command) == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


@pytest.mark.asyncio
async def test_4(make_harness, tmp_path):
    harness = make_harness()
    assert await harness.execute(RunVerification(suite="theorems")) == 2
    assert harness.stderr.getvalue() == (
        "error [unknown-check]: unknown suite 'theorems'\n"
    )
    spec = tmp_path / "corpus.yaml"
    spec.write_text("factor_max_order: 6\n")
    assert await harness.execute(RunVerification(suite="lex-wtn", spec=str(spec))) == 1
    assert "error [infeasible-spec]" in harness.stderr.getvalue()
    assert harness.stdout.getvalue() == ""


@pytest.mark.asyncio
async def test_5(make_harness):
    harness = make_harness()
    events = []
    harness.pubsub.subscribe(
        events.append, CheckStarted, CheckFinished, VerdictRecorded
    )
    assert await harness.execute(RunVerification(suite="complete-wtn")) == 0
    assert events[0] == CheckStarted("complete-wtn", 4)
    assert [event.position for event in events[1:-1]] == [0, 1, 2, 3]
    assert events[-1] == CheckFinished(
        "complete-wtn", matched=4, mismatched=0, skipped=0
    )
