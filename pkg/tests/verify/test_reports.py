import uqbar.strings

from wtoll.graphs import VertexSet
from wtoll.verify.checks import run_check
from wtoll.verify.corpus import CorpusSpec
from wtoll.verify.reports import (
    Status,
    Verdict,
    format_summary,
    summarize,
    write_summary,
    write_verdicts,
)


def test_1():
    verdict = Verdict(
        "star-example",
        {"graphs": ["Cs"], "vertices": [1, 2]},
        VertexSet.from_vertices(4, [0, 1, 2, 3]),
        [0, 1, 2, 3],
        Status.MATCH,
        runtime=0.25,
    )
    assert verdict.to_json() == (
        '{"check":"star-example","instance":{"graphs":["Cs"],"vertices":[1,2]},'
        '"observed":[0,1,2,3],"predicted":[0,1,2,3],"status":"match"}'
    )
    assert verdict.serialize(timing=True)["runtime"] == 0.25


def test_2(tmp_path):
    """
    Two runs over one spec write identical verdict files.
    """
    spec = CorpusSpec()
    paths = []
    for name in ("first.jsonl", "second.jsonl"):
        verdicts = run_check("bridge-wtn", spec) + run_check("star-example", spec)
        paths.append(write_verdicts(tmp_path / name, verdicts))
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert len(paths[0].read_text().splitlines()) == 4


def test_3(tmp_path):
    verdicts = [
        Verdict("tree-wtn", {}, 2, 2, Status.MATCH),
        Verdict("tree-wtn", {}, 2, 3, Status.MISMATCH),
        Verdict(
            "lex-wtn",
            {},
            None,
            None,
            Status.SKIPPED,
            reason="first factor is complete",
        ),
    ]
    summary = summarize(verdicts)
    assert (summary.total, summary.matched, summary.mismatched, summary.skipped) == (
        3,
        1,
        1,
        1,
    )
    assert summary.exit_code == 1
    path = write_summary(tmp_path / "summary.csv", summary)
    assert path.read_text() == uqbar.strings.normalize(
        """
        check,anchor,total,match,mismatch,skipped
        tree-wtn,,2,1,1,0
        lex-wtn,,1,0,0,1
        """
    ) + "\n"
    assert format_summary(summary).splitlines()[-1] == (
        "total: 3 checked, 1 match, 1 mismatch, 1 skipped"
    )


def test_4(tmp_path):
    verdicts = [Verdict("tree-wtn", {}, 2, 2, Status.MATCH, runtime=0.5)]
    path = write_summary(tmp_path / "summary.csv", summarize(verdicts), timing=True)
    assert path.read_text().splitlines() == [
        "check,anchor,total,match,mismatch,skipped,runtime",
        "tree-wtn,,1,1,0,0,0.500000",
    ]


def test_5(tmp_path):
    """
    Verdict lines and summary rows name the statement each check rests on.
    """
    verdicts = run_check("bridge-wtn", CorpusSpec())
    anchor = "example: two cliques joined by a path of length two"
    assert [verdict.anchor for verdict in verdicts] == [anchor, anchor]
    assert f'"anchor":"{anchor}"' in verdicts[0].to_json()
    path = write_summary(tmp_path / "summary.csv", summarize(verdicts))
    assert path.read_text().splitlines() == [
        "check,anchor,total,match,mismatch,skipped",
        f"bridge-wtn,{anchor},2,2,0,0",
    ]
