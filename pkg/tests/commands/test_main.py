import pytest

from wtoll.__main__ import build_parser, main


def test_1(capsys):
    assert main(["invariant", "--graph", "complete(5)"]) == 0
    assert capsys.readouterr().out == "5\n"


def test_2(capsys):
    assert main(["hull", "--graph", "bridge(3)", "--set", "1", "5"]) == 0
    assert capsys.readouterr().out == "0 1 3 4 5\n"


def test_3(capsys):
    assert main(["interval", "--graph", "path(3)", "--u", "0", "--v", "7"]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith("error [vertex-range]: ")


def test_4(capsys):
    assert main(["verify", "--suite", "theorems"]) == 2
    assert "unknown suite 'theorems'" in capsys.readouterr().err


def test_5():
    with pytest.raises(SystemExit) as exception_info:
        main(["interval", "--graph", "path(3)"])
    assert exception_info.value.code == 2
    with pytest.raises(SystemExit):
        main(["product", "--g", "path(2)", "--h", "path(2)"])


def test_6():
    arguments = build_parser().parse_args(
        ["product", "--kind", "gcorona", "--g", "path(2)", "--h", "path(1)", "path(2)"]
    )
    assert arguments.h == ["path(1)", "path(2)"]
    assert arguments.format == "g6"


def test_7(capsys, tmp_path):
    """
    The full suite passes on the default corpus.
    """
    out = tmp_path / "verdicts.jsonl"
    assert main(["verify", "--suite", "all", "--out", str(out), "--workers", "2"]) == 0
    totals = [
        line
        for line in capsys.readouterr().out.splitlines()
        if line.startswith("total: ")
    ]
    assert len(totals) == 1 and ", 0 mismatch, " in totals[0]
    assert (tmp_path / "verdicts.csv").exists()
