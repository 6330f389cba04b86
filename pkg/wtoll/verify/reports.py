"""
Verdicts, summaries and report files.

::

    >>> from wtoll.verify.reports import Status, Verdict, summarize
    >>> summary = summarize([])
    >>> summary.total, summary.exit_code
    (0, 0)
    >>> verdicts = [
    ...     Verdict("tree-wtn", {}, 2, 2, Status.MATCH),
    ...     Verdict("tree-wtn", {}, 2, 3, Status.MISMATCH),
    ... ]
    >>> summary = summarize(verdicts)
    >>> summary.total, summary.mismatched, summary.exit_code
    (2, 1, 1)

"""
import csv
import dataclasses
import enum
import json
import pathlib
from typing import Any, Dict, Iterable, List, Sequence, Union

from ..graphs.bases import VertexSet


class Status(enum.Enum):
    MATCH = "match"
    MISMATCH = "mismatch"
    SKIPPED = "skipped"


def to_plain(value: Any) -> Any:
    if isinstance(value, VertexSet):
        return value.to_list()
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, dict):
        return {str(key): to_plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(item) for item in value]
    return value


@dataclasses.dataclass(frozen=True)
class Verdict:
    check_id: str
    instance: Dict[str, Any]
    predicted: Any
    observed: Any
    status: Status
    reason: str = ""
    runtime: float = 0.0
    anchor: str = ""

    ### PUBLIC METHODS ###

    def serialize(self, timing: bool = False) -> Dict[str, Any]:
        serialized = {
            "check": self.check_id,
            "instance": to_plain(self.instance),
            "observed": to_plain(self.observed),
            "predicted": to_plain(self.predicted),
            "status": self.status.value,
        }
        if self.anchor:
            serialized["anchor"] = self.anchor
        if self.reason:
            serialized["reason"] = self.reason
        if timing:
            serialized["runtime"] = round(self.runtime, 6)
        return serialized

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.serialize(timing), sort_keys=True, separators=(",", ":"))


@dataclasses.dataclass(frozen=True)
class CheckSummary:
    check_id: str
    anchor: str = ""
    total: int = 0
    matched: int = 0
    mismatched: int = 0
    skipped: int = 0
    runtime: float = 0.0


@dataclasses.dataclass(frozen=True)
class Summary:
    checks: List[CheckSummary]
    mismatches: List[Verdict]

    @property
    def exit_code(self) -> int:
        return 1 if self.mismatches else 0

    @property
    def matched(self) -> int:
        return sum(check.matched for check in self.checks)

    @property
    def mismatched(self) -> int:
        return len(self.mismatches)

    @property
    def runtime(self) -> float:
        return sum(check.runtime for check in self.checks)

    @property
    def skipped(self) -> int:
        return sum(check.skipped for check in self.checks)

    @property
    def total(self) -> int:
        return sum(check.total for check in self.checks)


def summarize(verdicts: Iterable[Verdict]) -> Summary:
    """
    Per-check counts in first-seen check order, plus every mismatch.
    """
    counts: Dict[str, Dict[str, Any]] = {}
    mismatches = []
    for verdict in verdicts:
        entry = counts.setdefault(
            verdict.check_id,
            {
                "anchor": verdict.anchor,
                "total": 0,
                "matched": 0,
                "mismatched": 0,
                "skipped": 0,
                "runtime": 0.0,
            },
        )
        entry["total"] += 1
        entry["runtime"] += verdict.runtime
        if verdict.status is Status.MATCH:
            entry["matched"] += 1
        elif verdict.status is Status.MISMATCH:
            entry["mismatched"] += 1
            mismatches.append(verdict)
        else:
            entry["skipped"] += 1
    checks = [CheckSummary(check_id, **entry) for check_id, entry in counts.items()]
    return Summary(checks=checks, mismatches=mismatches)


def write_verdicts(
    path: Union[str, pathlib.Path], verdicts: Sequence[Verdict], timing: bool = False
) -> pathlib.Path:
    path = pathlib.Path(path)
    path.write_text("".join(verdict.to_json(timing) + "\n" for verdict in verdicts))
    return path


def write_summary(
    path: Union[str, pathlib.Path], summary: Summary, timing: bool = False
) -> pathlib.Path:
    path = pathlib.Path(path)
    header = ["check", "anchor", "total", "match", "mismatch", "skipped"]
    if timing:
        header.append("runtime")
    with path.open("w", newline="") as file_pointer:
        writer = csv.writer(file_pointer, lineterminator="\n")
        writer.writerow(header)
        for check in summary.checks:
            row = [check.check_id, check.anchor, check.total, check.matched]
            row.extend([check.mismatched, check.skipped])
            if timing:
                row.append(f"{check.runtime:.6f}")
            writer.writerow(row)
    return path


def format_summary(summary: Summary) -> str:
    """
    ::

        >>> verdicts = [Verdict("tree-wtn", {}, 2, 2, Status.MATCH)]
        >>> print(format_summary(summarize(verdicts)))
        tree-wtn: 1 checked, 1 match, 0 mismatch, 0 skipped
        total: 1 checked, 1 match, 0 mismatch, 0 skipped

    """
    lines = []
    for check in summary.checks:
        lines.append(
            f"{check.check_id}: {check.total} checked, {check.matched} match, "
            f"{check.mismatched} mismatch, {check.skipped} skipped"
        )
    lines.append(
        f"total: {summary.total} checked, {summary.matched} match, "
        f"{summary.mismatched} mismatch, {summary.skipped} skipped"
    )
    return "\n".join(lines)
