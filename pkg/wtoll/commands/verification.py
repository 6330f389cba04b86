import dataclasses
import logging
import pathlib
from typing import Optional

from ..bases import Command
from ..core import CheckFinished, CheckStarted, VerdictRecorded
from ..exceptions import UnknownCheckError
from ..verify.checks import resolve_suite
from ..verify.corpus import CorpusSpec
from ..verify.reports import (
    Status,
    format_summary,
    summarize,
    write_summary,
    write_verdicts,
)

logger = logging.getLogger("wtoll.verify")


def log_event(event) -> None:
    if isinstance(event, CheckStarted):
        logger.info("%s: %d instances", event.check_id, event.instance_count)
    elif isinstance(event, CheckFinished):
        logger.info(
            "%s: %d match, %d mismatch, %d skipped",
            event.check_id,
            event.matched,
            event.mismatched,
            event.skipped,
        )
    elif isinstance(event, VerdictRecorded):
        if event.verdict.status is Status.MISMATCH:
            logger.warning("mismatch: %s", event.verdict.to_json())


@dataclasses.dataclass
class RunVerification(Command):
    suite: str = "all"
    spec: Optional[str] = None
    out: Optional[str] = None
    workers: int = 1
    timing: bool = False

    async def do(self, harness) -> int:
        try:
            checks = resolve_suite(self.suite)
        except UnknownCheckError as exception:
            print(f"error [{exception.code}]: {exception}", file=harness.stderr)
            return 2
        spec = CorpusSpec() if self.spec is None else CorpusSpec.load(self.spec)
        events = (CheckStarted, CheckFinished, VerdictRecorded)
        harness.pubsub.subscribe(log_event, *events)
        try:
            verdicts = await harness.run_checks(checks, spec, workers=self.workers)
        finally:
            harness.pubsub.unsubscribe(log_event, *events)
        summary = summarize(verdicts)
        if self.out is not None:
            path = write_verdicts(self.out, verdicts, timing=self.timing)
            write_summary(pathlib.Path(path).with_suffix(".csv"), summary, self.timing)
        harness.echo(format_summary(summary))
        return summary.exit_code
