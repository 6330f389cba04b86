import asyncio
import concurrent.futures
import dataclasses
import logging
import sys
from typing import List, Optional, Sequence, TextIO

from . import pubsub
from .bases import Command, Event
from .exceptions import WtollError
from .verify.checks import Check, evaluate
from .verify.corpus import Corpus, CorpusSpec
from .verify.reports import Status, Verdict

logger = logging.getLogger("wtoll.core")


@dataclasses.dataclass
class CheckStarted(Event):
    check_id: str
    instance_count: int


@dataclasses.dataclass
class CheckFinished(Event):
    check_id: str
    matched: int
    mismatched: int
    skipped: int


@dataclasses.dataclass
class VerdictRecorded(Event):
    position: int
    verdict: Verdict


class Harness:
    """
    Executes commands one at a time from ``command_queue`` and fans
    verification instances out to workers.
    """

    def __init__(
        self,
        loop: Optional[asyncio.AbstractEventLoop] = None,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
    ):
        if loop is None:
            loop = asyncio.get_running_loop()
        self.exit_future = loop.create_future()
        self.pubsub = pubsub.PubSub()
        self.command_queue: asyncio.Queue = asyncio.Queue()
        self.stdout = stdout if stdout is not None else sys.stdout
        self.stderr = stderr if stderr is not None else sys.stderr

    ### PUBLIC METHODS ###

    def echo(self, text: str = "") -> None:
        print(text, file=self.stdout)

    async def execute(self, command: Command) -> int:
        try:
            return await command.do(self)
        except WtollError as exception:
            print(f"error [{exception.code}]: {exception}", file=self.stderr)
            return 1
        except OSError as exception:
            print(f"error [io]: {exception}", file=self.stderr)
            return 1

    async def exit(self) -> None:
        if not self.exit_future.done():
            self.exit_future.set_result(True)
        # wake the command loop
        await self.command_queue.put(None)

    async def run(self) -> None:
        while not self.exit_future.done():
            command = await self.command_queue.get()
            if command is None:
                continue
            exit_code = await self.execute(command)
            try:
                command.future.set_result(exit_code)
            except asyncio.InvalidStateError:
                pass

    async def run_checks(
        self, checks: Sequence[Check], spec: CorpusSpec, workers: int = 1
    ) -> List[Verdict]:
        """
        Evaluates every instance of ``checks``; verdicts come back in instance
        order whatever the completion order.
        """
        corpus = Corpus(spec)
        items, spans = [], []
        for check in checks:
            instances = list(check.instances(corpus))
            self.pubsub.publish(CheckStarted(check.check_id, len(instances)))
            spans.append((check.check_id, len(items), len(items) + len(instances)))
            items.extend(instances)
        verdicts: List[Optional[Verdict]] = [None] * len(items)
        queue: asyncio.Queue = asyncio.Queue()
        for position, instance in enumerate(items):
            queue.put_nowait((position, instance))
        logger.debug("queued %d instances for %d workers", len(items), workers)
        loop = asyncio.get_running_loop()
        executor = (
            concurrent.futures.ProcessPoolExecutor(max_workers=workers)
            if workers > 1
            else None
        )

        async def work():
            while True:
                try:
                    position, instance = queue.get_nowait()
                except asyncio.QueueEmpty:
                    return
                verdict = await loop.run_in_executor(executor, evaluate, instance)
                verdicts[position] = verdict
                self.pubsub.publish(VerdictRecorded(position, verdict))
                queue.task_done()

        try:
            await asyncio.gather(*(work() for _ in range(max(workers, 1))))
        finally:
            if executor is not None:
                executor.shutdown()
        for check_id, start, stop in spans:
            statuses = [verdict.status for verdict in verdicts[start:stop]]
            self.pubsub.publish(
                CheckFinished(
                    check_id,
                    matched=statuses.count(Status.MATCH),
                    mismatched=statuses.count(Status.MISMATCH),
                    skipped=statuses.count(Status.SKIPPED),
                )
            )
        return verdicts

    async def submit(self, command: Command) -> int:
        await self.command_queue.put(command)
        return await command.future
