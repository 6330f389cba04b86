import asyncio
import dataclasses
from typing import Optional


@dataclasses.dataclass
class Command:
    """
    A request the harness executes; ``future`` resolves to its exit code.
    """

    future: Optional[asyncio.Future] = dataclasses.field(
        init=False, compare=False, hash=False, repr=False
    )

    def __post_init__(self):
        try:
            self.future = asyncio.get_running_loop().create_future()
        except RuntimeError:
            self.future = None

    async def do(self, harness) -> int:
        raise NotImplementedError


@dataclasses.dataclass
class Event:
    pass
