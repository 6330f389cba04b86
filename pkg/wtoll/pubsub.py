import logging
from typing import Callable, Dict, List, Type

from .bases import Event

logger = logging.getLogger("wtoll.pubsub")


class PubSub:
    """
    Synchronous event delivery keyed by event class.

    Subscribers of a base class also receive its subclasses:

    ::

        >>> import dataclasses
        >>> from wtoll.bases import Event
        >>> @dataclasses.dataclass
        ... class Ping(Event):
        ...     count: int
        ...
        >>> pubsub, seen = PubSub(), []
        >>> pubsub.subscribe(seen.append, Event)
        >>> pubsub.publish(Ping(3))
        >>> seen
        [Ping(count=3)]

    """

    def __init__(self):
        self.subscriptions: Dict[Type[Event], List[Callable[[Event], None]]] = {}

    def publish(self, event: Event) -> None:
        for event_class in type(event).__mro__:
            for procedure in self.subscriptions.get(event_class, []):
                procedure(event)

    def subscribe(self, procedure: Callable, *event_classes: Type[Event]) -> None:
        for event_class in event_classes:
            self.subscriptions.setdefault(event_class, []).append(procedure)
            logger.debug("subscribed %r to %s", procedure, event_class.__name__)

    def unsubscribe(self, procedure: Callable, *event_classes: Type[Event]) -> None:
        for event_class in event_classes:
            callables = self.subscriptions.get(event_class, [])
            callables.remove(procedure)
            if not callables:
                self.subscriptions.pop(event_class, None)
