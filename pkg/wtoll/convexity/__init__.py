from .closedforms import Anchor, Prediction, Target
from .hulls import (
    IntervalReport,
    SearchResult,
    hull,
    hull_number,
    interval_number,
    interval_report,
    is_convex,
    maximum_interval_pairs,
    wth,
    wtn,
)
from .intervals import (
    IntervalKind,
    IntervalTable,
    interval,
    interval_closure,
    is_weakly_toll_set,
    weakly_toll_interval,
)
from .oracle import WalkBudget, oracle_interval

__all__ = [
    "Anchor",
    "IntervalKind",
    "IntervalReport",
    "IntervalTable",
    "Prediction",
    "SearchResult",
    "Target",
    "WalkBudget",
    "hull",
    "hull_number",
    "interval",
    "interval_closure",
    "interval_number",
    "interval_report",
    "is_convex",
    "is_weakly_toll_set",
    "maximum_interval_pairs",
    "oracle_interval",
    "weakly_toll_interval",
    "wth",
    "wtn",
]
