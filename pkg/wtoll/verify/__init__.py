from .checks import CHECKS, GROUPS, Check, resolve_suite, run_check
from .corpus import Corpus, CorpusSpec, Instance
from .reports import Status, Summary, Verdict, summarize

__all__ = [
    "CHECKS",
    "GROUPS",
    "Check",
    "Corpus",
    "CorpusSpec",
    "Instance",
    "Status",
    "Summary",
    "Verdict",
    "resolve_suite",
    "run_check",
    "summarize",
]
