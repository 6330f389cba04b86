from ._version import __version__, __version_info__
from .core import Harness

__all__ = ["Harness", "__version__", "__version_info__"]
