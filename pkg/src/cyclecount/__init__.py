"""Cycle counts of multigraphs up to homeomorphism."""

from .cycles import *  # noqa: F401,F403
from .ears import *  # noqa: F401,F403
from .multigraph import *  # noqa: F401,F403
from .search import *  # noqa: F401,F403
from .treeduality import *  # noqa: F401,F403
from . import cycles, ears, multigraph, search, treeduality

__all__ = (
    multigraph.__all__ + cycles.__all__ + ears.__all__ + search.__all__ + treeduality.__all__
)
