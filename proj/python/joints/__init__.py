"""Exact clique counts, (2, r+1, 2)-joints and Turan-type bounds on dense graphs."""

from ._joints import *  # noqa: F401,F403
from ._joints import JointsError, Graph  # noqa: F401
