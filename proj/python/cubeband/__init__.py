"""Optimal bandwidth and antibandwidth layouts of the n-dimensional hypercube.

Vertices are strings ``"c_1...c_n"`` of ``'0'`` and ``'1'``; numberings are
1-based. Exact integers from the closed forms are returned as Python ints.
"""

from ._cubeband import *  # noqa: F401,F403
from ._cubeband import (  # noqa: F401
    Error,
    Numbering,
    ParseError,
    RangeError,
    SparseBlock,
)

__version__ = "0.1.0"
