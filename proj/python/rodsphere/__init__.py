"""Dynamics of rod-driven spherical robot locomotion.

Thin package wrapper around the compiled extension; everything public
lives in ``rodsphere._core``.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__, __version__  # noqa: F401
