"""Laplace transform of the invariant measure on high-dimensional hyperspheres."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__, __version__  # noqa: F401
