"""Flip cut edges of planar point sets: which edges disconnect the
triangulation flip graph when forbidden, and how the survivors split."""

from flipcut._flipcut import *  # noqa: F401,F403
from flipcut._flipcut import __doc__  # noqa: F401
