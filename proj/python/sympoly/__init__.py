"""Exact rational P_n, T_r, f_r and W_1 polynomials with verification suites."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401

__version__ = "0.1.0"
