"""Exact arithmetic for Drinfeld F_q[T]-modules over F_q(T).

Twisted polynomials, isogenies and quotients by finite kernels, valuation
polygons, graded / Taguchi / modular heights, and F_q[T]-lattice indices.
"""

from .kernels import BACKEND

__version__ = "0.1.0"
