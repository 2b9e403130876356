"""Exact q-wedge modules for twisted quantum affine algebras.

Everything is computed symbolically over the field Q(s) with q = s*s: the
vector representation and its R-matrix, the q-analogue W of the symmetric
square, the wedge quotients V^k = Votimesk / sum V.. W ..V, and the crystal
bases and graphs of those quotients, together with a verification suite that
checks every claimed identity by exact linear algebra.
"""

__version__ = "0.1.0"
