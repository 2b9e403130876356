"""Cartan data for the four algebra families and their classical subalgebras.

The families are named by the CLI kind strings:

  kind            classical   index set J                n
  a2even          B_n         {0, +-1, ..., +-n}         >= 2
  a2odd           C_n         {+-1, ..., +-n}            >= 3
  a2odd-dagger    D_n         {+-1, ..., +-n}            >= 3
  c1              C_n         {+-1, ..., +-n}            >= 2

J carries the linear order 1 < 2 < ... < n (< 0) < -n < ... < -1. Classical
weights are tuples of n Fractions in an orthogonal basis e_1..e_n; simple
root i = 0 keeps only its classical part here (its null-root summand acts
trivially on classical weights). All pairings below use (e_i|e_j) = delta_ij;
the invariantly normalized form is `bilinear_scale` times that, which only
matters for the scale-dependent check (theta|theta) = 2 * comark[0].

q_i = s**d[i] where d[i] is the squared length of simple root i in the
unscaled form; this matches the diagonal torus matrices of the vector
representation in every family.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Dict, List, Tuple

from .scalars import ONE, Scalar, quantum_integer

KINDS = ("a2even", "a2odd", "a2odd-dagger", "c1")

Weight = Tuple[Fraction, ...]

_F0 = Fraction(0)
_F1 = Fraction(1)


def _eps(n: int, j: int, sign: int = 1) -> Weight:
    return tuple(Fraction(sign) if m == j else _F0 for m in range(1, n + 1))


def _wsum(n: int, *parts) -> Weight:
    out = [_F0] * n
    for coeff, w in parts:
        for m in range(n):
            out[m] += coeff * w[m]
    return tuple(out)


def _dot(a: Weight, b: Weight) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), _F0)


class Algebra:
    """Immutable bundle of root and index data for one (kind, n)."""

    __slots__ = (
        "kind",
        "n",
        "classical",
        "N",
        "bar_shift",
        "J",
        "order_index",
        "marks",
        "comarks",
        "simple_roots",
        "d",
        "xi",
        "xi_prime",
        "bilinear_scale",
    )

    def __init__(self, kind: str, n: int):
        if kind not in KINDS:
            raise ValueError(f"unknown algebra kind {kind!r}; choose from {KINDS}")
        minimal = 3 if kind in ("a2odd", "a2odd-dagger") else 2
        if n < minimal:
            raise ValueError(f"kind {kind!r} needs rank n >= {minimal}, got {n}")
        self.kind = kind
        self.n = n
        self.classical = {
            "a2even": "B",
            "a2odd": "C",
            "a2odd-dagger": "D",
            "c1": "C",
        }[kind]

        labels = list(range(1, n + 1))
        if kind == "a2even":
            labels.append(0)
        labels.extend(range(-n, 0))
        self.J = tuple(labels)
        self.order_index = {j: m for m, j in enumerate(labels)}

        if kind == "a2even":
            self.N = 2 * n + 1
            self.xi = Scalar.q_power(2 * n + 1, -1)
        elif kind == "a2odd":
            self.N = 2 * n + 2
            self.xi = Scalar.q_power(2 * n, -1)
        elif kind == "a2odd-dagger":
            self.N = 2 * n
            self.xi = Scalar.q_power(2 * n, -1)
        else:
            self.N = 2 * n
            self.xi = Scalar.q_power(2 * n + 2)
        self.xi_prime = Scalar.q_power(2 * n + 2) if kind == "a2odd" else self.xi
        # negative-index offset in the phase exponents of the weight-zero
        # band; for c1 the offset 2n+2 (with (-q)**(2n+2) = xi) is the one
        # that makes the spectral decomposition hold, not 2n
        self.bar_shift = 2 * n + 2 if kind == "c1" else self.N

        two = (2,) * (n - 1)
        if kind == "a2even":
            self.marks = (1,) + two + (2,)
            self.comarks = (2,) + two + (1,)
        elif kind == "a2odd":
            self.marks = (1, 1) + two[:-1] + (1,)
            self.comarks = (1, 1) + two[:-1] + (2,)
        elif kind == "a2odd-dagger":
            self.marks = (1,) + two[:-1] + (1, 1)
            self.comarks = (2,) + two[:-1] + (1, 1)
        else:
            self.marks = (1,) + two + (1,)
            self.comarks = (1,) * (n + 1)
        self.bilinear_scale = Fraction(1, 2) if kind == "c1" else _F1

        roots: List[Weight] = []
        if kind == "a2odd":
            roots.append(_wsum(n, (-1, _eps(n, 1)), (-1, _eps(n, 2))))
        else:
            roots.append(_eps(n, 1, -2))
        for i in range(1, n):
            roots.append(_wsum(n, (1, _eps(n, i)), (-1, _eps(n, i + 1))))
        if kind == "a2even":
            roots.append(_eps(n, n))
        elif kind == "a2odd-dagger":
            roots.append(_wsum(n, (1, _eps(n, n - 1)), (1, _eps(n, n))))
        else:
            roots.append(_eps(n, n, 2))
        self.simple_roots = tuple(roots)

        d = []
        for alpha in roots:
            norm = _dot(alpha, alpha)
            if norm.denominator != 1:
                raise AssertionError("nonintegral root length")
            d.append(int(norm))
        self.d = tuple(d)

    # -- index-set structure -------------------------------------------

    def precedes(self, a: int, b: int) -> bool:
        return self.order_index[a] < self.order_index[b]

    def bar(self, j: int) -> int:
        if j > 0:
            return j
        if j == 0:
            return self.n + 1
        return j + self.bar_shift

    def epsilon_sign(self, j: int) -> Scalar:
        """The normalization constant attached to index j in the R-matrix."""
        if self.kind == "a2odd-dagger" or j > 0:
            return ONE
        if j == 0:
            return quantum_integer(2, self.d[self.n])
        return Scalar.from_int(-1)

    def weight_of_index(self, j: int) -> Weight:
        if j == 0:
            return (_F0,) * self.n
        return _eps(self.n, j) if j > 0 else _eps(self.n, -j, -1)

    # -- pairings --------------------------------------------------------

    def coroot_pairing(self, i: int, mu: Weight) -> int:
        alpha = self.simple_roots[i]
        v = 2 * _dot(alpha, mu) / _dot(alpha, alpha)
        if v.denominator != 1:
            raise AssertionError(f"nonintegral coroot pairing <h_{i}, {mu}>")
        return int(v)

    def t_eigenvalue(self, i: int, mu: Weight) -> Scalar:
        return Scalar.s_power(self.d[i] * self.coroot_pairing(i, mu))

    def q_i(self, i: int) -> Scalar:
        return Scalar.s_power(self.d[i])

    def cartan_entry(self, i: int, j: int) -> int:
        return self.coroot_pairing(i, self.simple_roots[j])

    # -- weights of the wedge quotients -----------------------------------

    def fundamental_weight(self, k: int) -> Weight:
        if not 0 <= k <= self.n:
            raise ValueError(f"fundamental weight index must lie in 0..{self.n}")
        return tuple(_F1 if m < k else _F0 for m in range(self.n))

    def conjugate_weight(self) -> Weight:
        # e_1 + ... + e_{n-1} - e_n, the partner of the n-th weight in type D
        return tuple(_F1 if m < self.n - 1 else -_F1 for m in range(self.n))

    def wedge_highest_weights(self, k: int) -> List[Weight]:
        """Classical highest weights of the k-th wedge quotient, in order."""
        if not 1 <= k <= self.n:
            raise ValueError(f"wedge degree must lie in 1..{self.n}")
        if self.kind == "a2odd":
            return [self.fundamental_weight(k - 2 * l) for l in range(k // 2 + 1)]
        if self.kind == "a2odd-dagger" and k == self.n:
            return [self.fundamental_weight(k), self.conjugate_weight()]
        return [self.fundamental_weight(k)]

    def wedge_dimension(self, k: int) -> int:
        if self.kind == "c1":
            low = math.comb(2 * self.n, k - 2) if k >= 2 else 0
            return math.comb(2 * self.n, k) - low
        return math.comb(len(self.J), k)


def positive_roots(classical: str, n: int) -> List[Weight]:
    roots: List[Weight] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(_wsum(n, (1, _eps(n, i)), (-1, _eps(n, j))))
            roots.append(_wsum(n, (1, _eps(n, i)), (1, _eps(n, j))))
    if classical == "B":
        roots.extend(_eps(n, i) for i in range(1, n + 1))
    elif classical == "C":
        roots.extend(_eps(n, i, 2) for i in range(1, n + 1))
    elif classical != "D":
        raise ValueError(f"unknown classical family {classical!r}")
    return roots


def weyl_rho(classical: str, n: int) -> Weight:
    out = [_F0] * n
    for alpha in positive_roots(classical, n):
        for m in range(n):
            out[m] += alpha[m] / 2
    return tuple(out)


def weyl_dimension(classical: str, n: int, lam: Weight) -> int:
    """Dimension of the irreducible highest weight module for B_n/C_n/D_n."""
    rho = weyl_rho(classical, n)
    total = _F1
    for alpha in positive_roots(classical, n):
        num = _dot(_wsum(n, (1, lam), (1, rho)), alpha)
        den = _dot(rho, alpha)
        total *= num / den
    if total.denominator != 1:
        raise AssertionError("nonintegral module dimension")
    return int(total)


def dominant_check(classical: str, n: int, lam: Weight) -> bool:
    """Dominance in the orthogonal coordinates: lam_1 >= ... >= lam_n (>= 0),
    with the last entry allowed negative only in type D."""
    for a, b in itertools.pairwise(lam):
        if a < b:
            return False
    if classical == "D":
        return lam[n - 1] >= -lam[n - 2] if n >= 2 else True
    return lam[n - 1] >= 0
