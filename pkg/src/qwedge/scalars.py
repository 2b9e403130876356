"""Exact arithmetic in the ground field K = Q(s), with q = s**2.

Working over Q(s) instead of Q(q) makes half-integer powers of q honest ring
elements: q**(1/2) = s, and the quantum integer [2] attached to a short root
of squared length 1 is s + 1/s.

A Laurent polynomial in s is stored as a dict {exponent: Fraction}, zero
coefficients never stored, the zero polynomial is {}. A field element
(Scalar) is a quotient num/den of two such dicts kept canonical:

  * den is an ordinary polynomial (exponents >= 0) with den[0] == 1,
  * num and den share no polynomial factor (all s-powers live in num).

Equality of canonical forms is plain structural equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

Poly = Dict[int, Fraction]

_F0 = Fraction(0)
_F1 = Fraction(1)


def p_const(c) -> Poly:
    c = Fraction(c)
    return {0: c} if c else {}


def p_monomial(c, e: int) -> Poly:
    c = Fraction(c)
    return {e: c} if c else {}


def p_add(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, _F0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def p_neg(a: Poly) -> Poly:
    return {e: -c for e, c in a.items()}


def p_scale(a: Poly, c: Fraction) -> Poly:
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def p_shift(a: Poly, m: int) -> Poly:
    if m == 0:
        return dict(a)
    return {e + m: c for e, c in a.items()}


def p_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            v = out.get(e, _F0) + ca * cb
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def p_divmod(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    # ordinary polynomial division, exponents must be >= 0
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = max(b)
    lb = b[db]
    rem = dict(a)
    quo: Poly = {}
    while rem:
        dr = max(rem)
        if dr < db:
            break
        c = rem[dr] / lb
        e = dr - db
        quo[e] = c
        for eb, cb in b.items():
            ee = eb + e
            v = rem.get(ee, _F0) - c * cb
            if v:
                rem[ee] = v
            else:
                rem.pop(ee, None)
    return quo, rem


def p_gcd(a: Poly, b: Poly) -> Poly:
    # monic gcd over Q[s]
    while b:
        a, b = b, p_divmod(a, b)[1]
    if not a:
        return {}
    lead = a[max(a)]
    return p_scale(a, 1 / lead) if lead != 1 else a


def p_eval(a: Poly, s0: Fraction) -> Fraction:
    total = _F0
    for e, c in a.items():
        total += c * s0 ** e
    return total


_DEN_ONE: Poly = {0: _F1}


def _canonical(num: Poly, den: Poly) -> Tuple[Poly, Poly]:
    if not den:
        raise ZeroDivisionError("scalar division by zero")
    if not num:
        return {}, dict(_DEN_ONE)
    dmin = min(den)
    if dmin:
        den = p_shift(den, -dmin)
        num = p_shift(num, -dmin)
    nmin = min(num)
    num0 = p_shift(num, -nmin) if nmin else num
    if len(den) > 1:
        g = p_gcd(num0, den)
        if max(g) > 0:
            num0 = p_divmod(num0, g)[0]
            den = p_divmod(den, g)[0]
    c = den[0]
    if c != 1:
        inv = 1 / c
        den = p_scale(den, inv)
        num0 = p_scale(num0, inv)
    num = p_shift(num0, nmin) if nmin else num0
    return num, den


class Scalar:
    """Element of Q(s) in canonical form; immutable."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num: Poly, den: Poly = None, reduce: bool = True):
        if den is None:
            den = dict(_DEN_ONE)
        if reduce:
            num, den = _canonical(num, den)
        self.num = num
        self.den = den
        self._key = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def from_int(v) -> "Scalar":
        return Scalar(p_const(v), reduce=False)

    @staticmethod
    def s_power(m: int, coeff=1) -> "Scalar":
        return Scalar(p_monomial(coeff, m), reduce=False)

    @staticmethod
    def q_power(m: int, coeff=1) -> "Scalar":
        # q = s**2
        return Scalar(p_monomial(coeff, 2 * m), reduce=False)

    @staticmethod
    def minus_q_power(m: int) -> "Scalar":
        # (-q)**m for any integer m, exactly (-1)**m * s**(2m)
        return Scalar(p_monomial(-1 if m % 2 else 1, 2 * m), reduce=False)

    # -- structure ----------------------------------------------------

    def key(self):
        if self._key is None:
            self._key = (
                tuple(sorted(self.num.items())),
                tuple(sorted(self.den.items())),
            )
        return self._key

    def __hash__(self):
        return hash(self.key())

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_int(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __bool__(self):
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == _DEN_ONE and self.den == _DEN_ONE

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == _DEN_ONE and other.den == _DEN_ONE:
            return Scalar(p_add(self.num, other.num), reduce=False)
        num = p_add(p_mul(self.num, other.den), p_mul(other.num, self.den))
        return Scalar(num, p_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(p_neg(self.num), self.den, reduce=False)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return _coerce(other).__sub__(self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.den == _DEN_ONE and other.den == _DEN_ONE:
            return Scalar(p_mul(self.num, other.num), reduce=False)
        return Scalar(p_mul(self.num, other.num), p_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(p_mul(self.num, other.den), p_mul(self.den, other.num))

    def __rtruediv__(self, other):
        return _coerce(other).__truediv__(self)

    def __pow__(self, m: int):
        if m == 0:
            return ONE
        base = self
        if m < 0:
            base = Scalar(self.den, self.num)
            m = -m
        out = base
        for _ in range(m - 1):
            out = out * base
        return out

    # -- analysis at s = 0 ---------------------------------------------

    def order(self) -> int:
        """Vanishing order at s = 0 (negative for a pole)."""
        if not self.num:
            raise ValueError("order of zero scalar is undefined")
        return min(self.num)

    def order_and_value(self) -> Tuple[int, Fraction]:
        """(k, c) with self = s**k (c + O(s)), c != 0."""
        k = self.order()
        return k, self.num[k] / self.den[0]

    def value_at_zero(self) -> Fraction:
        """Value at s = 0; requires order >= 0."""
        if not self.num:
            return _F0
        if min(self.num) < 0:
            raise ValueError("pole at s = 0")
        return self.num.get(0, _F0) / self.den[0]

    def eval_at(self, s0: Fraction) -> Fraction:
        d = p_eval(self.den, s0)
        if not d:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return p_eval(self.num, s0) / d

    # -- display --------------------------------------------------------

    def __repr__(self):
        if not self.num:
            return "0"
        parts = []
        for e in sorted(self.num):
            c = self.num[e]
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*s" if c != 1 else "s")
            else:
                parts.append(f"{c}*s^{e}" if c != 1 else f"s^{e}")
        num = " + ".join(parts).replace("+ -", "- ")
        if self.den == _DEN_ONE:
            return num
        dparts = []
        for e in sorted(self.den):
            c = self.den[e]
            if e == 0:
                dparts.append(f"{c}")
            else:
                dparts.append(f"{c}*s^{e}" if c != 1 else f"s^{e}")
        return f"({num}) / ({' + '.join(dparts)})"

    def to_json(self):
        return {
            "num": [[e, str(c)] for e, c in sorted(self.num.items())],
            "den": [[e, str(c)] for e, c in sorted(self.den.items())],
        }


def _coerce(v):
    if isinstance(v, Scalar):
        return v
    if isinstance(v, (int, Fraction)):
        return Scalar.from_int(v)
    return NotImplemented


ZERO = Scalar({}, reduce=False)
ONE = Scalar({0: _F1}, reduce=False)


def quantum_integer(k: int, d: int) -> Scalar:
    """[k]_i = (q_i**k - q_i**-k) / (q_i - q_i**-1) with q_i = s**d.

    Computed as the balanced power sum, so no division is involved.
    """
    if d <= 0:
        raise ValueError("root length exponent must be positive")
    if k == 0:
        return ZERO
    sign = 1
    if k < 0:
        sign, k = -1, -k
    coeffs: Poly = {}
    for j in range(k):
        e = d * (k - 1 - 2 * j)
        coeffs[e] = coeffs.get(e, _F0) + sign
    return Scalar(coeffs, reduce=False)


def quantum_factorial(k: int, d: int) -> Scalar:
    """[k]_i! = [1][2]...[k] with q_i = s**d."""
    if k < 0:
        raise ValueError("factorial of negative quantum integer")
    out = ONE
    for j in range(2, k + 1):
        out = out * quantum_integer(j, d)
    return out


class ZPoly:
    """Laurent polynomial in the spectral variable z over Scalar."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[int, Scalar] = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @staticmethod
    def const(c: Scalar) -> "ZPoly":
        return ZPoly({0: c})

    @staticmethod
    def z_power(m: int, c: Scalar = None) -> "ZPoly":
        return ZPoly({m: ONE if c is None else c})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ZPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted((e, c.key()) for e, c in self.coeffs.items())))

    def __add__(self, other):
        if isinstance(other, Scalar):
            other = ZPoly.const(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return ZPoly(out)

    def __neg__(self):
        return ZPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if isinstance(other, Scalar):
            other = ZPoly.const(other)
        return self.__add__(other.__neg__())

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if not other:
                return ZPoly({})
            return ZPoly({e: c * other for e, c in self.coeffs.items()})
        out: Dict[int, Scalar] = {}
        for ea, ca in self.coeffs.items():
            for eb, cb in other.coeffs.items():
                e = ea + eb
                v = ca * cb
                if e in out:
                    v = out[e] + v
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return ZPoly(out)

    __rmul__ = __mul__

    def evaluate(self, r: Scalar) -> Scalar:
        out = ZERO
        for e, c in self.coeffs.items():
            out = out + c * r ** e
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"({c})*z^{e}" if e else f"({c})" for e, c in sorted(self.coeffs.items())
        )

    def to_json(self):
        return [[e, c.to_json()] for e, c in sorted(self.coeffs.items())]
