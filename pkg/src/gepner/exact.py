"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_d).

Rationals are plain :class:`fractions.Fraction`.  A :class:`Cyclotomic` stores
an element of Q(zeta_d) in the power basis 1, z, ..., z^(phi(d)-1), reduced
modulo the d-th cyclotomic polynomial.  Arithmetic between different orders
lifts both operands to the lcm of the orders; :meth:`Cyclotomic.simplify`
descends to the smallest order whose field contains the value.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

MAX_ORDER = 10000

Rational = Fraction


def _check_order(d):
    if not isinstance(d, int) or isinstance(d, bool):
        raise TypeError(f"order must be an int, got {d!r}")
    if d <= 0:
        raise ValueError(f"order must be positive, got {d}")
    if d > MAX_ORDER:
        raise ValueError(f"order {d} exceeds the supported bound {MAX_ORDER}")


def _divisors(d):
    return [e for e in range(1, d + 1) if d % e == 0]


def _poly_divexact(num, den):
    # integer polys, low-to-high coefficients, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, b in enumerate(den):
                num[k + i] -= c * b
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(d: int) -> tuple:
    """Integer coefficients of Phi_d, lowest degree first."""
    _check_order(d)
    p = [-1] + [0] * (d - 1) + [1]
    for e in _divisors(d)[:-1]:
        p = _poly_divexact(p, cyclotomic_polynomial(e))
    return tuple(p)


def euler_phi(d: int) -> int:
    return len(cyclotomic_polynomial(d)) - 1


@lru_cache(maxsize=None)
def _power_table(d):
    """z^k reduced mod Phi_d for k = 0..d-1, as integer tuples."""
    phi = cyclotomic_polynomial(d)
    m = len(phi) - 1
    rows = []
    cur = [0] * m
    cur[0] = 1
    for _ in range(d):
        rows.append(tuple(cur))
        # multiply by z
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(m):
                cur[i] -= top * phi[i]
    return tuple(rows)


def _reduce(d, raw):
    """Reduce a coefficient list in z (any length) into the power basis."""
    m = euler_phi(d)
    out = [Fraction(0)] * m
    table = _power_table(d)
    for k, c in enumerate(raw):
        if not c:
            continue
        if k < m:
            out[k] += c
        else:
            for i, t in enumerate(table[k % d]):
                if t:
                    out[i] += c * t
    return out


class Cyclotomic:
    """Element of Q(zeta_order) in the power basis."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        _check_order(order)
        m = euler_phi(order)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > m:
            cs = _reduce(order, cs)
        cs += [Fraction(0)] * (m - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    # constructors
    @classmethod
    def rational(cls, q, order=1):
        return cls(order, [Fraction(q)])

    @classmethod
    def root(cls, d, k=1):
        _check_order(d)
        return cls(d, _power_table(d)[k % d])

    @staticmethod
    def coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return Cyclotomic(1, [x])
        raise TypeError(f"cannot treat {type(x).__name__} as a cyclotomic scalar")

    # order handling
    def lift(self, order):
        """The same value written in Q(zeta_order); needs self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"order {self.order} does not divide {order}")
        step = order // self.order
        raw = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for k, c in enumerate(self.coeffs):
            raw[k * step] = c
        return Cyclotomic(order, _reduce(order, raw))

    def _common(self, other):
        other = Cyclotomic.coerce(other)
        if other.order == self.order:
            return self, other
        L = self.order * other.order // gcd(self.order, other.order)
        _check_order(L)
        return self.lift(L), other.lift(L)

    def simplify(self):
        """Rewrite in the smallest order whose field contains this value."""
        from .linalg import solve_or_none

        for e in _divisors(self.order):
            if e == self.order:
                return self
            m = euler_phi(e)
            cols = [Cyclotomic.root(e, k).lift(self.order).coeffs for k in range(m)]
            mat = [[cols[j][i] for j in range(m)] for i in range(len(self.coeffs))]
            sol = solve_or_none(mat, list(self.coeffs))
            if sol is not None:
                return Cyclotomic(e, sol)
        return self

    # predicates and conversions
    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        s = self.simplify() if not self.is_rational() else self
        if not s.is_rational():
            raise ValueError(f"{self} is not rational")
        return s.coeffs[0]

    def __bool__(self):
        return any(self.coeffs)

    # arithmetic
    def __add__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Cyclotomic(self.order, [c * other for c in self.coeffs])
        try:
            a, b = self._common(other)
        except TypeError:
            return NotImplemented
        raw = [Fraction(0)] * (2 * len(a.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        raw[i + j] += x * y
        return Cyclotomic(a.order, _reduce(a.order, raw))

    __rmul__ = __mul__

    def inverse(self):
        from .linalg import solve_or_none

        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic")
        d, m = self.order, len(self.coeffs)
        # columns: self * z^k
        cols = [(self * Cyclotomic.root(d, k)).coeffs for k in range(m)]
        mat = [[cols[j][i] for j in range(m)] for i in range(m)]
        rhs = [Fraction(1)] + [Fraction(0)] * (m - 1)
        return Cyclotomic(d, solve_or_none(mat, rhs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.order, [c / other for c in self.coeffs])
        try:
            other = Cyclotomic.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Cyclotomic(self.order, [1])
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        d = self.order
        raw = [Fraction(0)] * d
        for k, c in enumerate(self.coeffs):
            raw[(-k) % d] += c
        return Cyclotomic(d, _reduce(d, raw))

    # comparison
    def __eq__(self, other):
        try:
            a, b = self._common(other)
        except (TypeError, ValueError):
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        s = self.simplify()
        if s.order <= 2:
            return hash(s.coeffs[0])
        return hash((s.order, s.coeffs))

    # display
    def embed(self, bits=53):
        """Floating complex approximation (display only)."""
        with mpmath.workprec(bits):
            z = mpmath.expjpi(mpmath.mpf(2) / self.order)
            acc = mpmath.mpc(0)
            for k, c in enumerate(self.coeffs):
                if c:
                    acc += mpmath.mpf(c.numerator) / c.denominator * z ** k
            return acc

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Cyclotomic({self.order}, {[str(c) for c in self.coeffs]})"


def cyc_root(d: int, k: int = 1) -> Cyclotomic:
    """zeta_d^k."""
    return Cyclotomic.root(d, k)


# named constants in Q(zeta_12)
def omega():
    return Cyclotomic.root(3, 1)


def imag_unit():
    return Cyclotomic.root(12, 3)


def sqrt3():
    return Cyclotomic.root(12, 1) + Cyclotomic.root(12, 11)


def sqrt_minus3():
    return 2 * omega() + 1


def split_eisenstein(z):
    """Write z in Q(sqrt(-3)) as a + b*sqrt(-3); returns (a, b)."""
    if not isinstance(z, Cyclotomic):
        return Fraction(z), Fraction(0)
    s = z.simplify()
    if s.order == 1:
        return s.coeffs[0], Fraction(0)
    if s.order == 3:
        c0, c1 = s.coeffs
        # c0 + c1*w with w = (-1 + sqrt(-3))/2
        return c0 - c1 / 2, c1 / 2
    raise ValueError(f"{z} does not lie in Q(sqrt(-3))")


# ---------------------------------------------------------------- text format

def _fmt_frac(q):
    return str(q)


def format_scalar(x) -> str:
    """Serialize a rational or cyclotomic scalar.

    Rationals print as ``p/q``; other values as ``c0 + c1*z + ... [zeta<d>]``.
    """
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return _fmt_frac(Fraction(x))
    if x.order <= 2 or x.is_rational():
        return _fmt_frac(x.coeffs[0])
    parts = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        if not mono:
            body = _fmt_frac(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{_fmt_frac(abs(c))}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return f"{s} [zeta{x.order}]"


_TAG = re.compile(r"^(.*)\[zeta(\d+)\]\s*$")
_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)\s*\*?\s*)?(z(?:\^(\d+))?)?$")


def parse_scalar(text: str):
    """Inverse of :func:`format_scalar`.  Returns Fraction or Cyclotomic."""
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return Fraction(text)
        raise ValueError(f"scalar must be a string, got {text!r}")
    t = text.strip()
    m = _TAG.match(t)
    if not m:
        try:
            return Fraction(t)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed scalar {text!r}") from exc
    body, d = m.group(1).strip(), int(m.group(2))
    _check_order(d)
    raw = [Fraction(0)] * d
    compact = body.replace(" ", "")
    tokens = re.findall(r"[+-]?[^+-]+", compact)
    if not tokens or "".join(tokens) != compact:
        raise ValueError(f"malformed scalar {text!r}")
    for tok in tokens:
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("+-")
        tm = _TERM.match(tok)
        if not tm or not (tm.group(1) or tm.group(2)):
            raise ValueError(f"malformed term {tok!r} in {text!r}")
        c = Fraction(tm.group(1)) if tm.group(1) else Fraction(1)
        k = 0
        if tm.group(2):
            k = int(tm.group(3)) if tm.group(3) else 1
        raw[k % d] += sign * c
    return Cyclotomic(d, _reduce(d, raw))


def as_scalar(x):
    """Normalize ints to Fraction, leave Fraction/Cyclotomic alone."""
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (Fraction, Cyclotomic)):
        return x
    raise TypeError(f"unsupported scalar type {type(x).__name__}")


def is_integer(x) -> bool:
    if isinstance(x, Cyclotomic):
        if not x.simplify().is_rational():
            return False
        x = x.to_rational()
    return Fraction(x).denominator == 1
