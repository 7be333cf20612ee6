"""Rational functions in one indeterminate over the rationals.

The induction parameter of a principal series enters every formula linearly,
and the classification has to *discover* the special parameter values rather
than assume them.  To make that possible the solver runs its linear algebra
over the field Q(lam) of rational functions in a formal parameter ``lam``.

A univariate polynomial is a tuple of Fractions, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.  A :class:`RatFunc`
is a reduced fraction of two such polynomials with monic denominator, so
structural equality is semantic equality.

RatFunc interoperates with int and Fraction operands on either side, which
lets the rest of the package stay agnostic about whether a scalar is a plain
rational number or a function of the parameter.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

Coeffs = tuple[Fraction, ...]

_ZERO: Coeffs = ()
_ONE: Coeffs = (Fraction(1),)


def _trim(cs: list[Fraction]) -> Coeffs:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: Coeffs, b: Coeffs) -> Coeffs:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pneg(a: Coeffs) -> Coeffs:
    return tuple(-c for c in a)


def _pmul(a: Coeffs, b: Coeffs) -> Coeffs:
    if not a or not b:
        return _ZERO
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _pscale(a: Coeffs, c: Fraction) -> Coeffs:
    if c == 0:
        return _ZERO
    return tuple(x * c for x in a)


def _pdivmod(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    inv = 1 / b[-1]
    while len(r) >= len(b):
        c = r[-1] * inv
        d = len(r) - len(b)
        q[d] = c
        for i, cb in enumerate(b):
            r[d + i] -= c * cb
        while r and r[-1] == 0:
            r.pop()
        if not r:
            break
    return _trim(q), _trim(r)


def _pgcd(a: Coeffs, b: Coeffs) -> Coeffs:
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return _ZERO
    return _pscale(a, 1 / a[-1])  # monic


def _peval(a: Coeffs, x: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(a):
        out = out * x + c
    return out


def poly_rational_roots(a: Coeffs) -> list[Fraction]:
    """All rational roots of a nonzero polynomial, ascending."""
    if not a:
        raise ZeroDivisionError("zero polynomial has every root")
    # strip the root at 0 carried by low-order zero coefficients
    low = 0
    while a[low] == 0:
        low += 1
    roots = set()
    if low:
        roots.add(Fraction(0))
    body = a[low:]
    if len(body) > 1:
        # integerize, then apply the rational root theorem
        den = 1
        for c in body:
            den = den * c.denominator // int_gcd(den, c.denominator)
        ints = [int(c * den) for c in body]
        a0, lead = abs(ints[0]), abs(ints[-1])
        for p in _divisors(a0):
            for q in _divisors(lead):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if _peval(body, cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def _divisors(m: int) -> list[int]:
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
        d += 1
    return sorted(out)


class RatFunc:
    """An element of Q(lam), stored as a reduced num/den pair."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, RatFunc):
            nc, dc = num.num, num.den
        else:
            nc = self._coerce_coeffs(num)
            dc = _ONE
        if den is not None:
            d2 = den.num if isinstance(den, RatFunc) else self._coerce_coeffs(den)
            if isinstance(den, RatFunc):
                nc = _pmul(nc, den.den)
            nc, dc = nc, _pmul(dc, d2)
        if not dc:
            raise ZeroDivisionError("rational function with zero denominator")
        if not nc:
            dc = _ONE
        else:
            g = _pgcd(nc, dc)
            if len(g) > 1:
                nc = _pdivmod(nc, g)[0]
                dc = _pdivmod(dc, g)[0]
            lead = dc[-1]
            if lead != 1:
                nc = _pscale(nc, 1 / lead)
                dc = _pscale(dc, 1 / lead)
        object.__setattr__(self, "num", nc)
        object.__setattr__(self, "den", dc)

    @staticmethod
    def _coerce_coeffs(v) -> Coeffs:
        if isinstance(v, tuple):
            return _trim([Fraction(c) for c in v])
        if isinstance(v, (int, Fraction)):
            f = Fraction(v)
            return (f,) if f != 0 else _ZERO
        raise TypeError(f"cannot build RatFunc from {type(v).__name__}")

    def __setattr__(self, *_):
        raise AttributeError("RatFunc is immutable")

    # -- predicates ------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and self.den == _ONE

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num[0] if self.num else Fraction(0)

    # -- arithmetic ------------------------------------------------------

    @classmethod
    def _raw(cls, num: Coeffs, den: Coeffs) -> "RatFunc":
        out = object.__new__(cls)
        object.__setattr__(out, "num", num)
        object.__setattr__(out, "den", den)
        return cls(out)  # re-run reduction

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = _padd(_pmul(self.num, o.den), _pmul(o.num, self.den))
        return RatFunc._raw(num, _pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(_pneg(self.num), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc._raw(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc._raw(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return 1 / (self ** (-k))
        out = RatFunc(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den))

    # -- evaluation ------------------------------------------------------

    def subs(self, value) -> Fraction:
        """Evaluate at a rational point.  Raises if the denominator vanishes."""
        x = Fraction(value)
        d = _peval(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {value}")
        return _peval(self.num, x) / d

    def numerator_roots(self) -> list[Fraction]:
        """Rational roots of the numerator (the zeros of this function)."""
        if not self.num:
            raise ZeroDivisionError("zero function")
        return poly_rational_roots(self.num)

    # -- display ---------------------------------------------------------

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        n = _fmt_poly(self.num)
        if self.den == _ONE:
            return n
        return f"({n})/({_fmt_poly(self.den)})"


def _fmt_poly(cs: Coeffs, var: str = "lam") -> str:
    if not cs:
        return "0"
    parts = []
    for i, c in enumerate(cs):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            parts.append(f"{head}{var}" + (f"^{i}" if i > 1 else ""))
    return " + ".join(parts) if parts else "0"


#: the generator of Q(lam)
LAM = RatFunc((Fraction(0), Fraction(1)))


def as_fraction(c) -> Fraction:
    """Convert an int/Fraction/constant RatFunc scalar to a Fraction."""
    if isinstance(c, RatFunc):
        return c.constant_value()
    return Fraction(c)


def subs_scalar(c, value) -> Fraction:
    """Specialize a scalar that may or may not depend on the parameter."""
    if isinstance(c, RatFunc):
        return c.subs(value)
    return Fraction(c)


def scalar_is_generic(c) -> bool:
    """True when the scalar genuinely involves the formal parameter."""
    return isinstance(c, RatFunc) and not c.is_constant()
