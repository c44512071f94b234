"""Exact Gaussian rationals ``a + b*i`` with ``a, b`` rational.

Both parts are ``gmpy2.mpq``; no floating point is ever produced.
"""

from fractions import Fraction
from numbers import Rational

from gmpy2 import mpq

_ZERO = mpq(0)
_ONE = mpq(1)


def _q(x):
    if type(x) is type(_ZERO):
        return x
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Rational):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip().replace("−", "-")
        try:
            return mpq(s)
        except ValueError:
            raise ValueError(f"not a rational literal: {x!r}") from None
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def _fmt_q(x):
    return str(x)


class Scalar:
    """Immutable exact complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("Scalar(re=Scalar, im=...) is ambiguous")
            self.re, self.im = re.re, re.im
            return
        if isinstance(re, str) and im == 0:
            parsed = Scalar.parse(re)
            self.re, self.im = parsed.re, parsed.im
            return
        self.re = _q(re)
        self.im = _q(im)

    @classmethod
    def _make(cls, re, im):
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Scalar):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        if isinstance(value, float):
            raise TypeError("floats are not exact; pass a Fraction or a string")
        return cls._make(_q(value), _ZERO)

    @classmethod
    def parse(cls, text):
        from .parsing import parse_scalar

        return parse_scalar(text)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return Scalar._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return Scalar._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __neg__(self):
        return Scalar._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Scalar._make(a * c, _ZERO)
        return Scalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("inverse of zero scalar")
            return Scalar._make(_ONE / a, _ZERO)
        n = a * a + b * b
        return Scalar._make(a / n, -b / n)

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            try:
                other = Scalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return Scalar._make(self.re, -self.im)

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)) or type(other) is type(_ZERO):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self):
        return not self.im

    def as_fraction(self):
        if self.im:
            raise ValueError(f"{self} is not real")
        return Fraction(int(self.re.numerator), int(self.re.denominator))

    # -- text -------------------------------------------------------------
    def __str__(self):
        re, im = self.re, self.im
        if not im:
            return _fmt_q(re)
        if abs(im) == 1:
            imag = "i"
        else:
            imag = f"{_fmt_q(abs(im))}*i"
        if not re:
            return imag if im > 0 else "-" + imag
        return f"{_fmt_q(re)}{'+' if im > 0 else '-'}{imag}"

    def __repr__(self):
        return f"Scalar('{self}')"

    def needs_parens(self):
        """True when the text form is a sum and must be bracketed as a factor."""
        return bool(self.re) and bool(self.im)


ZERO = Scalar._make(_ZERO, _ZERO)
ONE = Scalar._make(_ONE, _ZERO)
I_UNIT = Scalar._make(_ZERO, _ONE)


def S(value, im=0):
    """Shorthand constructor: ``S(1, 2)`` is ``1 + 2i``, ``S('3/4')`` is 3/4."""
    if im:
        return Scalar(value, im)
    return Scalar.coerce(value)
