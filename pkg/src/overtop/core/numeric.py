"""Exact scalar domains and the arbitrary-precision bridge.

Three coefficient domains are used throughout the package:

* ``Fraction`` (rational) -- exact, canonical, unbounded;
* :class:`Surd2` -- exact elements ``a + b*sqrt2`` of the field Q(sqrt2);
* ``mpmath.mpf`` (BigReal) -- arbitrary precision reals, evaluated inside
  :func:`working_precision` which adds :data:`GUARD_DIGITS` to the requested
  digit count.

Complex values only ever appear as ``mpmath.mpc`` inside solver outputs.
"""
import re
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union, Any

import mpmath

from ..errors import ParseError, ZeroDenominatorError, DomainError


GUARD_DIGITS = 20

BigReal = mpmath.mpf
Scalar = Union[int, Fraction, "Surd2", mpmath.mpf, mpmath.mpc]


def working_precision(digits: int):
    return mpmath.workdps(digits + GUARD_DIGITS)


def set_guard_digits(guard: int) -> None:
    global GUARD_DIGITS
    if guard < 0:
        raise DomainError("guard digits must be non-negative, got {}".format(guard))
    GUARD_DIGITS = int(guard)


@total_ordering
class Surd2:
    __slots__ = ("_rat", "_surd")

    def __init__(self, rat: Union[int, Fraction] = 0, surd: Union[int, Fraction] = 0):
        if not isinstance(rat, Rational) or not isinstance(surd, Rational):
            raise TypeError("Surd2 parts must be rational, got {!r} and {!r}".format(rat, surd))
        self._rat = Fraction(rat)
        self._surd = Fraction(surd)

    @property
    def rat_part(self) -> Fraction:
        return self._rat

    @property
    def surd_part(self) -> Fraction:
        return self._surd

    @property
    def is_rational(self) -> bool:
        return self._surd == 0

    @classmethod
    def sqrt2(cls) -> "Surd2":
        return cls(0, 1)

    @staticmethod
    def _coerce(other: Any):
        if isinstance(other, Surd2):
            return other
        if isinstance(other, Rational):
            return Surd2(other, 0)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Surd2(self._rat + other._rat, self._surd + other._surd)

    __radd__ = __add__

    def __neg__(self):
        return Surd2(-self._rat, -self._surd)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Surd2(self._rat - other._rat, self._surd - other._surd)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._rat, self._surd, other._rat, other._surd
        return Surd2(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "Surd2":
        return Surd2(self._rat, -self._surd)

    def norm(self) -> Fraction:
        return self._rat * self._rat - 2 * self._surd * self._surd

    def inv(self) -> "Surd2":
        n = self.norm()
        if n == 0:
            # the norm vanishes only at zero since sqrt2 is irrational
            raise ZeroDivisionError("Surd2 division by zero")
        return Surd2(self._rat / n, -self._surd / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** -n
        result, base = Surd2(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sign(self) -> int:
        a, b = self._rat, self._surd
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a^2 against 2 b^2
        return sa if a * a > 2 * b * b else sb

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self):
        return self._rat != 0 or self._surd != 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._rat == other._rat and self._surd == other._surd

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return (self - other).sign() < 0

    def __hash__(self):
        if self._surd == 0:
            return hash(self._rat)
        return hash((self._rat, self._surd))

    def upper_bound(self) -> Fraction:
        """A rational number no smaller than ``abs(self)``."""
        return abs(self._rat) + abs(self._surd) * Fraction(3, 2)

    def _mpmath_(self, prec, rounding):
        with mpmath.workprec(prec + 16):
            return to_bigreal(self._rat) + to_bigreal(self._surd) * mpmath.sqrt(2)

    def __float__(self):
        with mpmath.workdps(30):
            return float(self._mpmath_(mpmath.mp.prec, "n"))

    def __str__(self):
        return format_surd(self)

    def __repr__(self):
        return "Surd2({!r}, {!r})".format(self._rat, self._surd)


def surd_to_bigreal(s: Surd2, digits: int) -> mpmath.mpf:
    if digits < 10:
        raise DomainError("surd_to_bigreal needs at least 10 digits, got {}".format(digits))
    with working_precision(digits):
        return to_bigreal(s)


def to_bigreal(x: Scalar):
    """Converts any scalar to mpmath at the current working precision."""
    if isinstance(x, (mpmath.mpf, mpmath.mpc)):
        return x
    if hasattr(x, "_mpf_"):
        # mpmath constants such as mpmath.pi
        return mpmath.mpf(x)
    if isinstance(x, Surd2):
        return to_bigreal(x.rat_part) + to_bigreal(x.surd_part) * mpmath.sqrt(2)
    if isinstance(x, int):
        return mpmath.mpf(x)
    if isinstance(x, Rational):
        return mpmath.mpf(x.numerator) / x.denominator
    if isinstance(x, (float, complex, str)):
        return mpmath.mpmathify(x)
    raise TypeError("cannot convert {!r} to BigReal".format(x))


def rationalize(x: mpmath.mpf) -> Fraction:
    """Exact rational value of a finite binary mpf."""
    if not mpmath.isfinite(x):
        raise DomainError("cannot rationalize {}".format(x))
    negative, man, exp, _ = mpmath.mpf(x)._mpf_
    man = -int(man) if negative else int(man)
    if exp >= 0:
        return Fraction(man * 2 ** exp)
    return Fraction(man, 2 ** -exp)


def closest_rational(x, tol: Union[float, Fraction, mpmath.mpf]) -> Fraction:
    """Smallest-denominator best approximation of ``x`` within ``tol``."""
    exact = x if isinstance(x, Fraction) else rationalize(to_bigreal(x))
    tol = tol if isinstance(tol, Rational) else rationalize(to_bigreal(tol))
    if tol < 0:
        raise DomainError("tolerance must be non-negative, got {}".format(tol))
    max_den = 1
    while True:
        approx = exact.limit_denominator(max_den)
        if abs(approx - exact) <= tol:
            return approx
        max_den *= 10


def sign(x: Scalar) -> int:
    if isinstance(x, Surd2):
        return x.sign()
    if isinstance(x, Rational):
        return (x > 0) - (x < 0)
    return int(mpmath.sign(x))


def is_exact(x: Any) -> bool:
    return isinstance(x, (Rational, Surd2))


def real_cbrt(x):
    """Real cube root, negative radicands allowed."""
    x = to_bigreal(x)
    if x < 0:
        return -mpmath.cbrt(-x)
    return mpmath.cbrt(x)


def clean_complex(z, tol):
    """Drops an imaginary part below ``tol`` (relative to ``|z|``)."""
    if isinstance(z, mpmath.mpc):
        if abs(z.imag) <= tol * max(1, abs(z)):
            return z.real
    return z


_RATIONAL_TOKEN = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?(/\d+)?$")


def parse_rational(text: str, line: int = 1, column: int = 1) -> Fraction:
    token = text.strip()
    if not _RATIONAL_TOKEN.match(token):
        raise ParseError("invalid rational {!r}".format(token), line, column)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ZeroDenominatorError("zero denominator in {!r}".format(token), line, column)
    except ValueError:
        raise ParseError("invalid rational {!r}".format(token), line, column)


def format_rational(q: Union[int, Fraction]) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "{}/{}".format(q.numerator, q.denominator)


_SURD_TERM = re.compile(r"([+-]?)([^+-]+)")


def parse_surd(text: str, line: int = 1, column: int = 1) -> Surd2:
    body = text.replace("√2", "sqrt2").replace("sqrt(2)", "sqrt2")
    compact = re.sub(r"\s+", "", body)
    if not compact:
        raise ParseError("empty surd", line, column)
    rat, surd = Fraction(0), Fraction(0)
    pos = 0
    for match in _SURD_TERM.finditer(compact):
        if match.start() != pos:
            raise ParseError("unexpected text in surd {!r}".format(text), line, column + pos)
        pos = match.end()
        neg = match.group(1) == "-"
        term = match.group(2)
        if term.endswith("sqrt2"):
            coef = term[:-len("sqrt2")].rstrip("*")
            value = parse_rational(coef, line, column + match.start(2)) if coef else Fraction(1)
            surd += -value if neg else value
        else:
            value = parse_rational(term, line, column + match.start(2))
            rat += -value if neg else value
    if pos != len(compact):
        raise ParseError("trailing text in surd {!r}".format(text), line, column + pos)
    return Surd2(rat, surd)


def format_surd(s: Surd2) -> str:
    a, b = s.rat_part, s.surd_part
    if b == 0:
        return format_rational(a)
    if abs(b) == 1:
        tail = "sqrt2"
    else:
        tail = "{}*sqrt2".format(format_rational(abs(b)))
    if a == 0:
        return ("-" if b < 0 else "") + tail
    return "{} {} {}".format(format_rational(a), "-" if b < 0 else "+", tail)


def parse_bigreal(text: str, line: int = 1, column: int = 1) -> mpmath.mpf:
    try:
        return mpmath.mpf(text.strip())
    except (ValueError, TypeError):
        raise ParseError("invalid real {!r}".format(text), line, column)


def format_bigreal(x, digits: int) -> str:
    if isinstance(x, mpmath.mpc):
        re_s = mpmath.nstr(x.real, digits)
        im = x.imag
        return "{} {} {}i".format(re_s, "-" if im < 0 else "+", mpmath.nstr(abs(im), digits))
    if is_exact(x):
        return str(x) if isinstance(x, Surd2) else format_rational(x)
    return mpmath.nstr(x, digits)
