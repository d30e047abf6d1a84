"""Dense univariate polynomials, Sturm chains and numeric root refinement.

Coefficients are stored constant-first (``coeffs[i]`` multiplies ``x**i``) over
one of three domains: rational (``Fraction``), :class:`Surd2`, or BigReal
(``mpmath.mpf``). Mixed operations promote to the wider domain; BigReal
promotion happens at the current mpmath working precision.
"""
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import mpmath

from ..errors import (DomainError, EndpointRootError, NoSignChangeError, ParseError)
from . import numeric
from .numeric import (Surd2, to_bigreal, rationalize, sign, format_rational,
                      parse_rational, working_precision)


RATIONAL = "Rational"
SURD2 = "Surd2"
BIGREAL = "BigReal"
_DOMAIN_RANK = {RATIONAL: 0, SURD2: 1, BIGREAL: 2}

MAX_REFINE_STEPS = 4000


def _scalar_domain(c) -> str:
    if isinstance(c, Surd2):
        return SURD2
    if isinstance(c, Rational):
        return RATIONAL
    return BIGREAL


def _normalize(c):
    if isinstance(c, bool):
        c = int(c)
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, (Fraction, Surd2, mpmath.mpf)):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    return to_bigreal(c)


def _lift(c, domain: str):
    if domain == BIGREAL and _scalar_domain(c) != BIGREAL:
        return to_bigreal(c)
    return c


class Polynomial:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_normalize(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Polynomial":
        p = cls([lead])
        for r in roots:
            p = p * cls([-_normalize(r), 1])
        return p

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def lead(self):
        if self.is_zero:
            raise DomainError("zero polynomial has no leading coefficient")
        return self._coeffs[-1]

    @property
    def domain(self) -> str:
        domain = RATIONAL
        for c in self._coeffs:
            d = _scalar_domain(c)
            if _DOMAIN_RANK[d] > _DOMAIN_RANK[domain]:
                domain = d
        return domain

    @property
    def is_exact(self) -> bool:
        return self.domain != BIGREAL

    def __getitem__(self, i: int):
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def _joint(self, other: "Polynomial") -> Tuple[tuple, tuple]:
        d = max(self.domain, other.domain, key=_DOMAIN_RANK.get)
        return (tuple(_lift(c, d) for c in self._coeffs),
                tuple(_lift(c, d) for c in other._coeffs))

    @staticmethod
    def _as_poly(other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (Rational, Surd2, mpmath.mpf)):
            return Polynomial([other])
        return None

    def __add__(self, other):
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        a, b = self._joint(other)
        n = max(len(a), len(b))
        return Polynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                          for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        a, b = self._joint(other)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if isinstance(scalar, Polynomial):
            return NotImplemented
        scalar = _normalize(scalar)
        if scalar == 0:
            raise ZeroDivisionError("polynomial division by zero scalar")
        d = max(self.domain, _scalar_domain(scalar), key=_DOMAIN_RANK.get)
        s = _lift(scalar, d)
        return Polynomial(_lift(c, d) / s for c in self._coeffs)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = Polynomial([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __call__(self, x):
        x = _normalize(x)
        domain = self.domain
        if _scalar_domain(x) == BIGREAL or isinstance(x, mpmath.mpc):
            domain = BIGREAL
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + _lift(c, domain)
        if isinstance(acc, int):
            return Fraction(acc)
        return acc

    def derivative(self, order: int = 1) -> "Polynomial":
        p = self
        for _ in range(order):
            p = Polynomial(i * c for i, c in enumerate(p._coeffs) if i > 0)
        return p

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise DomainError("monic transform of the zero polynomial")
        return self / self.lead

    def mul_x(self, k: int = 1) -> "Polynomial":
        if self.is_zero:
            return self
        return Polynomial((0,) * k + self._coeffs)

    def to_bigreal(self) -> "Polynomial":
        return Polynomial(to_bigreal(c) for c in self._coeffs)

    def to_exact(self) -> "Polynomial":
        """Exact copy: BigReal coefficients are replaced by their binary rational value."""
        if self.is_exact:
            return self
        return Polynomial(rationalize(c) if _scalar_domain(c) == BIGREAL else c
                          for c in self._coeffs)

    def scale(self):
        if self.is_zero:
            return mpmath.mpf(0)
        return max(abs(to_bigreal(c)) for c in self._coeffs)

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        a, b = self._joint(other)
        rem = list(a)
        lead = b[-1]
        db = len(b) - 1
        quot = [0] * max(len(rem) - db, 1)
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lead
            quot[k] = q
            if q == 0:
                continue
            for j in range(db + 1):
                rem[k + j] = rem[k + j] - q * b[j]
            # exact cancellation of the leading term, even for BigReal
            rem[k + db] = 0 * q
        return Polynomial(quot), Polynomial(rem[:db])

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __repr__(self):
        return "Polynomial({!r})".format(list(self._coeffs))

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._coeffs[i]
            if c == 0:
                continue
            text = _scalar_text(c)
            neg = text.startswith("-") and not isinstance(c, Surd2)
            if neg:
                text = text[1:]
            if isinstance(c, Surd2) and not c.is_rational:
                text = "(" + text + ")"
            if i > 0 and text == "1":
                text = ""
            mono = "" if i == 0 else ("x" if i == 1 else "x^{}".format(i))
            body = text + ("*" if text and mono else "") + mono
            terms.append(("-" if neg else "+", body or "1"))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, t in terms[1:]:
            out += " {} {}".format(s, t)
        return out


def _scalar_text(c) -> str:
    if isinstance(c, Fraction):
        return format_rational(c)
    if isinstance(c, Surd2):
        return str(c)
    return mpmath.nstr(c, 15)


def poly_eval(f: Polynomial, x):
    return f(x)


def poly_derivative(f: Polynomial) -> Polynomial:
    return f.derivative()


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over an exact domain (the zero polynomial if both are zero)."""
    if not (f.is_exact and g.is_exact):
        raise DomainError("exact gcd needs rational or Surd2 coefficients")
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a if a.is_zero else a.monic()


def square_free_part(f: Polynomial) -> Polynomial:
    g = gcd(f, f.derivative())
    if g.degree <= 0:
        return f
    return divmod(f, g)[0]


def has_multiple_roots(f: Polynomial) -> bool:
    return gcd(f, f.derivative()).degree > 0


def sturm_chain(f: Polynomial) -> List[Polynomial]:
    f = square_free_part(f.to_exact())
    chain = [f, f.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        r = -(chain[-2] % chain[-1])
        if r.is_zero:
            break
        chain.append(r)
    return [p for p in chain if not p.is_zero]


def _exact_point(x):
    if isinstance(x, (Rational, Surd2)):
        return Fraction(x) if isinstance(x, Rational) else x
    return rationalize(to_bigreal(x))


def sign_variations(chain: Sequence[Polynomial], x) -> int:
    signs = [sign(p(x)) for p in chain]
    signs = [s for s in signs if s != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def sturm_count(f: Polynomial, lo, hi, chain: Optional[Sequence[Polynomial]] = None) -> int:
    """Distinct real roots of ``f`` in ``(lo, hi]``."""
    if f.is_zero:
        raise DomainError("Sturm count of the zero polynomial")
    lo, hi = _exact_point(lo), _exact_point(hi)
    if not lo < hi:
        raise DomainError("empty interval ({}, {})".format(lo, hi))
    exact = f.to_exact()
    for point in (lo, hi):
        if exact(point) == 0:
            raise EndpointRootError("endpoint {} is a root".format(point), point)
    if chain is None:
        chain = sturm_chain(exact)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def root_bound(f: Polynomial) -> Fraction:
    """Cauchy bound B: every real root satisfies |x| < B."""
    m = f.to_exact().monic()
    bound = Fraction(0)
    for c in m.coeffs[:-1]:
        ub = c.upper_bound() if isinstance(c, Surd2) else abs(c)
        bound = max(bound, ub)
    return 1 + bound


class RootIsolation(NamedTuple):
    intervals: List[Tuple[Fraction, Fraction]]
    multiplicity_note: bool


def isolate_roots(f: Polynomial, lo=None, hi=None) -> RootIsolation:
    """Disjoint sorted rational intervals ``(lo, hi]`` holding one distinct root each."""
    exact = f.to_exact()
    if exact.degree < 1:
        return RootIsolation([], False)
    bound = root_bound(exact)
    lo = -bound if lo is None else _exact_point(lo)
    hi = bound if hi is None else _exact_point(hi)
    chain = sturm_chain(exact)
    g = chain[0]

    def nudge(x, toward):
        step = (toward - x) / 64
        while g(x) == 0:
            x += step
            step /= 2
        return x

    lo = nudge(lo, hi) if g(lo) == 0 else lo
    hi = nudge(hi, lo) if g(hi) == 0 else hi
    if isinstance(lo, Surd2) or isinstance(hi, Surd2):
        raise DomainError("isolation endpoints must be rational")

    out = []
    stack = [(lo, hi, sturm_count(g, lo, hi, chain))]
    while stack:
        a, b, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        for k in (Fraction(1, 2), Fraction(3, 7), Fraction(4, 7), Fraction(2, 7), Fraction(5, 7)):
            mid = a + (b - a) * k
            if g(mid) != 0:
                break
        left = sturm_count(g, a, mid, chain)
        stack.append((mid, b, n - left))
        stack.append((a, mid, left))
    out.sort()
    return RootIsolation(out, has_multiple_roots(exact))


def refine_root(f: Polynomial, bracket: Tuple, digits: int):
    """Root of ``f`` inside a sign-changing bracket, to ``digits`` significant digits."""
    with working_precision(digits):
        g = f.to_bigreal()
        dg = g.derivative()
        lo, hi = to_bigreal(bracket[0]), to_bigreal(bracket[1])
        if lo > hi:
            lo, hi = hi, lo
        flo, fhi = g(lo), g(hi)
        if flo == 0:
            return lo
        if fhi == 0:
            return hi
        if mpmath.sign(flo) == mpmath.sign(fhi):
            raise NoSignChangeError("no sign change on [{}, {}]".format(
                mpmath.nstr(lo, 10), mpmath.nstr(hi, 10)))
        tol = mpmath.mpf(10) ** (-(digits + numeric.GUARD_DIGITS // 2))
        slo = mpmath.sign(flo)
        x = (lo + hi) / 2
        for _ in range(MAX_REFINE_STEPS):
            fx = g(x)
            if fx == 0:
                break
            if mpmath.sign(fx) == slo:
                lo = x
            else:
                hi = x
            dfx = dg(x)
            xn = None
            if dfx != 0:
                xn = x - fx / dfx
                if not lo < xn < hi:
                    xn = None
            if xn is None:
                xn = (lo + hi) / 2
            if abs(xn - x) <= tol * max(1, abs(xn)) or hi - lo <= tol * max(1, abs(x)):
                x = xn
                break
            x = xn
        return x


_NAME = re.compile(r"\s*([^:#\s][^:#]*?)\s*:")


def parse_poly(text: str, line: int = 1) -> Tuple[str, Polynomial]:
    body = text.split("#", 1)[0]
    m = _NAME.match(body)
    if not m:
        raise ParseError("expected 'name: c0 c1 ...'", line, 1)
    name = m.group(1)
    coeffs = []
    for tok in re.finditer(r"\S+", body[m.end():]):
        coeffs.append(parse_rational(tok.group(0), line, m.end() + tok.start() + 1))
    if not coeffs:
        raise ParseError("no coefficients for {!r}".format(name), line, m.end() + 1)
    return name, Polynomial(coeffs)


def parse_poly_file(text: str) -> List[Tuple[str, Polynomial]]:
    entries = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.split("#", 1)[0].strip():
            continue
        name, poly = parse_poly(raw, lineno)
        if name in seen:
            raise ParseError("duplicate polynomial name {!r}".format(name), lineno, 1)
        seen.add(name)
        entries.append((name, poly))
    return entries


def format_poly(name: str, f: Polynomial) -> str:
    if not f.domain == RATIONAL:
        raise DomainError("only rational polynomials have a file form")
    if f.is_zero:
        return "{}: 0".format(name)
    return "{}: {}".format(name, " ".join(format_rational(c) for c in f.coeffs))


def format_poly_file(entries: Iterable[Tuple[str, Polynomial]]) -> str:
    return "".join(format_poly(name, f) + "\n" for name, f in entries)
