"""Exact scalar arithmetic: rationals extended by quadratic surds.

Every number handled by this package is either a ``fractions.Fraction`` or a
``Quad`` representing ``a + b*sqrt(d)`` with rational a, b and a squarefree
integer d > 1.  Quads arise as roots of quadratic equations (cut points of
the surplus procedure, quantiles of piecewise-quadratic CDFs) and support
exact comparison against rationals and against Quads over a different radical.
No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

Rational = Fraction


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _square_free_decompose(n: int) -> tuple[int, int]:
    """Write n > 0 as s*s*d with d squarefree; return (s, d)."""
    s, d = 1, 1
    p = 2
    while p * p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    # remainder has at most two prime factors: 1, p, p*q or p^2
    r = isqrt(n)
    if r * r == n:
        s *= r
    else:
        d *= n
    return s, d


@dataclass(frozen=True)
class Quad:
    """a + b*sqrt(d), canonical: b != 0 and d a squarefree integer > 1.

    Instances are irrational by construction, so a Quad never equals a
    Fraction and comparisons never need a tolerance.
    """

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        if self.b == 0:
            raise ValueError("Quad with zero surd coefficient; use Fraction")
        if self.d <= 1:
            raise ValueError("Quad radicand must be a squarefree integer > 1")

    # -- arithmetic (closed within one radical field, rationals always ok) --

    def _coerce(self, other) -> tuple[Fraction, Fraction] | None:
        if isinstance(other, int):
            return Fraction(other), Fraction(0)
        if isinstance(other, Fraction):
            return other, Fraction(0)
        if isinstance(other, Quad):
            if other.d != self.d:
                return None
            return other.a, other.b
        return None

    def __add__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        return _make(self.a + oa, self.b + ob, self.d)

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.d)

    def __sub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        return _make(self.a - oa, self.b - ob, self.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        oa, ob = co
        return _make(self.a * oa + self.b * ob * self.d, self.a * ob + self.b * oa, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return Quad(self.a / other, self.b / other, self.d)
        if isinstance(other, Quad) and other.d == self.d:
            # multiply by conjugate
            n = other.a * other.a - other.b * other.b * other.d
            return (self * Quad(other.a, -other.b, other.d)) / n
        return NotImplemented

    def __rtruediv__(self, other):
        n = self.a * self.a - self.b * self.b * self.d
        return (Quad(self.a, -self.b, self.d) * other) / n

    # -- exact ordering --

    def _sign_value(self) -> int:
        return _surd_sign(self.a, self.b, self.d)

    def _cmp(self, other) -> int:
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            return _surd_sign(self.a - other, self.b, self.d)
        if isinstance(other, Quad):
            if other.d == self.d:
                return _surd_sign(self.a - other.a, self.b - other.b, self.d)
            return _mixed_surd_sign(self.a - other.a, self.b, self.d, -other.b, other.d)
        raise TypeError(f"cannot compare Quad with {type(other).__name__}")

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # equality: canonical form makes field comparison sufficient; a Quad is
    # irrational so it never equals a Fraction (default dataclass __eq__ on
    # mismatched types already yields False / NotImplemented).

    def __str__(self):
        b = f"{self.b}*sqrt({self.d})"
        if self.a == 0:
            return b
        sep = "+" if self.b > 0 else ""
        return f"{self.a}{sep}{b}"


ExactNum = Union[Fraction, Quad]


def _make(a: Fraction, b: Fraction, d: int) -> ExactNum:
    return Fraction(a) if b == 0 else Quad(a, b, d)


def _surd_sign(p: Fraction, q: Fraction, d: int) -> int:
    """Exact sign of p + q*sqrt(d) for squarefree d > 1."""
    if q == 0:
        return _sign(p)
    if p == 0:
        return _sign(q)
    sp, sq = _sign(p), _sign(q)
    if sp == sq:
        return sp
    # opposite signs: compare |p| with |q|*sqrt(d) by squaring
    c = _sign(q * q * d - p * p)
    if c == 0:
        raise ArithmeticError("squarefree radicand produced a rational surd")
    return sq if c > 0 else sp


def _mixed_surd_sign(a: Fraction, b: Fraction, d1: int, c: Fraction, d2: int) -> int:
    """Exact sign of a + b*sqrt(d1) + c*sqrt(d2), d1 != d2 squarefree."""
    if b == 0:
        return _surd_sign(a, c, d2)
    if c == 0:
        return _surd_sign(a, b, d1)
    su = _surd_sign(a, b, d1)          # u = a + b*sqrt(d1)
    sv = _sign(-c)                     # v = -c*sqrt(d2); total = u - v
    if su != sv:
        return 1 if su > sv else -1
    if su == 0:
        return 0
    # same nonzero sign: compare u^2 with v^2
    w = _surd_sign(a * a + b * b * d1 - c * c * d2, 2 * a * b, d1)
    if w == 0:
        # u^2 == v^2 with equal signs would force sqrt(d1/d2) rational
        raise ArithmeticError("distinct squarefree radicals compared equal")
    return w if su > 0 else -w


def exact_cmp(x: ExactNum, y: ExactNum) -> int:
    """Three-way comparison of exact scalars."""
    if isinstance(x, Quad):
        return x._cmp(y)
    if isinstance(y, Quad):
        return -y._cmp(x)
    return _sign(Fraction(x) - Fraction(y))


def sqrt_exact(x: Fraction):
    """Exact square root of a nonnegative rational: Fraction or Quad."""
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return Fraction(0)
    s, d = _square_free_decompose(x.numerator * x.denominator)
    coeff = Fraction(s, x.denominator)
    return coeff if d == 1 else Quad(Fraction(0), coeff, d)


def poly_eval(coeffs, x: ExactNum) -> ExactNum:
    """Evaluate c0 + c1*x + c2*x^2 + ... by Horner's rule, exactly."""
    acc: ExactNum = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def solve_linear(b: Fraction, c: Fraction) -> Fraction:
    """Root of b*x + c = 0 with b != 0."""
    return -c / b


def solve_quadratic(a: Fraction, b: Fraction, c: Fraction) -> list:
    """Real roots of a*x^2 + b*x + c = 0, ascending; exact surds when irrational."""
    if a == 0:
        return [] if b == 0 else [solve_linear(b, c)]
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    if disc == 0:
        return [-b / (2 * a)]
    s = sqrt_exact(disc)
    r1 = (-b - s) / (2 * a)
    r2 = (-b + s) / (2 * a)
    return [r1, r2] if exact_cmp(r1, r2) < 0 else [r2, r1]


def _divisors(n: int, limit: int = 10**6) -> list[int] | None:
    """All positive divisors of |n|, or None when factoring is too costly."""
    n = abs(n)
    if n == 0:
        return None
    divs = []
    p = 1
    while p * p <= n:
        if p > limit:
            return None
        if n % p == 0:
            divs.append(p)
            if p != n // p:
                divs.append(n // p)
        p += 1
    return sorted(divs)


def rational_roots(coeffs) -> list[Fraction] | None:
    """Rational roots of a rational-coefficient polynomial (any degree).

    Returns None when the integer factorizations required by the rational
    root theorem are out of reach; callers then fall back to bracketing.
    """
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if len(ints) <= 1:
        return []
    low = 0
    while ints[low] == 0:
        low += 1
    roots = [Fraction(0)] if low else []
    lead, const = ints[-1], ints[low]
    dp, dq = _divisors(const), _divisors(lead)
    if dp is None or dq is None:
        return None
    seen = set(roots)
    for q in dq:
        for p in dp:
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in seen and poly_eval(coeffs, cand) == 0:
                    seen.add(cand)
                    roots.append(cand)
    return sorted(roots)
