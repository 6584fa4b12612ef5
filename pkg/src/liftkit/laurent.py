"""Exact arithmetic in Q(sqrt 2) and Laurent polynomials over it.

A Laurent polynomial is stored the way filter people write impulse
responses::

    F(z) = sum_{n=a}^{b} f(n) z^{-n}

so ``lo`` is the first index ``a`` of the impulse response and
``coeffs[i]`` is ``f(a + i)``.  ``1 + z^-1`` therefore has ``lo == 0`` and
support interval ``[0, 1]``; ``z + 1 + z^-1`` has support ``[-1, 1]``.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Scalar",
    "LaurentPoly",
    "Symmetry",
    "Z",
    "W2",
    "as_scalar",
    "as_poly",
    "parse_scalar",
    "support_interval",
    "order",
    "time_reverse",
    "shift",
    "symmetry_kind",
    "is_dyadic",
    "evaluate",
]


def _is_power_of_two(n):
    return n > 0 and n & (n - 1) == 0


class Scalar:
    """An element ``r + s*sqrt(2)`` of Q(sqrt 2) with rational ``r`` and ``s``.

    Instances are immutable and compare equal to ints and Fractions when
    the irrational part vanishes.
    """

    __slots__ = ("_r", "_s")

    def __init__(self, r=0, s=0):
        self._r = Fraction(r)
        self._s = Fraction(s)

    @property
    def r(self):
        return self._r

    @property
    def s(self):
        return self._s

    # -- predicates -------------------------------------------------------

    def __bool__(self):
        return bool(self._r) or bool(self._s)

    def is_rational(self):
        return self._s == 0

    def is_dyadic(self):
        return self._s == 0 and _is_power_of_two(self._r.denominator)

    # -- arithmetic -------------------------------------------------------

    def conjugate(self):
        """The Galois conjugate ``r - s*sqrt(2)``."""
        return Scalar(self._r, -self._s)

    def norm(self):
        """Field norm ``r**2 - 2*s**2``; zero only for zero."""
        return self._r * self._r - 2 * self._s * self._s

    def __neg__(self):
        return Scalar(-self._r, -self._s)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self._r + other._r, self._s + other._s)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Scalar(self._r - other._r, self._s - other._s)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._r, self._s, other._r, other._s
        return Scalar(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(self._r / n, -self._s / n)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** -k
        result, base = Scalar(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison, hashing, display ------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._r == other._r and self._s == other._s

    def __hash__(self):
        if self._s == 0:
            return hash(self._r)
        return hash((self._r, self._s))

    def __float__(self):
        return float(self._r) + float(self._s) * 2 ** 0.5

    def __str__(self):
        if self._s == 0:
            return str(self._r)
        irr = f"{abs(self._s)}*w2"
        if self._r == 0:
            return irr if self._s > 0 else "-" + irr
        sign = "+" if self._s > 0 else "-"
        return f"{self._r}{sign}{irr}"

    def __repr__(self):
        return f"Scalar('{self}')"

    @classmethod
    def parse(cls, text):
        return parse_scalar(text)


_RAT = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<r>[+-]?{_RAT})(?:(?P<sign>[+-])(?P<s>{_RAT})\*w2)?"
    rf"|(?P<pure>[+-]?{_RAT})\*w2)$"
)


def parse_scalar(text):
    """Parse the textual form ``p/q+r/s*w2`` (whitespace-free).

    ``w2`` stands for sqrt(2).  Accepted: ``"3"``, ``"-3/2"``,
    ``"1/2+3/4*w2"``, ``"-2*w2"``.  The irrational coefficient is always
    written explicitly, so ``"1-w2"`` is rejected.
    """
    if not isinstance(text, str):
        raise ValueError(f"scalar must be a string, got {type(text).__name__}")
    m = _SCALAR_RE.match(text)
    if not m:
        raise ValueError(f"malformed scalar {text!r}")
    if m.group("pure") is not None:
        return Scalar(0, Fraction(m.group("pure")))
    r = Fraction(m.group("r"))
    s = Fraction(m.group("s")) if m.group("s") else Fraction(0)
    if m.group("sign") == "-":
        s = -s
    return Scalar(r, s)


def _coerce(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        return Scalar(x)
    return NotImplemented


def as_scalar(x):
    """Convert an int, Fraction, scalar string or Scalar to a Scalar."""
    if isinstance(x, str):
        return parse_scalar(x)
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a scalar")
    return c


#: sqrt(2) as a field element.
W2 = Scalar(0, 1)

_ZERO = Scalar(0)


class Symmetry(str, enum.Enum):
    """Linear-phase classes of lifting filters.

    ``HS_PLUS``: half-sample symmetric about n = +1/2, S(1/z) = z S(z).
    ``HS_MINUS``: half-sample symmetric about n = -1/2, S(1/z) = S(z)/z.
    ``WA``: whole-sample antisymmetric about n = 0, S(1/z) = -S(z).
    """

    HS_PLUS = "HS_plus"
    HS_MINUS = "HS_minus"
    WA = "WA"
    UNCONSTRAINED = "unconstrained"


class LaurentPoly:
    """Finitely supported two-sided sequence, read as a polynomial in 1/z.

    The constructor trims leading and trailing zeros; the zero polynomial
    has no coefficients.  All operations return new objects.
    """

    __slots__ = ("_lo", "_coeffs")

    def __init__(self, coeffs=(), lo=0):
        cs = [as_scalar(c) for c in coeffs]
        start, stop = 0, len(cs)
        while start < stop and not cs[start]:
            start += 1
        while stop > start and not cs[stop - 1]:
            stop -= 1
        self._coeffs = tuple(cs[start:stop])
        self._lo = int(lo) + start if self._coeffs else 0

    # -- constructors -----------------------------------------------------

    @classmethod
    def monomial(cls, c, n=0):
        """``c * z^{-n}``."""
        return cls([c], n)

    @classmethod
    def from_dict(cls, taps):
        """Build from ``{n: f(n)}`` (impulse-response indexing)."""
        taps = {n: c for n, c in taps.items() if as_scalar(c)}
        if not taps:
            return cls()
        lo, hi = min(taps), max(taps)
        return cls([taps.get(n, 0) for n in range(lo, hi + 1)], lo)

    @classmethod
    def from_powers(cls, terms):
        """Build from ``{p: c}`` meaning ``sum c * z**p``."""
        return cls.from_dict({-p: c for p, c in terms.items()})

    # -- accessors --------------------------------------------------------

    @property
    def lo(self):
        return self._lo

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def hi(self):
        return self._lo + len(self._coeffs) - 1

    def is_zero(self):
        return not self._coeffs

    def __bool__(self):
        return bool(self._coeffs)

    def __getitem__(self, n):
        """Impulse-response tap ``f(n)``; zero outside the support."""
        i = n - self._lo
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return _ZERO

    def taps(self):
        """Nonzero taps as ``{n: f(n)}``."""
        return {self._lo + i: c for i, c in enumerate(self._coeffs) if c}

    def support_interval(self):
        if not self._coeffs:
            raise ValueError("empty support")
        return (self._lo, self.hi)

    def order(self):
        if not self._coeffs:
            raise ValueError("order undefined for zero")
        return len(self._coeffs) - 1

    def is_constant(self):
        return not self._coeffs or (len(self._coeffs) == 1 and self._lo == 0)

    def is_monomial(self):
        return len(self._coeffs) == 1

    # -- ring operations --------------------------------------------------

    def __neg__(self):
        return LaurentPoly([-c for c in self._coeffs], self._lo)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        if not other._coeffs:
            return self
        if not self._coeffs:
            return other
        lo = min(self._lo, other._lo)
        hi = max(self.hi, other.hi)
        return LaurentPoly([self[n] + other[n] for n in range(lo, hi + 1)], lo)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        if not self._coeffs or not other._coeffs:
            return LaurentPoly()
        out = [_ZERO] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] = out[i + j] + a * b
        return LaurentPoly(out, self._lo + other._lo)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar or by a monomial."""
        if isinstance(other, LaurentPoly):
            if not other.is_monomial():
                raise ValueError("can only divide by a monomial")
            return LaurentPoly(
                [c / other._coeffs[0] for c in self._coeffs], self._lo - other._lo
            )
        k = _coerce(other)
        if k is NotImplemented:
            return NotImplemented
        inv = k.inverse()
        return LaurentPoly([c * inv for c in self._coeffs], self._lo)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers need a monomial")
            c = self._coeffs[0]
            return LaurentPoly([c ** k], self._lo * k)
        result, base = LaurentPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- transforms -------------------------------------------------------

    def time_reverse(self):
        """``F(1/z)``: tap ``f(n)`` moves to ``-n``."""
        if not self._coeffs:
            return self
        return LaurentPoly(self._coeffs[::-1], -self.hi)

    def shift(self, k):
        """Multiply by ``z^{-k}``."""
        if not self._coeffs:
            return self
        return LaurentPoly(self._coeffs, self._lo + k)

    def scale(self, k):
        k = as_scalar(k)
        return LaurentPoly([c * k for c in self._coeffs], self._lo)

    def upsample(self):
        """``F(z^2)``."""
        return LaurentPoly.from_dict({2 * n: c for n, c in self.taps().items()})

    def has_symmetry(self, kind):
        kind = Symmetry(kind)
        tr = self.time_reverse()
        if kind is Symmetry.HS_PLUS:
            return tr == self.shift(-1)
        if kind is Symmetry.HS_MINUS:
            return tr == self.shift(1)
        if kind is Symmetry.WA:
            return tr == -self
        return True

    def is_dyadic(self):
        return all(c.is_dyadic() for c in self._coeffs)

    def __call__(self, z0):
        z0 = as_scalar(z0)
        if not z0:
            raise ValueError("cannot evaluate a Laurent polynomial at zero")
        if not self._coeffs:
            return _ZERO
        inv = z0.inverse()
        # Horner in 1/z, then rescale by z^{-lo}
        acc = _ZERO
        for c in reversed(self._coeffs):
            acc = acc * inv + c
        return acc * inv ** self._lo

    evaluate = __call__

    # -- comparison, display ---------------------------------------------

    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        return self._lo == other._lo and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._lo, self._coeffs))

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            p = -(self._lo + i)
            if p == 0:
                mono = ""
            elif p == 1:
                mono = "z"
            else:
                mono = f"z^{p}"
            cs = str(c)
            if "w2" in cs and not c.is_rational() and c.r != 0:
                cs = f"({cs})"
            if mono:
                if c == 1:
                    term = mono
                elif c == -1:
                    term = "-" + mono
                else:
                    term = f"{cs}*{mono}"
            else:
                term = cs
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return f"LaurentPoly({[str(c) for c in self._coeffs]}, lo={self._lo})"


def _coerce_poly(x):
    if isinstance(x, LaurentPoly):
        return x
    c = _coerce(x)
    if c is NotImplemented:
        return c
    return LaurentPoly([c])


def as_poly(x):
    """Convert a scalar-like value or LaurentPoly to a LaurentPoly."""
    p = _coerce_poly(as_scalar(x) if isinstance(x, str) else x)
    if p is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")
    return p


#: The indeterminate ``z`` (support interval [-1, -1]).
Z = LaurentPoly.monomial(1, -1)


def support_interval(f):
    return f.support_interval()


def order(f):
    return f.order()


def time_reverse(f):
    return f.time_reverse()


def shift(f, k):
    return f.shift(k)


def symmetry_kind(f, kind):
    """True iff ``f`` has the given linear-phase symmetry (zero has all)."""
    return f.has_symmetry(kind)


def is_dyadic(f):
    return f.is_dyadic()


def evaluate(f, z0):
    return f(z0)
