"""2x2 polyphase matrices over Laurent polynomials.

Rows hold the analysis polyphase-with-advance components of the two
filters: a filter splits as ``F(z) = F0(z^2) + z F1(z^2)`` and its row is
``[F0, F1]``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import PreconditionError
from .laurent import LaurentPoly, as_poly, as_scalar

__all__ = [
    "PolyMatrix",
    "FilterPair",
    "IDENTITY",
    "HAAR",
    "LAZY_CAUSAL",
    "LAMBDA",
    "HS_L",
    "HS_J",
    "from_filters",
    "to_filters",
    "split_polyphase",
    "merge_polyphase",
    "matmul",
    "det",
    "inverse",
    "is_unimodular",
    "is_fir_pr",
    "matrix_support",
    "matrix_order",
    "is_ws",
    "is_hs",
]


class PolyMatrix:
    """Immutable 2x2 matrix of LaurentPoly, row-major.

    Entries may be given as anything :func:`as_poly` accepts.  ``@`` is
    the matrix product.
    """

    __slots__ = ("_e",)

    def __init__(self, rows):
        (a, b), (c, d) = rows
        self._e = (as_poly(a), as_poly(b), as_poly(c), as_poly(d))

    @classmethod
    def diag(cls, a, d):
        return cls([[a, 0], [0, d]])

    @property
    def rows(self):
        a, b, c, d = self._e
        return ((a, b), (c, d))

    @property
    def entries(self):
        return self._e

    def __getitem__(self, ij):
        i, j = ij
        return self._e[2 * i + j]

    def __iter__(self):
        return iter(self.rows)

    def __matmul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        a, b, c, d = self._e
        p, q, r, s = other._e
        return PolyMatrix([[a * p + b * r, a * q + b * s],
                           [c * p + d * r, c * q + d * s]])

    def __add__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return PolyMatrix._from_flat([x + y for x, y in zip(self._e, other._e)])

    def __sub__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return PolyMatrix._from_flat([x - y for x, y in zip(self._e, other._e)])

    def __neg__(self):
        return PolyMatrix._from_flat([-x for x in self._e])

    def scale(self, k):
        k = as_scalar(k)
        return PolyMatrix._from_flat([x.scale(k) for x in self._e])

    @classmethod
    def _from_flat(cls, e):
        return cls([[e[0], e[1]], [e[2], e[3]]])

    def map(self, fn):
        """Apply ``fn`` to every entry."""
        return PolyMatrix._from_flat([fn(x) for x in self._e])

    def time_reverse(self):
        """``H(1/z)``."""
        return self.map(LaurentPoly.time_reverse)

    def transpose(self):
        a, b, c, d = self._e
        return PolyMatrix([[a, c], [b, d]])

    def is_zero(self):
        return not any(self._e)

    def det(self):
        a, b, c, d = self._e
        return a * d - b * c

    def adjugate(self):
        a, b, c, d = self._e
        return PolyMatrix([[d, -b], [-c, a]])

    def evaluate(self, z0):
        return tuple(tuple(x(z0) for x in row) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def __str__(self):
        a, b, c, d = (str(x) for x in self._e)
        return f"[[{a}, {b}], [{c}, {d}]]"

    def __repr__(self):
        return f"PolyMatrix({self})"


@dataclass(frozen=True)
class FilterPair:
    """Lowpass and highpass scalar filters of a two-channel bank."""

    h0: LaurentPoly
    h1: LaurentPoly

    def __post_init__(self):
        object.__setattr__(self, "h0", as_poly(self.h0))
        object.__setattr__(self, "h1", as_poly(self.h1))


IDENTITY = PolyMatrix([[1, 0], [0, 1]])
#: Haar bank with unit determinant and unit lowpass DC gain.
HAAR = PolyMatrix([["1/2", "1/2"], [-1, 1]])
#: Causal (non-unimodular) lazy wavelet diag(1, z^-1).
LAZY_CAUSAL = PolyMatrix([[1, 0], [0, LaurentPoly.monomial(1, 1)]])
#: diag(1, z^-1), used by the whole-sample symmetry relation.
LAMBDA = LAZY_CAUSAL
HS_L = PolyMatrix([[1, 0], [0, -1]])
HS_J = PolyMatrix([[0, 1], [1, 0]])


def split_polyphase(f):
    """Return ``(F0, F1)`` with ``F(z) = F0(z^2) + z F1(z^2)``.

    Tap ``f(2k)`` lands at index ``k`` of ``F0`` and ``f(2k-1)`` at index
    ``k`` of ``F1``.
    """
    even, odd = {}, {}
    for n, c in f.taps().items():
        if n % 2 == 0:
            even[n // 2] = c
        else:
            odd[(n + 1) // 2] = c
    return LaurentPoly.from_dict(even), LaurentPoly.from_dict(odd)


def merge_polyphase(f0, f1):
    """Inverse of :func:`split_polyphase`."""
    taps = {2 * k: c for k, c in f0.taps().items()}
    taps.update({2 * k - 1: c for k, c in f1.taps().items()})
    return LaurentPoly.from_dict(taps)


def from_filters(fp):
    return PolyMatrix([split_polyphase(fp.h0), split_polyphase(fp.h1)])


def to_filters(m):
    (a, b), (c, d) = m.rows
    return FilterPair(merge_polyphase(a, b), merge_polyphase(c, d))


def matmul(a, b):
    return a @ b


def det(m):
    return m.det()


def is_unimodular(m):
    return m.det() == 1


def is_fir_pr(m):
    """Determinant is a nonzero monomial ``a z^{-d}``."""
    return m.det().is_monomial()


def inverse(m):
    """Exact inverse of an FIR perfect-reconstruction matrix."""
    d = m.det()
    if not d.is_monomial():
        raise PreconditionError("not invertible over Laurent polynomials")
    return m.adjugate().map(lambda x: x / d)


def matrix_support(m):
    """Smallest ``[c, d]`` containing every nonzero tap of every entry."""
    nonzero = [x for x in m.entries if x]
    if not nonzero:
        raise ValueError("empty support")
    return (min(x.lo for x in nonzero), max(x.hi for x in nonzero))


def matrix_order(m):
    c, d = matrix_support(m)
    return d - c


def is_ws(m):
    """``H(1/z) == Lambda(z) H(z) Lambda(1/z)`` with ``Lambda = diag(1, 1/z)``."""
    return m.time_reverse() == LAMBDA @ m @ LAMBDA.time_reverse()


def is_hs(m):
    """``H(1/z) == L H(z) J`` for ``L = diag(1, -1)`` and ``J`` the exchange matrix."""
    return m.time_reverse() == HS_L @ m @ HS_J
