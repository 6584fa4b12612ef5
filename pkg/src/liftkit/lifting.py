"""Lifting steps, gain scaling and partially factored lifting cascades.

A cascade represents ``D_K @ S[N-1] @ ... @ S[0] @ B`` where
``D_K = diag(1/K, K)``.  ``steps[0]`` is applied first, i.e. it sits
immediately to the left of the base matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exceptions import PreconditionError
from .laurent import LaurentPoly, Scalar, as_poly, as_scalar
from .polyphase import IDENTITY, PolyMatrix, is_fir_pr

__all__ = [
    "LiftingStep",
    "Cascade",
    "upper_lift",
    "lower_lift",
    "gain_matrix",
    "step_matrix",
    "product",
    "partial_products",
    "gain_conjugate",
    "gain_conjugate_step",
    "reduce_to_irreducible",
    "is_irreducible",
    "invert_cascade",
    "rescale",
    "identity_lift_steps",
    "nonuniqueness_witness",
]

LOWPASS_UPDATE = 0
HIGHPASS_UPDATE = 1


def upper_lift(s):
    """``[[1, S], [0, 1]]``: updates the lowpass channel."""
    return PolyMatrix([[1, s], [0, 1]])


def lower_lift(s):
    """``[[1, 0], [S, 1]]``: updates the highpass channel."""
    return PolyMatrix([[1, 0], [s, 1]])


def gain_matrix(k):
    k = as_scalar(k)
    if not k:
        raise PreconditionError("gain must be nonzero")
    return PolyMatrix.diag(k.inverse(), k)


@dataclass(frozen=True)
class LiftingStep:
    """One lifting step: update characteristic ``m`` and filter ``s``.

    ``m == 0`` is a lowpass update (upper triangular), ``m == 1`` a
    highpass update (lower triangular).
    """

    m: int
    s: LaurentPoly

    def __post_init__(self):
        if self.m not in (0, 1):
            raise ValueError(f"update characteristic must be 0 or 1, got {self.m!r}")
        object.__setattr__(self, "s", as_poly(self.s))

    def matrix(self):
        return upper_lift(self.s) if self.m == LOWPASS_UPDATE else lower_lift(self.s)

    def inverse(self):
        return LiftingStep(self.m, -self.s)

    def is_trivial(self):
        return self.s.is_zero()

    def __str__(self):
        kind = "U" if self.m == LOWPASS_UPDATE else "L"
        return f"{kind}({self.s})"


def step_matrix(st):
    return st.matrix()


@dataclass(frozen=True)
class Cascade:
    """``diag(1/gain, gain) @ steps[-1] @ ... @ steps[0] @ base``."""

    gain: Scalar = field(default_factory=lambda: Scalar(1))
    steps: tuple = ()
    base: PolyMatrix = IDENTITY

    def __post_init__(self):
        gain = as_scalar(self.gain)
        if not gain:
            raise PreconditionError("gain must be nonzero")
        object.__setattr__(self, "gain", gain)
        object.__setattr__(self, "steps", tuple(self.steps))
        if not is_fir_pr(self.base):
            raise PreconditionError("base matrix must be FIR perfect reconstruction")

    def __len__(self):
        return len(self.steps)

    def with_steps(self, steps):
        return Cascade(self.gain, tuple(steps), self.base)

    def __str__(self):
        body = " ".join(str(s) for s in reversed(self.steps))
        return f"D({self.gain}) {body} [{self.base}]"


def product(c):
    """The transfer matrix represented by the cascade."""
    return gain_matrix(c.gain) @ partial_products(c)[-1]


def partial_products(c):
    """``[E(-1), E(0), ..., E(N-1)]`` with ``E(-1) = base`` and ``E(n) = S_n E(n-1)``."""
    out = [c.base]
    for st in c.steps:
        out.append(st.matrix() @ out[-1])
    return out


def gain_conjugate(k, m):
    """``D_K @ m @ inv(D_K)``: off-diagonals scale by ``K**-2`` and ``K**2``."""
    k = as_scalar(k)
    if not k:
        raise PreconditionError("gain must be nonzero")
    k2 = k * k
    (a, b), (c, d) = m.rows
    return PolyMatrix([[a, b / k2], [c.scale(k2), d]])


def gain_conjugate_step(k, st):
    k = as_scalar(k)
    if not k:
        raise PreconditionError("gain must be nonzero")
    k2 = k * k
    if st.m == LOWPASS_UPDATE:
        return LiftingStep(st.m, st.s / k2)
    return LiftingStep(st.m, st.s.scale(k2))


def _merge(steps):
    out = []
    for st in steps:
        if st.is_trivial():
            continue
        if out and out[-1].m == st.m:
            merged = LiftingStep(st.m, out[-1].s + st.s)
            out.pop()
            # a cancelled pair may expose two equal neighbours
            if not merged.is_trivial():
                out.append(merged)
            continue
        out.append(st)
    return out


def reduce_to_irreducible(c):
    """Merge adjacent same-characteristic steps and drop identity steps.

    Gain and base are untouched, so the product is preserved exactly.
    """
    return c.with_steps(_merge(c.steps))


def is_irreducible(c):
    for i, st in enumerate(c.steps):
        if st.is_trivial():
            return False
        if i and c.steps[i - 1].m == st.m:
            return False
    return True


def invert_cascade(c):
    """Cascade for ``inv(product(c))``; requires an identity base.

    ``inv(D_K S_{N-1} ... S_0) = inv(S_0) ... inv(S_{N-1}) D_{1/K}``, and the
    trailing gain is moved to the left through the conjugation action.
    """
    if c.base != IDENTITY:
        raise PreconditionError("cascade inversion requires an identity base")
    kinv = c.gain.inverse()
    steps = [gain_conjugate_step(c.gain, st.inverse()) for st in reversed(c.steps)]
    return Cascade(kinv, steps, IDENTITY)


def rescale(c, alpha):
    """The cascade related to ``c`` by the rescaling freedom ``alpha``.

    Gain becomes ``K / alpha``, base ``D_alpha @ B`` and each step is
    conjugated by ``D_alpha``; the product is unchanged.
    """
    alpha = as_scalar(alpha)
    return Cascade(
        c.gain / alpha,
        [gain_conjugate_step(alpha, st) for st in c.steps],
        gain_matrix(alpha) @ c.base,
    )


def identity_lift_steps():
    """Eight alternating steps whose product is the identity.

    The last four applied multiply to ``diag(1/2, 2)`` and the first four
    to its inverse.
    """
    half = as_scalar("1/2")
    return (
        LiftingStep(0, -half),
        LiftingStep(1, 1),
        LiftingStep(0, 1),
        LiftingStep(1, -half),
        LiftingStep(0, 2),
        LiftingStep(1, half),
        LiftingStep(0, -1),
        LiftingStep(1, -1),
    )


def nonuniqueness_witness(h):
    """A second irreducible cascade with the same product, base and gain.

    An identity factorization is spliced in between the base and the first
    step, then the result is reduced.  If that collapses back to ``h`` the
    splice is retried with a gain-conjugated copy of the identity lift.
    """
    if not is_irreducible(h):
        raise PreconditionError("witness construction needs an irreducible cascade")
    ident = identity_lift_steps()
    for k in (1, 3, 5):
        spliced = [gain_conjugate_step(k, st) for st in ident]
        w = reduce_to_irreducible(h.with_steps(spliced + list(h.steps)))
        if w.steps != h.steps:
            return w
    raise PreconditionError("witness construction collapsed")
