"""Worked filter-bank examples, as exact cascades and matrices.

Each builder returns fresh immutable objects.  The CLI ``examples``
command serves these under the names in :data:`NAMES`.
"""

from fractions import Fraction

from .laurent import W2, Z, as_scalar
from .lifting import Cascade, LiftingStep, identity_lift_steps, product
from .polyphase import HAAR, IDENTITY, LAZY_CAUSAL, PolyMatrix

__all__ = [
    "NAMES",
    "haar",
    "haar_alt",
    "identity_lift_8",
    "identity_lift_6",
    "example1",
    "example1_matrix",
    "cdf75",
    "cdf75_matrix",
    "legall",
    "example7",
    "ws_one_step",
    "get",
]

ZI = Z ** -1


def haar():
    """Haar bank as an upper step after a lower step."""
    return Cascade(1, [LiftingStep(1, -1), LiftingStep(0, "1/2")], IDENTITY)


def haar_alt():
    """Haar bank with gain 2 and different steps."""
    return Cascade(2, [LiftingStep(0, 1), LiftingStep(1, "-1/2")], IDENTITY)


def identity_lift_8():
    return Cascade(1, identity_lift_steps(), IDENTITY)


def identity_lift_6():
    """Six dyadic, non-linear-phase steps multiplying to the identity."""
    q = Fraction(1, 4)
    steps = [
        LiftingStep(1, 5 * Z ** -2 * (1 + ZI)),
        LiftingStep(0, -(Z ** 2) * (1 - ZI)),
        LiftingStep(1, -(1 + ZI)),
        LiftingStep(0, Fraction(5, 4) * (1 - ZI)),
        LiftingStep(1, -4 * (1 + ZI)),
        LiftingStep(0, -q * Z ** 2 * (1 - ZI)),
    ]
    return Cascade(1, steps, IDENTITY)


def _check_bc(b, c):
    b, c = as_scalar(b), as_scalar(c)
    if not b or not c or b * b == c * c:
        raise ValueError("need b, c nonzero with b**2 != c**2")
    return b, c


def example1_matrix(b=2, c=3):
    """Fourth-order unimodular matrix with two distinct 3-step factorizations."""
    b, c = _check_bc(b, c)
    b2, c2 = b * b, c * c
    r = (b2 - c2) / b2
    return PolyMatrix([
        [Z ** 2 / b2, Z ** 2 * (1 - b * ZI) / b2],
        [r * (1 + b * ZI), r * (1 - (b2 * c2 / (c2 - b2)) * Z ** -2)],
    ])


def example1(b=2, c=3):
    """The two irreducible factorizations ``(A, B)`` of :func:`example1_matrix`."""
    b, c = _check_bc(b, c)
    b2, c2 = b * b, c * c
    first = Cascade(1, [
        LiftingStep(1, 1 + b * ZI),
        LiftingStep(0, Z ** 2 * (1 - b * ZI) / b2),
        LiftingStep(1, -c2 * Z ** -2 * (1 + b * ZI)),
    ], IDENTITY)
    second = Cascade(1, [
        LiftingStep(0, (c2 / (c2 - b2)) * (1 - b * ZI)),
        LiftingStep(1, ((b2 - c2) / b2) * (1 + b * ZI)),
        LiftingStep(0, Z ** 2 * (1 - b * ZI) / (b2 - c2)),
    ], IDENTITY)
    return first, second


def cdf75_matrix():
    """Left side of the CDF 7/5 synthesis-form identity, scale ``2**(-9/2)`` included."""
    scale = W2 / 32  # 2**(-9/2) = sqrt(2)/32
    m = PolyMatrix([
        [-12 * Z + 40 - 12 * ZI, -8 - 8 * ZI],
        [3 * Z ** 2 + 5 * Z + 5 + 3 * ZI, 2 * Z + 12 + 2 * ZI],
    ])
    return m.scale(scale)


def cdf75():
    """Right side of the CDF 7/5 identity as a cascade.

    The trailing ``diag(2*sqrt2, 1/(2*sqrt2))`` factor is carried as the base
    matrix so the three half-sample symmetric steps sit to its left.
    """
    base = PolyMatrix.diag(2 * W2, W2 / 4)
    steps = [
        LiftingStep(1, Fraction(3, 16) * (Z + 1)),
        LiftingStep(0, -1 - ZI),
        LiftingStep(1, -(Z + 1) / 4),
    ]
    return Cascade(1, steps, base)


def legall():
    """LeGall 5/3 analysis bank as two dyadic half-sample symmetric steps."""
    return Cascade(1, [
        LiftingStep(1, -(Z + 1) / 2),
        LiftingStep(0, (1 + ZI) / 4),
    ], IDENTITY)


def example7():
    """Highpass lift of the causal lazy wavelet that does not raise polyphase order."""
    return Cascade(1, [LiftingStep(1, 1 + ZI)], LAZY_CAUSAL)


def ws_one_step():
    """``E0 = z + 1 + 1/z``, ``E1 = z`` normalised to unit DC gain by ``K = 3``."""
    return Cascade(3, [LiftingStep(0, 1 + ZI)], IDENTITY)


_BUILDERS = {
    "haar": haar,
    "haar-alt": haar_alt,
    "identity-lift-8": identity_lift_8,
    "identity-lift-6": identity_lift_6,
    "example1-A": lambda: example1()[0],
    "example1-B": lambda: example1()[1],
    "cdf75": cdf75,
    "legall": legall,
    "example7": example7,
    "ws-one-step": ws_one_step,
}

#: Names accepted by :func:`get` (``example1`` expands to its two parts).
NAMES = ("haar", "haar-alt", "identity-lift-8", "identity-lift-6", "example1",
         "cdf75", "legall", "example7", "ws-one-step")

#: Matrices each named example is expected to multiply out to.
EXPECTED = {
    "haar": lambda: HAAR,
    "haar-alt": lambda: HAAR,
    "identity-lift-8": lambda: IDENTITY,
    "identity-lift-6": lambda: IDENTITY,
    "example1-A": example1_matrix,
    "example1-B": example1_matrix,
    "cdf75": cdf75_matrix,
    "legall": lambda: product(legall()),
    "example7": lambda: PolyMatrix([[1, 0], [1 + ZI, ZI]]),
    "ws-one-step": lambda: PolyMatrix([["1/3", (1 + ZI) / 3], [0, 3]]),
}


def get(name, b=2, c=3):
    """Named example(s) as ``{name: Cascade}``."""
    if name == "example1":
        first, second = example1(b, c)
        return {"example1-A": first, "example1-B": second}
    if name in ("example1-A", "example1-B"):
        first, second = example1(b, c)
        return {name: first if name.endswith("A") else second}
    try:
        return {name: _BUILDERS[name]()}
    except KeyError:
        raise KeyError(f"unknown example {name!r}") from None
