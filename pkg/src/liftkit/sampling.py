"""Seeded random filters and cascades drawn from a group lifting structure.

Used for property tests and for the CLI's sampling evidence.  Filters are
short symmetric (or antisymmetric) polynomials with small rational, dyadic
or sqrt(2) coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, Scalar, Symmetry
from .lifting import Cascade, LiftingStep
from .polyphase import HAAR, IDENTITY
from .structures import BaseSet, GainGroup, Ring

__all__ = ["random_scalar", "random_filter", "random_cascade"]


def random_scalar(rng, dyadic=False, nonzero=True, surd=False):
    """Small exact scalar; ``surd`` allows a sqrt(2) part."""
    while True:
        num = rng.randint(-9, 9)
        den = 2 ** rng.randint(0, 3) if dyadic else rng.randint(1, 7)
        x = Scalar(Fraction(num, den))
        if surd and not dyadic and rng.random() < 0.3:
            x = x + Scalar(0, Fraction(rng.randint(-3, 3), rng.randint(1, 4)))
        if x or not nonzero:
            return x


def random_filter(rng, symmetry, dyadic=False, half_length=None):
    """Nonzero filter with the given symmetry and up to ``2*half_length`` taps.

    ``half_length`` defaults to a random choice of 1 or 2, giving support
    width at most 4.
    """
    symmetry = Symmetry(symmetry)
    j = half_length or rng.choice((1, 2))
    while True:
        taps = {}
        for n in range(1, j + 1):
            v = random_scalar(rng, dyadic, nonzero=False)
            if symmetry is Symmetry.HS_PLUS:
                taps[n], taps[1 - n] = v, v
            elif symmetry is Symmetry.HS_MINUS:
                taps[n - 1], taps[-n] = v, v
            elif symmetry is Symmetry.WA:
                taps[n], taps[-n] = v, -v
            else:
                taps[n], taps[1 - n] = v, random_scalar(rng, dyadic, nonzero=False)
        s = LaurentPoly.from_dict(taps)
        if s:
            return s


def random_cascade(rng, structure, max_steps=4):
    """Random irreducible cascade in ``structure`` with 1..``max_steps`` steps.

    The first step's characteristic is random; later steps alternate.  The
    base is the identity or Haar according to the structure's base set.
    """
    n = rng.randint(1, max_steps)
    m = rng.randint(0, 1)
    steps = []
    for _ in range(n):
        g = structure.group_for(m)
        steps.append(LiftingStep(m, random_filter(rng, g.symmetry, g.ring is Ring.DYADIC)))
        m = 1 - m
    if structure.gain_group is GainGroup.TRIVIAL:
        gain = Scalar(1)
    else:
        gain = random_scalar(rng, surd=True)
    base = IDENTITY if structure.bases is BaseSet.IDENTITY_ONLY else HAAR
    return Cascade(gain, steps, base)
