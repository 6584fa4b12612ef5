"""Group lifting structures and the uniqueness checks built on them.

Every group involved here is infinite, so structures are described by
membership predicates: a gain group, a filter group for upper (lowpass
update) steps, one for lower (highpass update) steps, and a set of base
filter banks.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .exceptions import PreconditionError
from .laurent import Scalar, Symmetry, as_scalar
from .lifting import (
    gain_conjugate_step,
    gain_matrix,
    is_irreducible,
    partial_products,
)
from .polyphase import (
    HAAR,
    IDENTITY,
    is_hs,
    is_unimodular,
    matrix_order,
    to_filters,
)

__all__ = [
    "Ring",
    "GainGroup",
    "BaseSet",
    "FilterGroup",
    "GroupLiftingStructure",
    "Verdict",
    "EquivalenceVerdict",
    "OrderCheck",
    "WS",
    "WS_REVERSIBLE",
    "HS",
    "HS_REVERSIBLE",
    "ELASF",
    "presets",
    "structure_by_name",
    "filter_in_group",
    "base_in_set",
    "step_in_structure",
    "cascade_in_structure",
    "is_d_invariant",
    "is_order_increasing",
    "equivalent_mod_rescaling",
    "shares_nonzero_entry",
    "dc_normalized",
]


class Ring(str, enum.Enum):
    FIELD = "field"
    DYADIC = "dyadic"


class GainGroup(str, enum.Enum):
    FULL = "full"
    TRIVIAL = "trivial"


class BaseSet(str, enum.Enum):
    IDENTITY_ONLY = "IdentityOnly"
    HAAR_ONLY = "HaarOnly"
    CONCENTRIC_EQUAL_LENGTH_HS = "ConcentricEqualLengthHS"
    CONCENTRIC_EQUAL_LENGTH_HS_DYADIC_LIFTABLE = "ConcentricEqualLengthHSDyadicLiftable"


@dataclass(frozen=True)
class FilterGroup:
    """Additive group of lifting filters: a symmetry class over a coefficient ring."""

    symmetry: Symmetry = Symmetry.UNCONSTRAINED
    ring: Ring = Ring.FIELD

    def __post_init__(self):
        object.__setattr__(self, "symmetry", Symmetry(self.symmetry))
        object.__setattr__(self, "ring", Ring(self.ring))

    def __contains__(self, s):
        return filter_in_group(s, self)


@dataclass(frozen=True)
class GroupLiftingStructure:
    gain_group: GainGroup
    upper: FilterGroup
    lower: FilterGroup
    bases: BaseSet
    name: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "gain_group", GainGroup(self.gain_group))
        object.__setattr__(self, "bases", BaseSet(self.bases))

    def group_for(self, m):
        return self.upper if m == 0 else self.lower


_HSP = FilterGroup(Symmetry.HS_PLUS, Ring.FIELD)
_HSM = FilterGroup(Symmetry.HS_MINUS, Ring.FIELD)
_WA = FilterGroup(Symmetry.WA, Ring.FIELD)
_HSP_D = FilterGroup(Symmetry.HS_PLUS, Ring.DYADIC)
_HSM_D = FilterGroup(Symmetry.HS_MINUS, Ring.DYADIC)
_WA_D = FilterGroup(Symmetry.WA, Ring.DYADIC)

#: Unimodular whole-sample symmetric banks, lifted from the identity.
WS = GroupLiftingStructure(GainGroup.FULL, _HSP, _HSM, BaseSet.IDENTITY_ONLY, "ws")
#: Reversible (dyadic, no gain scaling) whole-sample symmetric banks.
WS_REVERSIBLE = GroupLiftingStructure(
    GainGroup.TRIVIAL, _HSP_D, _HSM_D, BaseSet.IDENTITY_ONLY, "ws-reversible"
)
#: Unimodular half-sample symmetric banks over concentric equal-length bases.
HS = GroupLiftingStructure(
    GainGroup.FULL, _WA, _WA, BaseSet.CONCENTRIC_EQUAL_LENGTH_HS, "hs"
)
HS_REVERSIBLE = GroupLiftingStructure(
    GainGroup.TRIVIAL,
    _WA_D,
    _WA_D,
    BaseSet.CONCENTRIC_EQUAL_LENGTH_HS_DYADIC_LIFTABLE,
    "hs-reversible",
)
#: Even-length analysis/synthesis filter banks: dyadic WA lifts of Haar.
ELASF = GroupLiftingStructure(GainGroup.TRIVIAL, _WA_D, _WA_D, BaseSet.HAAR_ONLY, "elasf")


def presets():
    return {s.name: s for s in (WS, WS_REVERSIBLE, HS, HS_REVERSIBLE, ELASF)}


def structure_by_name(name):
    try:
        return presets()[name]
    except KeyError:
        raise ValueError(f"unknown structure {name!r}") from None


def filter_in_group(s, g):
    if not s.has_symmetry(g.symmetry):
        return False
    return g.ring is Ring.FIELD or s.is_dyadic()


def _equal_length_hs(b):
    if not (is_unimodular(b) and is_hs(b)):
        return False
    fp = to_filters(b)
    return fp.h0.order() == fp.h1.order()


def base_in_set(b, s):
    """Membership of a base matrix; the dyadic-liftable case is semi-decided.

    For :attr:`BaseSet.CONCENTRIC_EQUAL_LENGTH_HS_DYADIC_LIFTABLE` a
    ``True`` means a dyadic lifting factorization was exhibited; ``False``
    means either a necessary condition fails or none was found.
    """
    s = BaseSet(s)
    if s is BaseSet.IDENTITY_ONLY:
        return b == IDENTITY
    if s is BaseSet.HAAR_ONLY:
        return b == HAAR
    if not _equal_length_hs(b):
        return False
    if s is BaseSet.CONCENTRIC_EQUAL_LENGTH_HS:
        return True
    from .factorize import dyadic_liftable

    return dyadic_liftable(b)


def gain_in_group(k, g):
    k = as_scalar(k)
    if GainGroup(g) is GainGroup.TRIVIAL:
        return k == 1
    return bool(k)


def step_in_structure(st, s):
    return filter_in_group(st.s, s.group_for(st.m))


def cascade_in_structure(c, s):
    return (
        gain_in_group(c.gain, s.gain_group)
        and all(step_in_structure(st, s) for st in c.steps)
        and base_in_set(c.base, s.bases)
    )


def is_d_invariant(s):
    """Whether the filter groups are closed under the gain-group conjugation.

    Conjugating by ``D_K`` multiplies filters by ``K**2`` or ``K**-2``.
    Symmetry classes are preserved by any scalar, so only the coefficient
    ring matters: a field absorbs every ``K**2``, the dyadic rationals do
    not (``K = 3``).
    """
    if s.gain_group is GainGroup.TRIVIAL:
        return True
    return s.upper.ring is Ring.FIELD and s.lower.ring is Ring.FIELD


class OrderCheck(NamedTuple):
    ok: bool
    failed_at: Optional[int]
    orders: tuple

    def __bool__(self):
        return self.ok


def is_order_increasing(c):
    """Check ``order(E(n)) > order(E(n-1))`` along the partial products.

    Returns an :class:`OrderCheck` that is truthy on success and carries
    the first failing step index otherwise.
    """
    if not is_irreducible(c):
        raise PreconditionError("order-increasing defined on irreducible cascades")
    orders = tuple(matrix_order(e) for e in partial_products(c))
    for n in range(len(c.steps)):
        if orders[n + 1] <= orders[n]:
            return OrderCheck(False, n, orders)
    return OrderCheck(True, None, orders)


class Verdict(str, enum.Enum):
    IDENTICAL = "Identical"
    EQUIVALENT = "EquivalentModuloRescaling"
    INEQUIVALENT = "Inequivalent"


@dataclass(frozen=True)
class EquivalenceVerdict:
    kind: Verdict
    alpha: Optional[Scalar] = None
    reason: Optional[str] = None

    @property
    def equivalent(self):
        return self.kind is not Verdict.INEQUIVALENT

    def __str__(self):
        if self.kind is Verdict.EQUIVALENT:
            return f"{self.kind.value}(alpha={self.alpha})"
        if self.kind is Verdict.INEQUIVALENT:
            return f"{self.kind.value}: {self.reason}"
        return self.kind.value


def equivalent_mod_rescaling(c1, c2):
    """Compare two irreducible cascades for equivalence modulo rescaling.

    With ``alpha = K1 / K2`` the cascades are equivalent when they have the
    same length, ``base2 == D_alpha @ base1`` and every step of ``c2`` is
    the ``D_alpha`` conjugate of the matching step of ``c1``.  Conditions
    are checked in that order and the first failure is reported.
    """
    if not (is_irreducible(c1) and is_irreducible(c2)):
        raise PreconditionError("equivalence is defined on irreducible cascades")
    alpha = c1.gain / c2.gain
    if len(c1.steps) != len(c2.steps):
        return EquivalenceVerdict(
            Verdict.INEQUIVALENT,
            reason=f"step count differs ({len(c1.steps)} vs {len(c2.steps)})",
        )
    if c2.base != gain_matrix(alpha) @ c1.base:
        return EquivalenceVerdict(
            Verdict.INEQUIVALENT, reason=f"base mismatch for alpha={alpha}"
        )
    for i, (a, b) in enumerate(zip(c1.steps, c2.steps)):
        if b != gain_conjugate_step(alpha, a):
            return EquivalenceVerdict(
                Verdict.INEQUIVALENT, reason=f"step {i} differs for alpha={alpha}"
            )
    if alpha == 1:
        return EquivalenceVerdict(Verdict.IDENTICAL, alpha=alpha)
    return EquivalenceVerdict(Verdict.EQUIVALENT, alpha=alpha)


def shares_nonzero_entry(b1, b2, z0=1):
    """True if some entry of ``b1`` and ``b2`` agrees and is nonzero at ``z0``."""
    v1, v2 = b1.evaluate(z0), b2.evaluate(z0)
    return any(
        x == y and x
        for r1, r2 in zip(v1, v2)
        for x, y in zip(r1, r2)
    )


def dc_normalized(m):
    """Lowpass DC gain ``H0(1) == 1``."""
    return to_filters(m).h0(1) == 1
