"""Constructive lifting factorization.

Two routes are provided.  :func:`factor_generic` is Euclidean division on
the first column with unconstrained filters; its output is one of many
valid factorizations.  :func:`factor_in_structure` peels lifting steps off
the left of a matrix, restricting every filter to the groups of a
:class:`~liftkit.structures.GroupLiftingStructure`, and stops when the
remainder is an admissible gain times base.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .exceptions import NotFactorableError, PreconditionError
from .laurent import LaurentPoly, Scalar, Symmetry, as_scalar
from .lifting import (
    Cascade,
    LiftingStep,
    gain_conjugate_step,
    is_irreducible,
    product,
    reduce_to_irreducible,
)
from .polyphase import (
    IDENTITY,
    PolyMatrix,
    is_hs,
    is_unimodular,
    is_ws,
    matrix_order,
    matrix_support,
)
from .structures import (
    BaseSet,
    FilterGroup,
    base_in_set,
    cascade_in_structure,
    filter_in_group,
    gain_in_group,
    is_order_increasing,
)

__all__ = [
    "PeelReport",
    "factor_gain",
    "peel_step",
    "factor_in_structure",
    "factor_generic",
    "dyadic_liftable",
]

log = logging.getLogger(__name__)

_ZERO = Scalar(0)


@dataclass(frozen=True)
class PeelReport:
    """One successful peel: ``step.matrix() @ remainder`` is the input."""

    step: LiftingStep
    remainder: PolyMatrix
    order_before: int
    order_after: int


def factor_gain(k):
    """Four lifting steps (application order) whose product is ``diag(1/k, k)``.

    Returns an empty tuple for ``k == 1``.
    """
    k = as_scalar(k)
    if not k:
        raise PreconditionError("gain must be nonzero")
    if k == 1:
        return ()
    return (
        LiftingStep(0, k * (k - 1)),
        LiftingStep(1, k.inverse()),
        LiftingStep(0, 1 - k),
        LiftingStep(1, -1),
    )


# -- exact linear algebra ------------------------------------------------


def _solve(rows, rhs, ncols):
    """Particular solution of ``rows @ x == rhs`` with free variables at zero.

    Returns ``None`` when the system is inconsistent.  Pivots are taken left
    to right, so trailing columns are the ones left free.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, len(aug)) if aug[i][col]), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = aug[row][col].inverse()
        aug[row] = [x * inv for x in aug[row]]
        for i in range(len(aug)):
            if i != row and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == len(aug):
            break
    if any(r[-1] for r in aug[row:]):
        return None
    x = [_ZERO] * ncols
    for i, col in enumerate(pivots):
        x[col] = aug[i][-1]
    return x


def _filter_variables(sym, lo, hi):
    """Free parameters of a filter in ``sym`` supported inside ``[lo, hi]``.

    Each parameter is a ``{n: sign}`` map.  Parameters are ordered by
    distance from the centre of symmetry so that a basic solution of the
    peel system has the smallest support.
    """
    sym = Symmetry(sym)
    if sym is Symmetry.UNCONSTRAINED:
        centre = (lo + hi) / 2
        return [{n: 1} for n in sorted(range(lo, hi + 1), key=lambda n: (abs(n - centre), n))]
    out = []
    if sym is Symmetry.HS_PLUS:
        # s(n) = s(1 - n), centre 1/2
        for n in range(1, hi + 1):
            if lo <= 1 - n:
                out.append({n: 1, 1 - n: 1})
    elif sym is Symmetry.HS_MINUS:
        # s(n) = s(-1 - n), centre -1/2
        for n in range(0, hi + 1):
            if lo <= -1 - n:
                out.append({n: 1, -1 - n: 1})
    else:
        # s(n) = -s(-n), s(0) = 0
        for n in range(1, hi + 1):
            if lo <= -n:
                out.append({n: 1, -n: -1})
    return out


def _candidate_step(e, m, group, target, variables):
    (a, b), (c, d) = e.rows
    upd, fixed = ((a, b), (c, d)) if m == 0 else ((c, d), (a, b))
    lo, hi = matrix_support(e)
    t0, t1 = target
    eqs, rhs = [], []
    for v, u in zip(upd, fixed):
        for t in range(lo, hi + 1):
            if t0 <= t <= t1:
                continue
            eqs.append([sum((sign * u[t - n] for n, sign in var.items()), _ZERO)
                        for var in variables])
            rhs.append(v[t])
    x = _solve(eqs, rhs, len(variables))
    if x is None:
        return None
    taps = {}
    for coef, var in zip(x, variables):
        for n, sign in var.items():
            taps[n] = coef * sign
    s = LaurentPoly.from_dict(taps)
    if s.is_zero() or not filter_in_group(s, group):
        return None
    return LiftingStep(m, s)


def peel_step(e, m, group=FilterGroup()):
    """Remove one lifting step with characteristic ``m`` from the left of ``e``.

    Searches for a filter ``S`` in ``group`` such that
    ``inv(step) @ e`` has strictly smaller polyphase order, trying the
    narrowest target support first.  Raises :class:`NotFactorableError`
    ("peel failed") if none exists.
    """
    if not is_unimodular(e):
        raise PreconditionError("peel_step needs a unimodular matrix")
    before = matrix_order(e)
    if before < 1:
        raise PreconditionError("peel_step needs polyphase order >= 1")
    lo, hi = matrix_support(e)
    fixed = (e[1, 0], e[1, 1]) if m == 0 else (e[0, 0], e[0, 1])
    fixed = [u for u in fixed if u]
    # S*u must stay inside [lo, hi] for every nonzero entry u of the fixed row
    s_lo = lo - min(u.lo for u in fixed)
    s_hi = hi - max(u.hi for u in fixed)
    if s_lo <= s_hi:
        variables = _filter_variables(group.symmetry, s_lo, s_hi)
        u_lo = min(u.lo for u in fixed)
        u_hi = max(u.hi for u in fixed)
        for width in range(u_hi - u_lo, before):
            for t0 in range(max(lo, u_hi - width), min(u_lo, hi - width) + 1):
                st = _candidate_step(e, m, group, (t0, t0 + width), variables)
                if st is None:
                    continue
                rem = st.inverse().matrix() @ e
                after = matrix_order(rem)
                if after < before:
                    return PeelReport(st, rem, before, after)
    raise NotFactorableError(
        f"peel failed (m={m}, group={group.symmetry.value}/{group.ring.value})"
    )


def _terminal(rem, structure):
    """``(gain, base)`` if ``rem`` is an admissible gain times base, else None."""
    if structure.bases is BaseSet.IDENTITY_ONLY:
        if matrix_order(rem) != 0:
            return None
        (a, b), (c, d) = rem.rows
        if b or c or not d.is_constant():
            return None
        k = d[0]
        return (k, IDENTITY) if gain_in_group(k, structure.gain_group) else None
    if base_in_set(rem, structure.bases):
        return Scalar(1), rem
    return None


def factor_in_structure(h, structure, verbose=None):
    """Irreducible, order-increasing factorization of ``h`` inside ``structure``.

    ``verbose`` may be a callable receiving each :class:`PeelReport`.
    """
    if not is_unimodular(h):
        raise PreconditionError("factorization needs a unimodular matrix")
    if structure.bases is BaseSet.IDENTITY_ONLY:
        if not is_ws(h):
            raise NotFactorableError(
                "not factorable in structure: matrix is not whole-sample symmetric")
    elif not is_hs(h):
        raise NotFactorableError(
            "not factorable in structure: matrix is not half-sample symmetric")

    peeled = []
    rem = h
    budget = matrix_order(h) + 2
    while True:
        end = _terminal(rem, structure)
        if end is not None:
            break
        if len(peeled) >= budget or matrix_order(rem) < 1:
            raise NotFactorableError("not factorable in structure")
        tries = (1, 0) if not peeled else (1 - peeled[-1].m,)
        report = None
        for m in tries:
            try:
                report = peel_step(rem, m, structure.group_for(m))
                break
            except NotFactorableError as exc:
                last = exc
        if report is None:
            raise NotFactorableError("not factorable in structure", report=str(last))
        if verbose is not None:
            verbose(report)
        log.debug("peeled %s, order %d -> %d", report.step, report.order_before,
                  report.order_after)
        peeled.append(report.step)
        rem = report.remainder

    gain, base = end
    kinv = gain.inverse()
    steps = [gain_conjugate_step(kinv, st) for st in reversed(peeled)]
    out = Cascade(gain, steps, base)
    if product(out) != h:
        raise AssertionError("factorization does not reproduce the input")
    if not (is_irreducible(out) and cascade_in_structure(out, structure)):
        raise NotFactorableError("not factorable in structure")
    # each peel lowered the order, so this holds by construction
    assert is_order_increasing(out)
    return out


def _euclid_peel(a, c):
    """One division step on column ``(a, c)``: returns the lifting step applied."""
    if a.order() > c.order():
        num, den, m = a, c, 0
    else:
        num, den, m = c, a, 1
    q = LaurentPoly()
    r = num
    lead = den[den.hi]
    while r and r.order() >= den.order():
        t = LaurentPoly.monomial(r[r.hi] / lead, r.hi - den.hi)
        r = r - t * den
        q = q + t
    return LiftingStep(m, -q)


def _diag_unit_steps(u):
    """Steps (application order) for ``diag(u, 1/u)`` with ``u`` a monomial."""
    uinv = u ** -1
    return [
        LiftingStep(0, -1),
        LiftingStep(1, 1),
        LiftingStep(0, u - 1),
        LiftingStep(1, -uinv),
        LiftingStep(0, u),
    ]


def factor_generic(h):
    """Unconstrained lifting factorization by Laurent-polynomial division.

    Division cancels from the high-index end, leaving remainders at the low
    end of the support.  The result is irreducible with identity base; a
    constant diagonal remainder becomes the gain.
    """
    if not is_unimodular(h):
        raise PreconditionError("factorization needs a unimodular matrix")
    applied = []
    cur = h
    while cur[1, 0]:
        if cur[0, 0].is_zero():
            # swap-in the bottom entry so the division can continue
            st = LiftingStep(0, 1)
        else:
            st = _euclid_peel(cur[0, 0], cur[1, 0])
        applied.append(st)
        cur = st.matrix() @ cur
    # cur = [[u, b], [0, 1/u]] = diag(u, 1/u) @ upper(b/u)
    u = cur[0, 0]
    tail = LiftingStep(0, cur[0, 1] / u)
    left = [st.inverse() for st in applied]  # h = left[0] @ left[1] @ ... @ cur
    if u.is_constant():
        k = u[0].inverse()
        steps = [tail] + [gain_conjugate_step(u[0], st) for st in reversed(left)]
        out = Cascade(k, steps, IDENTITY)
    else:
        steps = [tail] + _diag_unit_steps(u) + list(reversed(left))
        out = Cascade(1, steps, IDENTITY)
    out = reduce_to_irreducible(out)
    if product(out) != h:
        raise AssertionError("generic factorization does not reproduce the input")
    return out


def dyadic_liftable(b):
    """True if a lifting factorization of ``b`` with dyadic filters was found.

    Uses :func:`factor_generic` and expands any gain into lifting steps.
    ``False`` means "not confirmed", not a proof of non-existence.
    """
    if not is_unimodular(b):
        return False
    c = factor_generic(b)
    steps = list(c.steps) + list(factor_gain(c.gain))
    c = reduce_to_irreducible(Cascade(1, steps, IDENTITY))
    return all(st.s.is_dyadic() for st in c.steps)
