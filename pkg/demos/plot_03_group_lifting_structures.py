"""
Group lifting structures
========================

A structure restricts the gain, the two lifting-filter groups and the
base banks.  Inside the whole-sample symmetric structures the
factorization becomes unique up to rescaling.
"""

from liftkit import (
    HAAR,
    WS,
    WS_REVERSIBLE,
    HS,
    cascade_in_structure,
    dc_normalized,
    factor_in_structure,
    is_d_invariant,
    is_order_increasing,
    presets,
    product,
)
from liftkit import fixtures

for name, s in presets().items():
    print(f"{name:14s} gain={s.gain_group.value:8s} upper={s.upper.symmetry.value}/"
          f"{s.upper.ring.value} lower={s.lower.symmetry.value}/{s.lower.ring.value} "
          f"bases={s.bases.value} D-invariant={is_d_invariant(s)}")

# The six-step identity lift uses dyadic filters that are not symmetric,
# so it does not live in the ws structure.
six = fixtures.identity_lift_6()
print("six-step identity in ws:", cascade_in_structure(six, WS))

# Factoring inside a structure: LeGall comes back exactly.
legall = product(fixtures.legall())
print("LeGall in ws-reversible:", factor_in_structure(legall, WS_REVERSIBLE))

# The one-step bank with lowpass z + 1 + 1/z needs the gain K = 3.
h = product(fixtures.ws_one_step())
print("one-step bank:", factor_in_structure(h, WS), " DC normalised:", dc_normalized(h))
print("its square DC normalised:", dc_normalized(h @ h))

# Haar is already an admissible half-sample symmetric base.
print("Haar in hs:", factor_in_structure(HAAR, HS))

# Order-increasing check: the causal lazy lift fails at the first step.
print("causal lazy lift:", is_order_increasing(fixtures.example7()))
