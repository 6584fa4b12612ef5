"""
Polyphase matrices and lifting steps
====================================

A two-channel filter bank is stored as a 2x2 matrix of Laurent
polynomials.  Everything here is exact: coefficients live in Q(sqrt 2).
"""

from liftkit import HAAR, Z, LiftingStep, Cascade, product, to_filters
from liftkit.polyphase import det, is_hs, is_ws, matrix_order

ZI = Z ** -1

# Polynomials are built from the delay symbol z.
f = Z + 1 + ZI
print("f          =", f)
print("f(1)       =", f(1))
print("support    =", f.support_interval(), "order", f.order())

# The Haar bank and its lowpass/highpass filters.
print("Haar       =", HAAR)
print("filters    =", to_filters(HAAR))
print("det        =", det(HAAR), " order", matrix_order(HAAR))
print("HS / WS    =", is_hs(HAAR), is_ws(HAAR))

# A lifting step updates one channel with a filtered copy of the other.
# Applied first to last: a lower step (highpass update), then an upper step.
haar = Cascade(1, [LiftingStep(1, -1), LiftingStep(0, "1/2")])
print("cascade    =", haar)
print("product == Haar:", product(haar) == HAAR)

# The LeGall 5/3 bank: two dyadic steps, whole-sample symmetric result.
legall = Cascade(1, [LiftingStep(1, -(Z + 1) / 2), LiftingStep(0, (1 + ZI) / 4)])
h = product(legall)
print("LeGall     =", h)
print("filters    =", to_filters(h))
print("WS:", is_ws(h), " order:", matrix_order(h))
