"""
Uniqueness modulo rescaling
===========================

Random whole-sample symmetric cascades are multiplied out and factored
again.  The result is identical to the input; a rescaled copy is
recognised as equivalent with the rescaling factor recovered exactly.
"""

import random

from liftkit import (
    WS,
    W2,
    Verdict,
    equivalent_mod_rescaling,
    factor_in_structure,
    is_order_increasing,
    product,
    rescale,
)
from liftkit import fixtures
from liftkit.sampling import random_cascade

rng = random.Random(0)
tally = {v: 0 for v in Verdict}
for _ in range(50):
    c = random_cascade(rng, WS)
    again = factor_in_structure(product(c), WS)
    tally[equivalent_mod_rescaling(c, again).kind] += 1
print("refactored:", {k.value: n for k, n in tally.items()})

c = random_cascade(random.Random(1), WS)
r = rescale(c, 3 * W2)
print("original :", c)
print("rescaled :", r)
print("same product:", product(c) == product(r))
print("verdict     :", equivalent_mod_rescaling(c, r))
print("order-increasing:", is_order_increasing(c).orders)

# CDF 7/5: the diagonal factor on the right is the gain moved through the steps.
cdf = fixtures.cdf75()
out = factor_in_structure(product(cdf), WS)
print("CDF 7/5 as stored :", cdf)
print("CDF 7/5 refactored:", out)
print("verdict           :", equivalent_mod_rescaling(out, cdf))
