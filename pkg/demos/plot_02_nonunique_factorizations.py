"""
Lifting factorizations are not unique
=====================================

The same matrix has many lifting factorizations.  We show the two
printed Haar factorizations, a factorization of the identity, and a
mechanically produced second factorization of any cascade.
"""

from liftkit import (
    Cascade,
    equivalent_mod_rescaling,
    factor_generic,
    is_irreducible,
    nonuniqueness_witness,
    product,
)
from liftkit import fixtures

haar, alt = fixtures.haar(), fixtures.haar_alt()
print("haar      :", haar)
print("haar (alt):", alt)
print("same product:", product(haar) == product(alt))

# Eight steps whose product is the identity.
ident = fixtures.identity_lift_8()
print("identity lift:", ident)
print("product is I :", product(ident) == product(Cascade()))

# Splicing that identity into any cascade and reducing gives another one.
for name in ("haar", "legall"):
    c = fixtures.get(name)[name]
    w = nonuniqueness_witness(c)
    print(f"{name}: {len(c.steps)} steps -> witness with {len(w.steps)} steps,",
          "irreducible:", is_irreducible(w), " same product:", product(w) == product(c))

# A fourth-order matrix with two 3-step factorizations of first-order filters.
a, b = fixtures.example1(2, 3)
print("A:", a)
print("B:", b)
print("same product:", product(a) == product(b))
print("verdict     :", equivalent_mod_rescaling(a, b))

# Euclidean division finds yet another factorization.
print("division   :", factor_generic(product(a)))
