#!/usr/bin/env python3
"""Partial representations by matrices and their semigroup extension.

A partial bijection becomes a 0/1 partial permutation matrix; the
family extends to the whole semigroup with every image a partial
isometry, exactly (integer arithmetic).
"""

import numpy as np

from invsg import (
    bernoulli_partial_action,
    cyclic,
    extend_to_semigroup,
    idempotent,
    partial_rep_from_partial_action,
    restrict_to_group,
    unit,
    validate_partial_rep,
)

g = cyclic(2)
action = bernoulli_partial_action(g)
rep = partial_rep_from_partial_action(action)

print("matrices of the subset-translation action of Z/2:")
for t in g.elements():
    print(f"  M[{t}] =\n{rep.matrices[t]}")

print("\naxioms:", validate_partial_rep(rep).describe(), sep="\n")

ext = extend_to_semigroup(rep)
print("\nextension over all", len(ext.table), "semigroup elements:")
print("  image of the unit:\n", ext(unit(g)))
print("  image of the idempotent at 1 (a projection):\n", ext(idempotent(g, 1)))
print("  multiplicativity deviation :", ext.max_multiplicative_deviation()[0])
print("  star-compatibility deviation:", ext.max_star_deviation()[0])
print("  partial-isometry deviation  :", ext.max_partial_isometry_deviation()[0])

back = restrict_to_group(ext)
print("\nround trip recovers the matrices:",
      all((back.matrices[t] == rep.matrices[t]).all() for t in g.elements()))

# A genuine unitary representation is in particular a partial one.
g4 = cyclic(4)
omega = np.exp(2j * np.pi / 4)
unitary = [np.array([[omega**t]]) for t in g4.elements()]
from invsg.reps import PartialRep

print("\nunitary character of Z/4 validates:",
      validate_partial_rep(PartialRep(g4, unitary)).passed)
