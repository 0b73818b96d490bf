#!/usr/bin/env python3
"""Partial actions of a group and their semigroup counterparts.

Builds partial actions two ways (restricting a global action, and the
translation action on identity-containing subsets), validates both
axiom systems, and runs the round trip through semigroup actions.
"""

from invsg import (
    bernoulli_partial_action,
    cyclic,
    from_inverse_action,
    generator,
    idempotent,
    restriction_action,
    to_inverse_action,
    unit,
    validate_axioms,
    validate_semigroup_form,
)

g = cyclic(4)

# Restrict the translation action of Z/4 on itself to the subset {0, 1}.
perms = [[g.mul(t, y) for y in range(4)] for t in g.elements()]
action = restriction_action(g, perms, [0, 1])
print("restriction of translation to {0, 1}:")
for t in g.elements():
    print(f"  theta[{t}] = {action.theta[t]}  (range D_{t} = {sorted(action.domain_of(t))})")

print("\ndomain axioms        :", validate_axioms(action).describe())
print("composition identities:", validate_semigroup_form(action).describe())

# The same data as an action of the 20-element semigroup.
pi = to_inverse_action(action)
print("\nunit acts as        :", pi(unit(g)))
print("generator 1 acts as :", pi(generator(g, 1)))
print("idempotent 1 acts as:", pi(idempotent(g, 1)), "(identity on D_1)")
print("multiplicative on all pairs:", pi.check_multiplicative() is None)
print("round trip recovers the action:", from_inverse_action(pi) == action)

# The translation action on subsets containing the identity: the ground
# set has 2^(p-1) points and every axiom holds.
b = bernoulli_partial_action(g)
print(f"\nsubset-translation action: {b.set_size} points,",
      "valid:", validate_axioms(b).passed)
