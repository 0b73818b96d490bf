#!/usr/bin/env python3
"""The subspace semigroup generated by the grading of the model algebra.

Because basis monomials multiply to basis monomials, spans are exact
index sets and the closure of the grading pieces under span-of-products
is finite combinatorics.  The closure turns out to be a faithful copy
of the semigroup itself; for the plain group algebra it collapses to
one subspace per group element.
"""

from invsg import (
    GradedSubspace,
    build_algebra,
    cyclic,
    element_subspace,
    enumerate_semigroup,
    generated_semigroup,
    generator,
    grading,
    group_algebra,
    klein_four,
    order_formula,
)

g = cyclic(4)
alg = build_algebra(g)
pieces = grading(alg)

print("grading piece sizes:", {t: len(pieces[t]) for t in g.elements()})
print("star swaps pieces  :", all(pieces[t].star() == pieces[g.inv(t)] for t in g.elements()))

closure = generated_semigroup(pieces)
print(f"\nclosure of the pieces: {len(closure)} subspaces "
      f"(semigroup size {order_formula(g.order)})")

# every semigroup element names one subspace, bijectively
elements = enumerate_semigroup(g)
images = {a: element_subspace(alg, a) for a in elements}
print("element map is injective:", len(set(images.values())) == len(elements))
print("element map is onto the closure:", set(images.values()) == closure)
print("products match:", all(
    images[a] * images[b] == images[a * b] for a in elements[:6] for b in elements[:6]
))
print("generator 2 maps to its piece:", images[generator(g, 2)] == pieces[2])

# saturated contrast: the group algebra graded by singleton spans
ga = group_algebra(klein_four())
singletons = {t: GradedSubspace(ga, frozenset({t})) for t in klein_four().elements()}
print("\ngroup-algebra closure size:", len(generated_semigroup(singletons)),
      "(one subspace per group element)")
