#!/usr/bin/env python3
"""Tour of the universal inverse semigroup attached to a finite group.

Walks through canonical-form arithmetic, enumeration, the counting
formula, and the brute-force inverse-semigroup certificate.
"""

from invsg import (
    cyclic,
    enumerate_semigroup,
    generator,
    idempotent,
    order_formula,
    reduce_word,
    unit,
    verify_inverse_semigroup,
)

g = cyclic(4)
print("group: integers mod 4\n")

# Each group element t contributes a generator; products fold into a
# canonical (support, degree) form.
t1 = generator(g, 1)
print("generator 1          :", t1)
print("square               :", t1 * t1)
print("with its star        :", t1 * t1.star(), "(an idempotent)")
print("unit                 :", unit(g))
print("idempotent at 3      :", idempotent(g, 3))

# Folding longer words: the support records every prefix product.
word = [1, 1, 1, 1]
print("\nword [1,1,1,1] folds to:", reduce_word(g, word))

# The whole semigroup for small groups, against the closed-form count.
for p in range(2, 8):
    size = len(enumerate_semigroup(cyclic(p)))
    print(f"group order {p}: semigroup size {size} (formula {order_formula(p)})")
print("group order 28: formula gives", order_formula(28))

# Exhaustive certificate: associativity, the involution laws,
# uniqueness of inverses, commuting idempotents.
print()
print(verify_inverse_semigroup(g).describe())
