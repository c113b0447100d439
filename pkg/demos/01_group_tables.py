"""Finite groups as index tables: validation, orders, centers, nilpotency.

Every structure in this package lives on {0, .., n-1} with identity 0 and a
full multiplication table.  This demo builds a few groups, checks one table
by hand, and reads off the basic invariants.
"""

import numpy as np

from braceforge import (
    CapExceeded,
    all_groups,
    automorphisms,
    cyclic,
    dicyclic,
    dihedral,
    nilpotency_analysis,
    symmetric,
    validate_group,
)

# a hand-rolled table: addition mod 4
table = [[(i + j) % 4 for j in range(4)] for i in range(4)]
G = validate_group(table)
print("hand-rolled Z/4:", "valid," if G.order == 4 else "?", "abelian" if G.is_abelian else "non-abelian")
print("element orders:", G.element_orders)

S3 = symmetric(3)
D8 = dihedral(8)
Q8 = dicyclic(8)
for name, H in (("S3", S3), ("D8", D8), ("Q8", Q8)):
    rep = nilpotency_analysis(H)
    word = f"nilpotent of class {rep.nilpotency_class}" if rep.nilpotent else "not nilpotent"
    print(f"{name}: order {H.order}, center size {len(H.center)}, {word}")

# automorphism groups, found by brute table search
print("Aut sizes:", [len(automorphisms(H)) for H in (cyclic(8), S3, D8, Q8)])

# every group of order 8, one table per isomorphism class
reps = all_groups(8)
print(f"{len(reps)} groups of order 8, abelian flags:", [H.is_abelian for H in reps])

# the search is capped: huge orders are refused rather than attempted
try:
    all_groups(13)
except CapExceeded as e:
    print("cap:", e)
