"""Ideals, socle, and the three nilpotency series.

The running example is Z/3 x Z/2 with circle twisted by inversion: addition
is abelian but the circle group is S3-shaped.  Its Z/2 part is a left ideal
that fails to be an ideal, and its right series reaches zero while the left
one stalls.
"""

import numpy as np

from braceforge import (
    brace_from_group,
    fix,
    generated_subbrace,
    is_ideal,
    is_left_ideal,
    ker_lambda,
    left_series,
    right_series,
    semidirect_product,
    socle,
    socle_series_and_mpl,
    strong_series,
    cyclic,
    symmetric,
)

A = semidirect_product(
    brace_from_group(cyclic(3)), brace_from_group(cyclic(2)), [[0, 1, 2], [0, 2, 1]]
)
print("order", A.order, "addition abelian:", A.add.is_abelian)
print("socle:", socle(A).members, " fix:", fix(A).members, " ker lambda:", ker_lambda(A).members)

v = is_left_ideal(A, [0, 3])
w = is_ideal(A, [0, 3])
print("is {0,3} a left ideal?", v.left_ideal)
print("is {0,3} an ideal?", w.ideal, "-", w.reason, "at", w.failing_witness)

print("sub-brace generated by 1:", generated_subbrace(A, {1}).members)
print("sub-brace generated by 4:", generated_subbrace(A, {4}).members)

for kind, rep in (("left", left_series(A)), ("right", right_series(A))):
    sizes = ",".join(str(len(t)) for t in rep.terms)
    print(f"{kind} series sizes {sizes}, reaches zero: {rep.reaches_zero}")

soc = socle_series_and_mpl(A)
print("socle series sizes:", [len(t) for t in soc.terms], " mpl:", soc.mpl)

# a trivial brace on a non-nilpotent group is right nilpotent (star is zero)
# yet has no multipermutation level: the socle series never climbs
T = brace_from_group(symmetric(3))
ts = socle_series_and_mpl(T)
print("trivial S3: right reaches zero:", right_series(T).reaches_zero,
      " mpl:", ts.mpl, " stalls at:", ts.stall_index)
print("convention:", ts.convention)

# strong series of the order-16 cocycle brace: equal consecutive terms are
# not proof of a fixpoint, so the computation keeps going past the plateau
from demos_common import order16_brace  # noqa: E402  (shared demo fixture)

B = order16_brace()
rep = strong_series(B)
print("order-16 strong series sizes:", [len(t) for t in rep.terms])
print("terms 4 and 5 agree:", rep.terms[3].members == rep.terms[4].members,
      "- yet the series still falls to", rep.terms[5].members)
