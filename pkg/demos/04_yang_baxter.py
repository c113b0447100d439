"""From braces to set-theoretic Yang-Baxter solutions.

Every skew brace yields a nondegenerate solution r(x, y) = (sigma_x(y),
tau_y(x)) with sigma_x the lambda map of x.  Solutions of abelian type are
involutive; orbits under all the sigma and tau maps decompose a solution.
"""

import numpy as np

from braceforge import (
    brace_from_group,
    brace_from_ring,
    decomposable_by_bipartition,
    orbits,
    permutation_solution,
    restrict_solution,
    solution_from_brace,
    symmetric,
    validate_solution,
)
from demos_common import order16_brace

B = order16_brace()
s = solution_from_brace(B)
rep = validate_solution(s)
print(f"order-16 brace solution: ybe {rep.ybe}, nondegenerate {rep.nondegenerate}, "
      f"involutive {rep.involutive}")
print("orbits:", orbits(s))

# the trivial brace on a non-abelian group gives a valid but non-involutive
# solution: r(x, y) = (y, -y + x + y)
T = solution_from_brace(brace_from_group(symmetric(3)))
t_rep = validate_solution(T)
print("trivial S3 solution: valid", t_rep.valid, " involutive", t_rep.involutive)

# adjoint brace of the F2-ring on x, y with all squares zero
def bits(i):
    return (i >> 2) & 1, (i >> 1) & 1, i & 1

def idx(a, b, c):
    return 4 * (a % 2) + 2 * (b % 2) + (c % 2)

add = np.zeros((8, 8), dtype=int)
mul = np.zeros((8, 8), dtype=int)
for i in range(8):
    a1, b1, c1 = bits(i)
    for j in range(8):
        a2, b2, c2 = bits(j)
        add[i, j] = idx(a1 + a2, b1 + b2, c1 + c2)
        mul[i, j] = idx(0, 0, a1 * b2 + b1 * a2)
R = brace_from_ring(add, mul)
rs = solution_from_brace(R)
print("ring brace orbits:", orbits(rs))

# restricting to an invariant orbit gives a smaller solution
r45 = restrict_solution(rs, [4, 5])
print("restriction to {4,5}: size", r45.size,
      " splits as", decomposable_by_bipartition(r45))

# two commuting permutations give a solution directly
p = permutation_solution([1, 2, 0, 3], [0, 1, 2, 3])
print("permutation solution valid:", validate_solution(p).valid,
      " orbits:", orbits(p))
