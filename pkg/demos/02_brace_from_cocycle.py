"""A skew brace from a bijective 1-cocycle.

A group G acting on a group X by automorphisms, together with a bijection
pi: G -> X satisfying pi(gh) = pi(g) + g.pi(h), induces a brace on X whose
circle operation is transported from G.  Here G is the dihedral group of
order 16 acting on Z/8 x Z/2; the resulting brace has abelian addition but
a non-abelian circle group, and its star table is far from zero.
"""

import numpy as np

from braceforge import (
    CocycleDatum,
    abelian,
    brace_from_cocycle,
    classify,
    dihedral,
    lambda_of,
)

G = dihedral(16)  # r^i s^j sits at index i + 8j
X = abelian([8, 2])  # (m, n) sits at index 2m + n


def x(m, n):
    return 2 * (m % 8) + (n % 2)


# the generators act linearly on pairs (m, n)
r_act = [0] * 16
s_act = [0] * 16
for m in range(8):
    for n in range(2):
        r_act[x(m, n)] = x(m + 4 * n, m + n)
        s_act[x(m, n)] = x(3 * m + 4 * n, n)


def compose(p, q):
    return [p[q[k]] for k in range(16)]


rows = [None] * 16
for i in range(8):
    for j in range(2):
        p = list(range(16))
        for _ in range(i):
            p = compose(r_act, p)
        if j:
            p = compose(p, s_act)
        rows[i + 8 * j] = p

pi = (0, 2, 5, 15, 8, 10, 13, 7, 3, 12, 14, 1, 11, 4, 6, 9)
A = brace_from_cocycle(CocycleDatum(G=G, X=X, action=np.array(rows), pi=pi))

cls = classify(A)
print(f"order {A.order} brace: abelian type {cls.abelian_type}, two-sided {cls.two_sided}")
print("addition abelian:", A.add.is_abelian, " circle abelian:", A.circle.is_abelian)

# lambda maps measure how far circle sits from addition
print("lambda_2 =", lambda_of(A, 2))
print("star spot checks: 2*2 =", int(A.star[2, 2]), " 11*2 =", int(A.star[11, 2]))
zero_rows = [a for a in range(16) if not A.star[a].any()]
print("elements acting trivially under star:", zero_rows)

# a perturbed pi is caught by the cocycle law
bad = list(pi)
bad[1], bad[2] = bad[2], bad[1]
try:
    brace_from_cocycle(CocycleDatum(G=G, X=X, action=np.array(rows), pi=tuple(bad)))
except Exception as e:
    print("perturbed pi rejected:", e)
