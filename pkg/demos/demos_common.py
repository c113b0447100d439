"""Shared demo fixture: the order-16 brace built from a bijective 1-cocycle
of the dihedral group of order 16 on Z/8 x Z/2 (see 02_brace_from_cocycle.py
for the construction spelled out)."""

import numpy as np

from braceforge import CocycleDatum, abelian, brace_from_cocycle, dihedral


def order16_brace():
    G = dihedral(16)
    X = abelian([8, 2])

    def x(m, n):
        return 2 * (m % 8) + (n % 2)

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
    return brace_from_cocycle(CocycleDatum(G=G, X=X, action=np.array(rows), pi=pi))
