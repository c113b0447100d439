"""Ways to build braces: products, wreath-type actions, cocycles, ring adjoints,
exhaustive enumeration by order, and exact integer-window checks of the two
classical brace structures on Z.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .brace import SkewBrace, validate_brace
from .errors import (
    BadAction,
    BadPrime,
    CapExceeded,
    NotABraceAutomorphism,
    NotACocycle,
    NotAHomomorphism,
    NotBijective,
)
from .groups import (
    FiniteGroup,
    all_groups,
    automorphisms,
    validate_group,
)
from .substructure import star_span


def direct_product(A: SkewBrace, B: SkewBrace) -> SkewBrace:
    """Componentwise product; pairs (a, b) encoded row-major as |B|*a + b."""
    nb = B.order
    idx = np.arange(A.order * nb)
    av, bv = idx // nb, idx % nb
    add = nb * A.add.table[np.ix_(av, av)] + B.add.table[np.ix_(bv, bv)]
    circ = nb * A.circle.table[np.ix_(av, av)] + B.circle.table[np.ix_(bv, bv)]
    return validate_brace(add, circ)


def semidirect_product(A: SkewBrace, B: SkewBrace, action) -> SkewBrace:
    """B acts on A by brace automorphisms: (a mapped by the action of b).

    Addition is componentwise and (a1, b1) o (a2, b2) = (a1 o b1(a2), b1 o b2).
    Pairs (a, b) are encoded with the acting factor as the major coordinate:
    index = |A|*b + a, so A x {0} occupies the first |A| indices.  The action
    is one permutation of A's elements per element of B and must be a
    homomorphism from (B, o) into the brace automorphisms of A.
    """
    na, nb = A.order, B.order
    act = np.asarray(action, dtype=np.int64)
    if act.shape != (nb, na):
        raise BadAction(f"action must be shape ({nb}, {na}), got {act.shape}")
    rng = np.arange(na)
    for b in range(nb):
        p = act[b]
        if not np.array_equal(np.sort(p), rng):
            raise NotABraceAutomorphism(b, f"action of {b} is not a permutation")
        for t in (A.add.table, A.circle.table):
            if not np.array_equal(p[t], t[np.ix_(p, p)]):
                raise NotABraceAutomorphism(b)
    for b1 in range(nb):
        for b2 in range(nb):
            if not np.array_equal(act[B.circle.table[b1, b2]], act[b1][act[b2]]):
                raise NotAHomomorphism(b1, b2)
    idx = np.arange(na * nb)
    av, bv = idx % na, idx // na
    add = na * B.add.table[np.ix_(bv, bv)] + A.add.table[np.ix_(av, av)]
    twisted = act[np.ix_(bv, av)]  # twisted[i, j] = action of b_i applied to a_j
    circ = na * B.circle.table[np.ix_(bv, bv)] + A.circle.table[av[:, None], twisted]
    return validate_brace(add, circ)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def wreath_sub_brace(T: SkewBrace, B: SkewBrace, cap: int = 512) -> SkewBrace:
    """The sub-brace W x| B of the wreath-type product of T by B.

    T must be the trivial brace of odd prime order p with p not dividing |B|.
    W is the zero-sum part of the functions B -> T under pointwise operations,
    and b acts by (b . f)(x) = f(b' o x).  Socle is expected to be W x {0},
    i.e. the first |W| indices under the semidirect encoding.
    """
    p = T.order
    if not np.array_equal(T.add.table, T.circle.table):
        raise BadPrime("T must be a trivial brace")
    if not _is_prime(p) or p == 2:
        raise BadPrime(f"|T| = {p} must be an odd prime")
    if B.order % p == 0:
        raise BadPrime(f"p = {p} must not divide |B| = {B.order}")
    nb = B.order
    w_tuples = sorted(
        t for t in itertools.product(range(p), repeat=nb) if sum(t) % p == 0
    )
    order = len(w_tuples) * nb
    if order > cap:
        raise CapExceeded(f"wreath sub-brace order {order} exceeds cap {cap}")
    w_index = {t: i for i, t in enumerate(w_tuples)}
    nw = len(w_tuples)
    w_add = [
        [w_index[tuple((x + y) % p for x, y in zip(f, g))] for g in w_tuples]
        for f in w_tuples
    ]
    W = validate_brace(w_add, w_add)
    b_circ = B.circle.table
    action = []
    for b in range(nb):
        binv = B.circle_inv(b)
        row = b_circ[binv]
        action.append(
            [w_index[tuple(f[int(row[x])] for x in range(nb))] for f in w_tuples]
        )
    return semidirect_product(W, B, action)


@dataclass(frozen=True)
class CocycleDatum:
    """A group G acting on a group X with a candidate bijective 1-cocycle pi."""

    G: FiniteGroup
    X: FiniteGroup
    action: np.ndarray  # shape (|G|, |X|): action[g] permutes X
    pi: tuple[int, ...]


def brace_from_cocycle(d: CocycleDatum) -> SkewBrace:
    """Brace on X with x o y = pi(pi^-1(x) pi^-1(y)), checking the cocycle law
    pi(g h) = pi(g) + g.pi(h) and that the action is by automorphisms."""
    G, X = d.G, d.X
    n = G.order
    if X.order != n:
        raise NotBijective(f"|G| = {n} and |X| = {X.order} must agree")
    act = np.asarray(d.action, dtype=np.int64)
    if act.shape != (n, n):
        raise BadAction(f"action must be shape ({n}, {n}), got {act.shape}")
    rng = np.arange(n)
    xt = X.table
    for g in range(n):
        p = act[g]
        if not np.array_equal(np.sort(p), rng) or not np.array_equal(
            p[xt], xt[np.ix_(p, p)]
        ):
            raise BadAction(f"action of {g} is not an automorphism of X")
    gt = G.table
    for g in range(n):
        for h in range(n):
            if not np.array_equal(act[gt[g, h]], act[g][act[h]]):
                raise BadAction(f"action is not a homomorphism at ({g}, {h})")
    pi = np.asarray(d.pi, dtype=np.int64)
    if pi.shape != (n,) or not np.array_equal(np.sort(pi), rng):
        raise NotBijective("pi must be a bijection onto 0..n-1")
    for g in range(n):
        lhs = pi[gt[g]]
        rhs = xt[pi[g], act[g][pi]]
        if not np.array_equal(lhs, rhs):
            h = int(np.argwhere(lhs != rhs)[0][0])
            raise NotACocycle(g, h)
    ipi = np.argsort(pi)
    circ = pi[gt[np.ix_(ipi, ipi)]]
    return validate_brace(X.table, circ)


def brace_from_ring(add_table, mul_table) -> SkewBrace:
    """Adjoint brace a o b = a + b + a.b of a (radical) ring given by tables.

    Validation rejects the input when the adjoint operation is not a group,
    i.e. when the ring is not radical.
    """
    add = validate_group(add_table)
    if not add.is_abelian:
        raise ValueError("ring addition must be abelian")
    n = add.order
    mul = np.asarray(mul_table, dtype=np.int64)
    if mul.shape != (n, n) or mul.min() < 0 or mul.max() >= n:
        raise ValueError("multiplication table must be square over 0..n-1")
    circ = add.table[add.table, mul]  # (a + b) + a.b
    return validate_brace(add.table, circ)


# ------------------------------------------------------------- enumeration


def _compatible_circle_tables(G: FiniteGroup, auts) -> list[tuple[tuple[int, ...], ...]]:
    """All circle tables making (G, +) into a brace, via lambda assignments.

    A brace on (G, +) is a map a -> lambda_a into Aut(G, +) whose graph
    {(a, lambda_a)} is a subgroup of the holomorph with one point per element.
    Depth-first search assigns the smallest unassigned element, closes under
    the holomorph product, and prunes on projection collisions and Lagrange.
    """
    n = G.order
    add_rows = [[int(v) for v in row] for row in G.table]
    aut_list = [tuple(a) for a in auts]
    aut_index = {a: i for i, a in enumerate(aut_list)}
    m = len(aut_list)
    comp = [
        [aut_index[tuple(aut_list[i][aut_list[j][x]] for x in range(n))] for j in range(m)]
        for i in range(m)
    ]
    id_idx = aut_index[tuple(range(n))]
    results: list[tuple[tuple[int, ...], ...]] = []

    def close(assign: dict[int, int], x0: int, u0: int) -> bool:
        stack = [(x0, u0)]
        while stack:
            x, u = stack.pop()
            cur = assign.get(x)
            if cur is not None:
                if cur != u:
                    return False
                continue
            assign[x] = u
            fx = aut_list[u]
            row = add_rows[x]
            for y, v in list(assign.items()):
                stack.append((row[fx[y]], comp[u][v]))
                stack.append((add_rows[y][aut_list[v][x]], comp[v][u]))
        return True

    def dfs(assign: dict[int, int]) -> None:
        if len(assign) == n:
            results.append(
                tuple(
                    tuple(add_rows[a][aut_list[assign[a]][b]] for b in range(n))
                    for a in range(n)
                )
            )
            return
        a0 = min(x for x in range(n) if x not in assign)
        for fi in range(m):
            trial = dict(assign)
            if close(trial, a0, fi) and n % len(trial) == 0:
                dfs(trial)

    dfs({0: id_idx})
    return results


def _canonical_circle_key(circle, aut_arrays) -> bytes:
    """Minimum byte form of the circle table over additive automorphisms."""
    C = np.asarray(circle, dtype=np.int64)
    best = None
    for al in aut_arrays:
        ali = np.argsort(al)
        k = al[C[np.ix_(ali, ali)]].tobytes()
        if best is None or k < best:
            best = k
    return best


HARD_ENUMERATION_CAP = 12


def _additive_representatives(n: int, additive: FiniteGroup | None) -> list[FiniteGroup]:
    if additive is not None:
        if additive.order != n:
            raise ValueError(f"additive filter has order {additive.order}, wanted {n}")
        return [validate_group(additive.table)]
    return all_groups(n)


def enumerate_braces(
    n: int, additive: FiniteGroup | None = None, cap: int = 8
) -> list[SkewBrace]:
    """All braces of order n up to brace isomorphism.

    One representative additive group per isomorphism class (or the given
    additive group), all compatible circle structures by holomorph search,
    then deduplication under additive automorphisms.  Results are ordered by
    additive representative and canonical circle key.
    """
    if n < 1:
        raise ValueError("order must be positive")
    if n > min(cap, HARD_ENUMERATION_CAP):
        raise CapExceeded(
            f"enumeration of order {n} exceeds cap {min(cap, HARD_ENUMERATION_CAP)}"
        )
    out: list[SkewBrace] = []
    for G in _additive_representatives(n, additive):
        auts = automorphisms(G, cap=max(16, n))
        aut_arrays = [np.array(a, dtype=np.int64) for a in auts]
        chosen: dict[bytes, tuple] = {}
        for C in _compatible_circle_tables(G, auts):
            key = _canonical_circle_key(C, aut_arrays)
            if key not in chosen:
                chosen[key] = C
        for key in sorted(chosen):
            out.append(validate_brace(G.table, np.array(chosen[key])))
    return out


def _compatibility_holds(t_add: np.ndarray, neg: np.ndarray, t_circ: np.ndarray) -> bool:
    n = t_add.shape[0]
    for a in range(n):
        lhs = t_circ[a][t_add]
        u = t_add[t_circ[a], neg[a]]
        rhs = t_add[u[:, None], t_circ[a][None, :]]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def enumerate_braces_bruteforce(
    n: int, additive: FiniteGroup | None = None
) -> list[SkewBrace]:
    """Oracle enumeration: every circle table with identity 0 over each
    additive representative, filtered by compatibility, deduplicated.

    Exhaustive over all (n-1)! relabelings of every group of order n, so only
    sensible for small n; used to cross-check enumerate_braces.
    """
    tables: set[tuple[tuple[int, ...], ...]] = set()
    for H in all_groups(n):
        ht = H.table
        for f in itertools.permutations(range(1, n)):
            fm = np.array((0,) + f)
            inv = np.argsort(fm)
            tables.add(tuple(map(tuple, inv[ht[np.ix_(fm, fm)]])))
    out: list[SkewBrace] = []
    for G in _additive_representatives(n, additive):
        auts = automorphisms(G, cap=max(16, n))
        aut_arrays = [np.array(a, dtype=np.int64) for a in auts]
        chosen: dict[bytes, tuple] = {}
        for C in sorted(tables):
            ca = np.array(C, dtype=np.int64)
            if not _compatibility_holds(G.table, G.inv, ca):
                continue
            key = _canonical_circle_key(ca, aut_arrays)
            if key not in chosen:
                chosen[key] = C
        for key in sorted(chosen):
            out.append(validate_brace(G.table, np.array(chosen[key])))
    return out


def is_perfect(A: SkewBrace) -> bool:
    """Whether A * A spans all of A."""
    full = range(A.order)
    return star_span(A, full, full).is_full()


# ---------------------------------------------------------- integer windows


@dataclass(frozen=True)
class WindowReport:
    kind: str
    window: int
    triples_checked: int
    failures: tuple
    ok: bool


def _sign_pow(k):
    """(-1)**k for python ints or numpy arrays, negatives included."""
    return 1 - 2 * (k & 1)


_WINDOW_KINDS = {
    "rump": "rump_cyclic",
    "rump_cyclic": "rump_cyclic",
    "dihedral": "dihedral_Z",
    "dihedral_Z": "dihedral_Z",
}


def z_window_check(kind: str, N: int, max_failures: int = 5) -> WindowReport:
    """Check a brace structure on Z over the window |k|,|l|,|m| <= N, exactly.

    rump_cyclic:  a + b = usual addition,  a o b = (-1)^a b + a
    dihedral_Z:   a + b = a + (-1)^a b,    a o b = usual addition

    Both operations are verified to be groups on the window (associativity,
    identity 0, two-sided inverses) along with brace compatibility.  Integer
    arithmetic is exact: int64 while safe, python ints beyond.
    """
    canon = _WINDOW_KINDS.get(kind)
    if canon is None:
        raise ValueError(f"unknown window kind {kind!r}")
    if N < 1:
        raise ValueError("window must be at least 1")
    if canon == "rump_cyclic":
        add = lambda x, y: x + y
        aneg = lambda x: -x
        circ = lambda x, y: _sign_pow(x) * y + x
        cinv = lambda x: -(_sign_pow(x) * x)
    else:
        add = lambda x, y: x + _sign_pow(x) * y
        aneg = lambda x: -(_sign_pow(x) * x)
        circ = lambda x, y: x + y
        cinv = lambda x: -x

    dtype = object if N > 2**40 else np.int64
    rng = np.arange(-N, N + 1, dtype=dtype)
    L, M = np.meshgrid(rng, rng, indexing="ij")
    failures: list[tuple] = []

    def record(law: str, mask, k, lhs, rhs) -> None:
        if len(failures) >= max_failures:
            return
        for pos in np.argwhere(mask)[: max_failures - len(failures)]:
            i, j = (int(v) for v in pos)
            failures.append(
                (law, (int(k), int(L[i, j]), int(M[i, j])), int(lhs[i, j]), int(rhs[i, j]))
            )

    zero = rng * 0
    for law, lhs, rhs in (
        ("add_identity", add(zero, rng), rng),
        ("add_identity", add(rng, zero), rng),
        ("add_inverse", add(rng, aneg(rng)), zero),
        ("add_inverse", add(aneg(rng), rng), zero),
        ("circ_identity", circ(zero, rng), rng),
        ("circ_identity", circ(rng, zero), rng),
        ("circ_inverse", circ(rng, cinv(rng)), zero),
        ("circ_inverse", circ(cinv(rng), rng), zero),
    ):
        bad = lhs != rhs
        if bad.any() and len(failures) < max_failures:
            i = int(np.argwhere(bad)[0][0])
            failures.append((law, (int(rng[i]),), int(lhs[i]), int(rhs[i])))

    for k in range(-N, N + 1):
        aa = add(add(k, L), M)
        ab = add(k, add(L, M))
        record("add_associative", aa != ab, k, aa, ab)
        ca = circ(circ(k, L), M)
        cb = circ(k, circ(L, M))
        record("circ_associative", ca != cb, k, ca, cb)
        lhs = circ(k, add(L, M))
        rhs = add(add(circ(k, L), aneg(k)), circ(k, M))
        record("compatibility", lhs != rhs, k, lhs, rhs)
        if len(failures) >= max_failures:
            break

    side = 2 * N + 1
    return WindowReport(
        kind=canon,
        window=N,
        triples_checked=side**3,
        failures=tuple(failures),
        ok=not failures,
    )
