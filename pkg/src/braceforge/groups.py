"""Finite groups as 0-based multiplication tables, plus subgroup/quotient machinery.

Conventions used across the package:
  * elements are the indices 0..n-1 and the identity is always index 0
    (validate_group relabels when a table carries its identity elsewhere);
  * tables are numpy int arrays frozen after construction;
  * subsets travel as ElementSet values with strictly ascending members.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, reduce

import numpy as np

from .errors import (
    CapExceeded,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotASubgroup,
    NotClosed,
    NotNormal,
)


@dataclass(frozen=True)
class ElementSet:
    """An immutable subset of {0..context_order-1} with ascending members."""

    members: tuple[int, ...]
    context_order: int

    @classmethod
    def of(cls, items, order: int) -> "ElementSet":
        ms = tuple(sorted({int(x) for x in items}))
        if ms and not (0 <= ms[0] and ms[-1] < order):
            raise ValueError(f"members {ms} out of range for order {order}")
        return cls(ms, int(order))

    def __contains__(self, x) -> bool:
        return int(x) in self.as_set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def as_set(self) -> frozenset:
        return frozenset(self.members)

    def is_zero(self) -> bool:
        return self.members == (0,)

    def is_full(self) -> bool:
        return len(self.members) == self.context_order


def _frozen(a: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(a, dtype=np.int64)
    if out is a:
        out = a.copy()
    out.flags.writeable = False
    return out


class FiniteGroup:
    """A finite group on {0..n-1}, identity at 0, given by its full table."""

    def __init__(self, table: np.ndarray, inv: np.ndarray):
        self.table = _frozen(table)
        self.inv = _frozen(inv)
        self.order = int(self.table.shape[0])
        self.identity = 0

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def elements(self) -> range:
        return range(self.order)

    def conjugate(self, g: int, x: int) -> int:
        return int(self.table[self.table[g, x], self.inv[g]])

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        t = self.table
        for x in range(self.order):
            y, k = x, 1
            while y != 0:
                y = int(t[y, x])
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def center(self) -> ElementSet:
        t = self.table
        zs = [z for z in range(self.order) if np.array_equal(t[z], t[:, z])]
        return ElementSet.of(zs, self.order)

    def key(self) -> bytes:
        return self.table.tobytes()

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        kind = "abelian" if self.is_abelian else "nonabelian"
        return f"FiniteGroup(order={self.order}, {kind})"


def _identity_of(t: np.ndarray) -> int | None:
    n = t.shape[0]
    rng = np.arange(n)
    for e in range(n):
        if np.array_equal(t[e], rng) and np.array_equal(t[:, e], rng):
            return e
    return None


def validate_group(table) -> FiniteGroup:
    """Validate a multiplication table; relabel so the identity sits at index 0.

    Checks run in order: closure, identity, right inverses, associativity,
    each failure naming a witness.
    """
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NotClosed(f"table must be a nonempty square matrix, got shape {t.shape}")
    n = int(t.shape[0])
    if t.min() < 0 or t.max() >= n:
        a, b = map(int, np.argwhere((t < 0) | (t >= n))[0])
        raise NotClosed(f"entry ({a},{b}) = {int(t[a, b])} falls outside 0..{n - 1}")
    e = _identity_of(t)
    if e is None:
        raise NoIdentity("no two-sided identity element")
    if e != 0:
        sigma = np.arange(n)
        sigma[0], sigma[e] = e, 0  # involution swapping 0 and e
        t = sigma[t[sigma][:, sigma]]
    inv = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        hits = np.flatnonzero(t[x] == 0)
        if hits.size == 0:
            raise NoInverse(x)
        inv[x] = hits[0]
    for a in range(n):
        lhs = t[t[a], :]
        rhs = t[a][t]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise NotAssociative(a, b, c)
    return FiniteGroup(t, inv)


def element_order(G: FiniteGroup, x: int) -> int:
    return G.element_orders[x]


def subgroup_closure(G: FiniteGroup, gens) -> ElementSet:
    """Smallest subgroup containing gens, grown by breadth-first products.

    Inverses come for free in a finite group, which the tests re-assert.
    """
    t = G.table
    members = {0}
    queue = [int(g) for g in set(int(g) for g in gens) if int(g) not in members]
    members.update(queue)
    while queue:
        x = queue.pop()
        row = t[x]
        col = t[:, x]
        for y in tuple(members):
            for z in (int(row[y]), int(col[y])):
                if z not in members:
                    members.add(z)
                    queue.append(z)
    return ElementSet.of(members, G.order)


def _check_subgroup(G: FiniteGroup, members) -> tuple[int, ...]:
    ms = tuple(sorted({int(x) for x in members}))
    if not ms or ms[0] != 0:
        raise NotASubgroup("subset is empty or misses the identity 0")
    s = set(ms)
    t = G.table
    for x in ms:
        for y in ms:
            if int(t[x, y]) not in s:
                raise NotASubgroup(f"not closed: {x} * {y} = {int(t[x, y])} escapes")
    return ms


def is_normal_subgroup(G: FiniteGroup, members) -> bool:
    """Whether the subgroup is closed under conjugation; raises NotASubgroup."""
    ms = _check_subgroup(G, members)
    s = set(ms)
    for g in range(G.order):
        for x in ms:
            if G.conjugate(g, x) not in s:
                return False
    return True


def quotient_group(G: FiniteGroup, members) -> tuple[FiniteGroup, tuple[int, ...]]:
    """Quotient by a normal subgroup.

    Cosets are represented by their minimum element and renumbered so the
    coset of 0 is 0.  Returns (quotient, projection) with projection[x] the
    coset index of x.
    """
    ms = _check_subgroup(G, members)
    s = set(ms)
    t = G.table
    for g in range(G.order):
        for x in ms:
            c = G.conjugate(g, x)
            if c not in s:
                raise NotNormal(g, x, c)
    rep = [-1] * G.order
    for x in range(G.order):
        if rep[x] == -1:
            coset = sorted(int(t[x, m]) for m in ms)
            for y in coset:
                rep[y] = coset[0]
    reps = sorted(set(rep))
    index = {r: i for i, r in enumerate(reps)}
    proj = tuple(index[rep[x]] for x in range(G.order))
    q = [[index[rep[int(t[a, b])]] for b in reps] for a in reps]
    return validate_group(q), proj


def sub_group(G: FiniteGroup, members) -> tuple[FiniteGroup, tuple[int, ...]]:
    """The subgroup on a closed subset, reindexed to 0..k-1 (ascending members)."""
    ms = _check_subgroup(G, members)
    pos = {m: i for i, m in enumerate(ms)}
    t = G.table
    sub = [[pos[int(t[a, b])] for b in ms] for a in ms]
    return validate_group(sub), ms


@dataclass(frozen=True)
class GroupNilpotency:
    nilpotent: bool
    nilpotency_class: int | None
    lower_central: tuple[ElementSet, ...]
    center: ElementSet
    sylow: dict[int, ElementSet]


def prime_factors(n: int) -> list[int]:
    out, d, m = [], 2, n
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def nilpotency_analysis(G: FiniteGroup) -> GroupNilpotency:
    """Lower central series to stabilization; Sylow pieces when nilpotent."""
    t = G.table
    full = ElementSet.of(range(G.order), G.order)
    series = [full]
    while True:
        cur = series[-1]
        comms = set()
        for g in range(G.order):
            for x in cur:
                gx = int(t[g, x])
                comms.add(int(t[gx, t[G.inv[g], G.inv[x]]]))
        nxt = subgroup_closure(G, comms)
        if nxt.members == cur.members:
            break
        series.append(nxt)
        if nxt.is_zero():
            break
    nilpotent = series[-1].is_zero()
    sylow: dict[int, ElementSet] = {}
    if nilpotent:
        orders = G.element_orders
        for p in prime_factors(G.order) or []:
            elems = [x for x in range(G.order) if _is_power_of(orders[x], p)]
            sylow[p] = ElementSet.of(elems, G.order)
    return GroupNilpotency(
        nilpotent=nilpotent,
        nilpotency_class=len(series) - 1 if nilpotent else None,
        lower_central=tuple(series),
        center=G.center,
        sylow=sylow,
    )


def _is_power_of(m: int, p: int) -> bool:
    while m % p == 0:
        m //= p
    return m == 1


# ------------------------------------------------------- isomorphism search


def _orders_of_table(t: np.ndarray) -> tuple[int, ...]:
    n = t.shape[0]
    out = []
    for x in range(n):
        y, k = x, 1
        while y != 0:
            y = int(t[y, x])
            k += 1
        out.append(k)
    return tuple(out)


def _greedy_generators(t: np.ndarray) -> list[int]:
    n = t.shape[0]
    gens: list[int] = []
    cover = {0}
    while len(cover) < n:
        g = min(set(range(n)) - cover)
        gens.append(g)
        queue = [g]
        cover.add(g)
        while queue:
            x = queue.pop()
            for y in tuple(cover):
                for z in (int(t[x, y]), int(t[y, x])):
                    if z not in cover:
                        cover.add(z)
                        queue.append(z)
    return gens


def _iso_search(src_tables, dst_tables, want_all: bool) -> list[tuple[int, ...]]:
    """Bijections f with f(S[x,y]) = D[f(x), f(y)] for every paired table.

    Propagation closes the partial map under products the moment a new point
    is assigned, so conflicts prune early.  src_tables[0] drives generator
    selection; all tables constrain.
    """
    n = int(src_tables[0].shape[0])
    src = [np.asarray(t) for t in src_tables]
    dst = [np.asarray(t) for t in dst_tables]
    src_fp = list(zip(*[_orders_of_table(t) for t in src]))
    dst_fp = list(zip(*[_orders_of_table(t) for t in dst]))
    if sorted(src_fp) != sorted(dst_fp):
        return []
    gens = _greedy_generators(src[0])
    f = [-1] * n
    r = [-1] * n
    f[0] = 0
    r[0] = 0
    found: list[tuple[int, ...]] = []

    def extend(x0: int, y0: int):
        added: list[int] = []
        stack = [(x0, y0)]
        while stack:
            x, y = stack.pop()
            if f[x] != -1:
                if f[x] != y:
                    break
                continue
            if r[y] != -1 or src_fp[x] != dst_fp[y]:
                break
            f[x] = y
            r[y] = x
            added.append(x)
            for S, D in zip(src, dst):
                for a in range(n):
                    if f[a] != -1:
                        stack.append((int(S[x, a]), int(D[y, f[a]])))
                        stack.append((int(S[a, x]), int(D[f[a], y])))
        else:
            return added
        for a in added:
            r[f[a]] = -1
            f[a] = -1
        return None

    def dfs(i: int) -> bool:
        if i == len(gens):
            assert all(v != -1 for v in f), "generators failed to cover the group"
            found.append(tuple(f))
            return not want_all
        x = gens[i]
        if f[x] != -1:
            return dfs(i + 1)
        for y in range(n):
            if r[y] == -1 and src_fp[x] == dst_fp[y]:
                added = extend(x, y)
                if added is not None:
                    stop = dfs(i + 1)
                    for a in added:
                        r[f[a]] = -1
                        f[a] = -1
                    if stop:
                        return True
        return False

    dfs(0)
    return found


def automorphisms(G: FiniteGroup, cap: int = 16) -> list[tuple[int, ...]]:
    """All automorphisms as permutation tuples, found by generator-image DFS."""
    if G.order > cap:
        raise CapExceeded(f"automorphism search capped at order {cap}, got {G.order}")
    return sorted(_iso_search([G.table], [G.table], want_all=True))


def are_isomorphic_groups(G: FiniteGroup, H: FiniteGroup, cap: int = 32) -> bool:
    if max(G.order, H.order) > cap:
        raise CapExceeded(f"isomorphism search capped at order {cap}")
    if G.order != H.order or G.is_abelian != H.is_abelian:
        return False
    if sorted(G.element_orders) != sorted(H.element_orders):
        return False
    return bool(_iso_search([G.table], [H.table], want_all=False))


# ---------------------------------------------------------------- factories


def cyclic(n: int) -> FiniteGroup:
    """Z/n with addition mod n."""
    rng = np.arange(n)
    return validate_group((rng[:, None] + rng[None, :]) % n)


def direct_product_groups(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs encoded row-major: index = |H|*g + h."""
    n2 = H.order
    idx = np.arange(G.order * n2)
    ga, ha = idx // n2, idx % n2
    table = n2 * G.table[np.ix_(ga, ga)] + H.table[np.ix_(ha, ha)]
    return validate_group(table)


def abelian(orders) -> FiniteGroup:
    """Direct product of cyclic groups, row-major over the given factor list."""
    groups = [cyclic(int(k)) for k in orders]
    return reduce(direct_product_groups, groups)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given even order; r^i s^j encoded as i + (order/2)*j."""
    if order % 2 != 0 or order < 2:
        raise ValueError("dihedral groups here have even order >= 2")
    m = order // 2
    t = np.zeros((order, order), dtype=np.int64)
    for i1, j1, i2, j2 in itertools.product(range(m), range(2), range(m), range(2)):
        i = (i1 + i2) % m if j1 == 0 else (i1 - i2) % m
        t[i1 + m * j1, i2 + m * j2] = i + m * ((j1 + j2) % 2)
    return validate_group(t)


def dicyclic(order: int) -> FiniteGroup:
    """Dicyclic group of order 4m (m >= 1); a^i b^j encoded as i + 2m*j.

    dicyclic(8) is the quaternion group.
    """
    if order % 4 != 0 or order < 4:
        raise ValueError("dicyclic groups have order 4m")
    m = order // 4
    n2 = 2 * m
    t = np.zeros((order, order), dtype=np.int64)
    for i1, j1, i2, j2 in itertools.product(range(n2), range(2), range(n2), range(2)):
        if j1 == 0:
            i, j = (i1 + i2) % n2, j2
        elif j2 == 0:
            i, j = (i1 - i2) % n2, 1
        else:
            i, j = (i1 - i2 + m) % n2, 0
        t[i1 + n2 * j1, i2 + n2 * j2] = i + n2 * j
    return validate_group(t)


def _perm_group(perms: list[tuple[int, ...]]) -> FiniteGroup:
    perms = sorted(perms)
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    t = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            t[i, j] = index[tuple(p[q[k]] for k in range(len(p)))]
    return validate_group(t)


def symmetric(n: int) -> FiniteGroup:
    """S_n on lexicographically sorted permutation tuples; identity is first."""
    return _perm_group([tuple(p) for p in itertools.permutations(range(n))])


def _parity(p) -> int:
    seen, par = set(), 0
    for i in range(len(p)):
        if i in seen:
            continue
        j, ln = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            ln += 1
        par ^= (ln - 1) & 1
    return par


def alternating(n: int) -> FiniteGroup:
    """A_n on lexicographically sorted even permutations; identity is first."""
    return _perm_group(
        [tuple(p) for p in itertools.permutations(range(n)) if _parity(p) == 0]
    )


def all_groups(n: int) -> list[FiniteGroup]:
    """One representative per isomorphism class of groups of order n (n <= 12)."""
    if not 1 <= n <= 12:
        raise CapExceeded(f"group classification table stops at order 12, got {n}")
    table: dict[int, list] = {
        1: [lambda: cyclic(1)],
        2: [lambda: cyclic(2)],
        3: [lambda: cyclic(3)],
        4: [lambda: cyclic(4), lambda: abelian([2, 2])],
        5: [lambda: cyclic(5)],
        6: [lambda: cyclic(6), lambda: symmetric(3)],
        7: [lambda: cyclic(7)],
        8: [
            lambda: cyclic(8),
            lambda: abelian([4, 2]),
            lambda: abelian([2, 2, 2]),
            lambda: dihedral(8),
            lambda: dicyclic(8),
        ],
        9: [lambda: cyclic(9), lambda: abelian([3, 3])],
        10: [lambda: cyclic(10), lambda: dihedral(10)],
        11: [lambda: cyclic(11)],
        12: [
            lambda: cyclic(12),
            lambda: abelian([6, 2]),
            lambda: alternating(4),
            lambda: dihedral(12),
            lambda: dicyclic(12),
        ],
    }
    return [make() for make in table[n]]
