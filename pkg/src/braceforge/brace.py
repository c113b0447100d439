"""Skew left braces: one set carrying two group tables tied by compatibility.

A skew left brace is (A, +, o) where both operations are groups on the same
index set, the identities coincide at 0, and
    a o (b + c) = (a o b) - a + (a o c)
holds for all triples.  The derived tables
    lambda_a(b) = -a + a o b        (an automorphism of (A, +))
    a * b       = lambda_a(b) - b
are precomputed on validation and drive everything downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BraceForgeError,
    CapExceeded,
    CompatibilityFailed,
    IdentityMismatch,
    NoIdentity,
    NotClosed,
)
from .groups import (
    FiniteGroup,
    _frozen,
    _identity_of,
    _iso_search,
    nilpotency_analysis,
    validate_group,
)


class SkewBrace:
    """Validated skew left brace with cached lambda and star tables."""

    def __init__(self, add: FiniteGroup, circle: FiniteGroup,
                 lam: np.ndarray, star: np.ndarray):
        self.add = add
        self.circle = circle
        self.lam = _frozen(lam)
        self.star = _frozen(star)
        self.order = add.order

    # element-level helpers; bulk work should index the tables directly
    def add_of(self, a: int, b: int) -> int:
        return int(self.add.table[a, b])

    def circle_of(self, a: int, b: int) -> int:
        return int(self.circle.table[a, b])

    def neg(self, a: int) -> int:
        return int(self.add.inv[a])

    def circle_inv(self, a: int) -> int:
        return int(self.circle.inv[a])

    def key(self) -> bytes:
        return self.add.table.tobytes() + self.circle.table.tobytes()

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewBrace) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"SkewBrace(order={self.order})"


def _validated_side(table, side: str) -> FiniteGroup:
    try:
        return validate_group(table)
    except BraceForgeError as err:
        err.side = side
        raise


def validate_brace(add_table, circle_table) -> SkewBrace:
    """Check both groups (identities already at 0), then compatibility on all triples."""
    ta = np.asarray(add_table, dtype=np.int64)
    tc = np.asarray(circle_table, dtype=np.int64)
    if ta.shape != tc.shape:
        raise NotClosed(f"tables disagree on size: {ta.shape} vs {tc.shape}")
    for t, side in ((ta, "add"), (tc, "circle")):
        if t.ndim == 2 and t.shape[0] == t.shape[1] and t.shape[0] > 0 \
                and 0 <= t.min() and t.max() < t.shape[0]:
            e = _identity_of(t)
            if e is None:
                err = NoIdentity(f"{side} table has no identity")
                err.side = side
                raise err
            if e != 0:
                raise IdentityMismatch(
                    f"{side} table has its identity at {e}, expected 0"
                )
    add = _validated_side(ta, "add")
    circle = _validated_side(tc, "circle")
    n = add.order
    t_add, t_circ, neg = add.table, circle.table, add.inv
    for a in range(n):
        lhs = t_circ[a][t_add]
        u = t_add[t_circ[a], neg[a]]
        rhs = t_add[u[:, None], t_circ[a][None, :]]
        if not np.array_equal(lhs, rhs):
            b, c = map(int, np.argwhere(lhs != rhs)[0])
            raise CompatibilityFailed(a, b, c)
    lam = t_add[neg[:, None], t_circ]
    star = t_add[lam, neg[None, :]]
    rng = np.arange(n)
    # implied by compatibility; kept as cheap internal guards
    assert np.array_equal(t_circ, t_add[rng[:, None], lam]), "a o b != a + lambda_a(b)"
    assert bool(np.all(np.sort(lam, axis=1) == rng)), "lambda rows must be permutations"
    return SkewBrace(add, circle, lam, star)


def lambda_of(A: SkewBrace, a: int) -> tuple[int, ...]:
    """The permutation lambda_a as a tuple (b -> -a + a o b)."""
    return tuple(int(v) for v in A.lam[a])


def star(A: SkewBrace, a: int, b: int) -> int:
    """a * b = lambda_a(b) - b."""
    return int(A.star[a, b])


def star_identities_check(A: SkewBrace) -> tuple[bool, tuple[int, int, int] | None]:
    """Verify the two star expansion identities on all triples.

        a * (b + c)  =  a*b + b + a*c - b
        (a o b) * c  =  (a * (b * c)) + b*c + a*c

    Returns (ok, witness) with the first failing triple if any.
    """
    t_add, t_circ, st = A.add.table, A.circle.table, A.star
    neg = A.add.inv
    n = A.order
    for a in range(n):
        lhs1 = st[a][t_add]
        t1 = t_add[st[a], np.arange(n)]
        t2 = t_add[t1[:, None], st[a][None, :]]
        rhs1 = t_add[t2, neg[:, None]]
        if not np.array_equal(lhs1, rhs1):
            b, c = map(int, np.argwhere(lhs1 != rhs1)[0])
            return False, (a, b, c)
        lhs2 = st[t_circ[a], :]
        u = st[a][st]
        v = t_add[u, st]
        rhs2 = t_add[v, st[a][None, :]]
        if not np.array_equal(lhs2, rhs2):
            b, c = map(int, np.argwhere(lhs2 != rhs2)[0])
            return False, (a, b, c)
    return True, None


@dataclass(frozen=True)
class BraceClass:
    trivial: bool
    abelian_type: bool
    nilpotent_type: bool
    two_sided: bool


def classify(A: SkewBrace) -> BraceClass:
    """Trivial / abelian-type / nilpotent-type flags plus a two-sided check.

    Two-sided means (a + b) * c = a*c + c + b*c - c on all triples, the other
    distributive law.
    """
    t_add, st, neg = A.add.table, A.star, A.add.inv
    n = A.order
    two_sided = True
    for a in range(n):
        lhs = st[t_add[a], :]
        t1 = t_add[st[a], np.arange(n)]
        t2 = t_add[t1[None, :], st]
        rhs = t_add[t2, neg[None, :]]
        if not np.array_equal(lhs, rhs):
            two_sided = False
            break
    return BraceClass(
        trivial=bool(np.array_equal(A.add.table, A.circle.table)),
        abelian_type=A.add.is_abelian,
        nilpotent_type=nilpotency_analysis(A.add).nilpotent,
        two_sided=two_sided,
    )


def brace_from_group(G: FiniteGroup) -> SkewBrace:
    """The trivial brace: both operations equal to the group's."""
    return validate_brace(G.table, G.table)


def brace_from_group_opposite_addition(G: FiniteGroup) -> SkewBrace:
    """Addition a + b := b a opposite to the group operation a o b := a b.

    For abelian G this collapses to the trivial brace.  In general
    a * b = b^-1 a b a^-1, so the star span is the commutator subgroup.
    """
    return validate_brace(G.table.T, G.table)


def _lambda_image_size(A: SkewBrace) -> int:
    return len({A.lam[a].tobytes() for a in range(A.order)})


def are_isomorphic_braces(A: SkewBrace, B: SkewBrace, cap: int = 32) -> bool:
    """Search for a bijection preserving both tables, pruned by invariants."""
    if max(A.order, B.order) > cap:
        raise CapExceeded(f"brace isomorphism search capped at order {cap}")
    if A.order != B.order:
        return False
    for f in (
        lambda X: sorted(X.add.element_orders),
        lambda X: sorted(X.circle.element_orders),
        _lambda_image_size,
        lambda X: int(np.sum(X.star == 0)),
    ):
        if f(A) != f(B):
            return False
    return bool(
        _iso_search([A.add.table, A.circle.table], [B.add.table, B.circle.table],
                    want_all=False)
    )
