"""Set-theoretic Yang-Baxter solutions: derivation from braces, validation,
orbit structure, and restriction to invariant subsets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .brace import SkewBrace
from .errors import NotCommuting, NotInvariant, ValidationFailed


@dataclass(frozen=True)
class Solution:
    """A candidate solution r(x, y) = (sigma_x(y), tau_y(x)) on {0..n-1}.

    sigma[x] is the row of sigma_x and tau[y] the row of tau_y.  Only shapes
    and value ranges are checked here; validate_solution decides whether the
    braid relation actually holds.
    """

    sigma: np.ndarray
    tau: np.ndarray

    def __post_init__(self):
        s = np.ascontiguousarray(np.asarray(self.sigma, dtype=np.int64))
        t = np.ascontiguousarray(np.asarray(self.tau, dtype=np.int64))
        if s.ndim != 2 or s.shape[0] != s.shape[1] or s.shape != t.shape:
            raise ValidationFailed("sigma and tau must be equal square tables")
        n = s.shape[0]
        for name, m in (("sigma", s), ("tau", t)):
            if n and (m.min() < 0 or m.max() >= n):
                raise ValidationFailed(f"{name} entries must lie in 0..{n - 1}")
        s.flags.writeable = False
        t.flags.writeable = False
        object.__setattr__(self, "sigma", s)
        object.__setattr__(self, "tau", t)

    @property
    def size(self) -> int:
        return self.sigma.shape[0]

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return int(self.sigma[x, y]), int(self.tau[y, x])


@dataclass(frozen=True)
class SolutionReport:
    ybe: bool
    nondegenerate: bool
    involutive: bool
    braid_witness: tuple[int, int, int] | None
    degenerate_witness: tuple[str, int] | None

    @property
    def valid(self) -> bool:
        return self.ybe and self.nondegenerate


def solution_from_brace(A: SkewBrace) -> Solution:
    """The solution attached to a brace: sigma_x = lambda_x and
    tau_y(x) = (lambda_x(y))' o x o y."""
    lam = A.lam
    cinv = A.circle.inv
    circ = A.circle.table
    X = np.arange(A.order)[:, None]
    Y = np.arange(A.order)[None, :]
    t = circ[circ[cinv[lam], X], Y]  # t[x, y] = tau_y(x)
    return Solution(sigma=lam, tau=t.T)


def _apply_r(sigma, tau, a, b):
    return sigma[a, b], tau[b, a]


def validate_solution(s: Solution) -> SolutionReport:
    """Check the braid relation r12 r23 r12 = r23 r12 r23 on all triples,
    plus nondegeneracy (all sigma_x and tau_y bijective) and involutivity."""
    n = s.size
    sigma, tau = s.sigma, s.tau
    rng = np.arange(n)
    degenerate: tuple[str, int] | None = None
    for name, m in (("sigma", sigma), ("tau", tau)):
        for x in range(n):
            if not np.array_equal(np.sort(m[x]), rng):
                degenerate = (name, x)
                break
        if degenerate:
            break

    braid: tuple[int, int, int] | None = None
    Y = np.arange(n)[:, None]
    Z = np.arange(n)[None, :]
    for x in range(n):
        # left side: r12 then r23 then r12 applied to (x, y, z)
        a1, b1 = sigma[x, Y], tau[Y, x]
        c1, d1 = _apply_r(sigma, tau, b1, Z)
        e1, f1 = _apply_r(sigma, tau, a1, c1)
        # right side: r23 then r12 then r23
        a2, b2 = sigma[Y, Z], tau[Z, Y]
        c2, d2 = _apply_r(sigma, tau, np.full_like(a2, x), a2)
        e2, f2 = _apply_r(sigma, tau, d2, b2)
        bad = (e1 != c2) | (f1 != e2) | (d1 != f2)
        if bad.any():
            i, j = (int(v) for v in np.argwhere(bad)[0])
            braid = (x, i, j)
            break

    invol = True
    for x in range(n):
        u, v = sigma[x], tau[rng, x]  # r(x, y) = (u[y], v[y])
        if not (np.array_equal(sigma[u, v], np.full(n, x)) and np.array_equal(tau[v, u], rng)):
            invol = False
            break

    return SolutionReport(
        ybe=braid is None,
        nondegenerate=degenerate is None,
        involutive=invol and braid is None,
        braid_witness=braid,
        degenerate_witness=degenerate,
    )


def permutation_solution(f, g) -> Solution:
    """The solution r(x, y) = (f(y), g(x)) of two commuting permutations."""
    fa = np.asarray(f, dtype=np.int64)
    ga = np.asarray(g, dtype=np.int64)
    if not np.array_equal(fa[ga], ga[fa]):
        raise NotCommuting("f and g must commute")
    n = fa.shape[0]
    return Solution(sigma=np.tile(fa, (n, 1)), tau=np.tile(ga, (n, 1)))


def orbits(s: Solution) -> list[tuple[int, ...]]:
    """Orbits of {0..n-1} under all sigma_x and tau_y, ordered by least member."""
    n = s.size
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for x in range(n):
        for z in range(n):
            union(z, int(s.sigma[x, z]))
            union(z, int(s.tau[x, z]))
    buckets: dict[int, list[int]] = {}
    for z in range(n):
        buckets.setdefault(find(z), []).append(z)
    return [tuple(buckets[r]) for r in sorted(buckets)]


def is_indecomposable(s: Solution) -> bool:
    return len(orbits(s)) == 1


def restrict_solution(s: Solution, subset) -> Solution:
    """Restriction of r to an invariant subset Y, reindexed to 0..|Y|-1.

    Y is invariant when sigma_y(z) and tau_y(z) stay in Y for all y, z in Y.
    """
    ms = sorted(set(int(v) for v in subset))
    where = {v: i for i, v in enumerate(ms)}
    for y in ms:
        for z in ms:
            for m in (s.sigma, s.tau):
                out = int(m[y, z])
                if out not in where:
                    raise NotInvariant(y, z, out)
    k = len(ms)
    sig = np.array([[where[int(s.sigma[y, z])] for z in ms] for y in ms])
    tau = np.array([[where[int(s.tau[y, z])] for z in ms] for y in ms])
    return Solution(sigma=sig.reshape(k, k), tau=tau.reshape(k, k))


def decomposable_by_bipartition(s: Solution) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Brute-force search for a partition into two invariant halves.

    Independent of orbits(); exponential in n, meant as a cross-check for
    small solutions.  Returns a witnessing pair of subsets or None.
    """
    n = s.size
    if n < 2:
        return None
    full = frozenset(range(n))

    def invariant(ys: frozenset) -> bool:
        for y in ys:
            for z in ys:
                if int(s.sigma[y, z]) not in ys or int(s.tau[y, z]) not in ys:
                    return False
        return True

    # fix 0 in the first part to halve the search
    rest = sorted(full - {0})
    for bits in range(2 ** len(rest) - 1, -1, -1):
        part = frozenset({0} | {rest[i] for i in range(len(rest)) if bits >> i & 1})
        if part == full:
            continue
        other = full - part
        if invariant(part) and invariant(other):
            return tuple(sorted(part)), tuple(sorted(other))
    return None
