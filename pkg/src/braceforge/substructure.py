"""Left ideals, ideals, socle, fix, quotient braces and generated sub-braces.

Decision procedures follow the classical characterizations:
  * an additive subgroup I is a left ideal iff lambda_a(I) <= I for all a
    (equivalently A * I <= I);
  * a left ideal is an ideal iff it is normal in (A, +) and I * A <= I;
    multiplicative normality a o I o a' <= I is then re-checked directly
    as a double-entry assertion rather than trusted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .brace import SkewBrace, validate_brace
from .errors import BraceForgeError, NotAnIdeal, NotASubgroup, ValidationFailed
from .groups import ElementSet, quotient_group, subgroup_closure


@dataclass(frozen=True)
class SubstructureVerdict:
    members: ElementSet
    add_subgroup: bool
    left_ideal: bool
    ideal: bool | None
    reason: str | None = None
    failing_witness: tuple[int, int, int] | None = None

    def __bool__(self) -> bool:
        raise TypeError("ambiguous verdict: test .left_ideal or .ideal explicitly")


def _as_members(A: SkewBrace, subset) -> tuple[int, ...]:
    if isinstance(subset, ElementSet):
        return subset.members
    return tuple(sorted({int(x) for x in subset}))


def star_span(A: SkewBrace, X, Y) -> ElementSet:
    """The additive subgroup generated by {x * y : x in X, y in Y}."""
    xs, ys = _as_members(A, X), _as_members(A, Y)
    gens = {int(v) for v in A.star[np.ix_(xs, ys)].ravel()} if xs and ys else set()
    return subgroup_closure(A.add, gens)


def _add_subgroup_check(A: SkewBrace, ms: tuple[int, ...]):
    """Returns a failing (x, y, escape) triple or None."""
    if not ms or ms[0] != 0:
        return (-1, -1, -1)
    s = set(ms)
    t = A.add.table
    for x in ms:
        for y in ms:
            z = int(t[x, y])
            if z not in s:
                return (x, y, z)
    return None


def is_left_ideal(A: SkewBrace, subset) -> SubstructureVerdict:
    """Additive subgroup stable under every lambda_a."""
    ms = _as_members(A, subset)
    es = ElementSet.of(ms, A.order) if ms else ElementSet((), A.order)
    bad = _add_subgroup_check(A, ms)
    if bad is not None:
        return SubstructureVerdict(es, False, False, None,
                                   "not an additive subgroup", bad)
    member = np.zeros(A.order, dtype=bool)
    member[list(ms)] = True
    images = A.lam[:, list(ms)]
    ok = member[images]
    if not ok.all():
        a, i = map(int, np.argwhere(~ok)[0])
        witness = (a, ms[i], int(images[a, i]))
        return SubstructureVerdict(es, True, False, None,
                                   "lambda image escapes", witness)
    return SubstructureVerdict(es, True, True, None)


def is_ideal(A: SkewBrace, subset) -> SubstructureVerdict:
    """Left ideal, normal in (A, +), with I * A <= I; conjugation re-checked."""
    base = is_left_ideal(A, subset)
    if not base.left_ideal:
        return SubstructureVerdict(base.members, base.add_subgroup, base.left_ideal,
                                   False, base.reason, base.failing_witness)
    ms = base.members.members
    s = base.members.as_set
    t_add, neg = A.add.table, A.add.inv
    for g in range(A.order):
        for x in ms:
            c = int(t_add[t_add[g, x], neg[g]])
            if c not in s:
                return SubstructureVerdict(base.members, True, True, False,
                                           "additive conjugate escapes", (g, x, c))
    images = A.star[list(ms), :]
    member = np.zeros(A.order, dtype=bool)
    member[list(ms)] = True
    ok = member[images]
    if not ok.all():
        i, b = map(int, np.argwhere(~ok)[0])
        return SubstructureVerdict(base.members, True, True, False,
                                   "star image escapes", (ms[i], b, int(images[i, b])))
    # double-entry cross-check: the characterization above must agree with
    # direct multiplicative normality
    t_circ, cinv = A.circle.table, A.circle.inv
    for g in range(A.order):
        for x in ms:
            c = int(t_circ[t_circ[g, x], cinv[g]])
            assert c in s, f"ideal characterization bug at ({g}, {x}) -> {c}"
    return SubstructureVerdict(base.members, True, True, True)


def ker_lambda(A: SkewBrace) -> ElementSet:
    """Elements whose lambda permutation is the identity."""
    rng = np.arange(A.order)
    hits = np.flatnonzero(np.all(A.lam == rng[None, :], axis=1))
    return ElementSet.of(hits, A.order)


def socle(A: SkewBrace) -> ElementSet:
    """ker(lambda) intersected with the additive center; always an ideal."""
    return ElementSet.of(
        ker_lambda(A).as_set & A.add.center.as_set, A.order
    )


def fix(A: SkewBrace) -> ElementSet:
    """Elements fixed by every lambda_a; a left ideal, not always an ideal."""
    rng = np.arange(A.order)
    hits = np.flatnonzero(np.all(A.lam == rng[None, :], axis=0))
    return ElementSet.of(hits, A.order)


def quotient_brace(A: SkewBrace, subset) -> tuple[SkewBrace, tuple[int, ...]]:
    """A/I for an ideal I, on minimum coset representatives renumbered from 0."""
    verdict = is_ideal(A, subset)
    if not verdict.ideal:
        raise NotAnIdeal(
            f"{verdict.reason} at witness {verdict.failing_witness}"
        )
    ms = verdict.members.members
    q_add, proj = quotient_group(A.add, ms)
    t_add, t_circ = A.add.table, A.circle.table
    # additive and circle cosets of an ideal coincide; verify rather than assume
    for a in range(A.order):
        if {int(v) for v in t_add[a, list(ms)]} != {int(v) for v in t_circ[a, list(ms)]}:
            raise ValidationFailed(f"cosets of + and o disagree at element {a}")
    reps = [-1] * q_add.order
    for x in range(A.order):
        if reps[proj[x]] == -1:
            reps[proj[x]] = x
    q_circ = [[proj[int(t_circ[a, b])] for b in reps] for a in reps]
    try:
        Q = validate_brace(q_add.table, q_circ)
    except BraceForgeError as err:
        raise ValidationFailed(f"quotient failed brace validation: {err}") from err
    return Q, proj


def generated_subbrace(A: SkewBrace, subset) -> ElementSet:
    """Closure of the subset under both operations (inverses come free)."""
    t_add, t_circ = A.add.table, A.circle.table
    members = {0}
    queue = [int(x) for x in set(_as_members(A, subset)) if int(x) not in members]
    members.update(queue)
    while queue:
        x = queue.pop()
        for t in (t_add, t_circ):
            row, col = t[x], t[:, x]
            for y in tuple(members):
                for z in (int(row[y]), int(col[y])):
                    if z not in members:
                        members.add(z)
                        queue.append(z)
    return ElementSet.of(members, A.order)


def sub_brace(A: SkewBrace, subset) -> tuple[SkewBrace, tuple[int, ...]]:
    """The sub-brace on a subset closed under both operations, reindexed."""
    ms = _as_members(A, subset)
    s = set(ms)
    if not ms or ms[0] != 0:
        raise NotASubgroup("sub-brace needs the identity 0")
    for t, name in ((A.add.table, "+"), (A.circle.table, "o")):
        for x in ms:
            for y in ms:
                if int(t[x, y]) not in s:
                    raise NotASubgroup(
                        f"not closed under {name}: {x}, {y} -> {int(t[x, y])}"
                    )
    pos = {m: i for i, m in enumerate(ms)}
    sub_add = [[pos[int(A.add.table[x, y])] for y in ms] for x in ms]
    sub_circ = [[pos[int(A.circle.table[x, y])] for y in ms] for x in ms]
    return validate_brace(sub_add, sub_circ), ms


def lambda_orbit(A: SkewBrace, x: int) -> ElementSet:
    """{lambda_a(x) : a in A}, the lambda-orbit of a single element."""
    return ElementSet.of((int(v) for v in A.lam[:, x]), A.order)
