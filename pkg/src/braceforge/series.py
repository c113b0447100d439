"""Star series, socle series with multipermutation level, and nil verdicts.

Series conventions:
  * right series  A = A^(1) >= A^(2) >= ...   with  A^(n+1) = A^(n) * A
  * left series   A = A^1   >= A^2   >= ...   with  A^(n+1) = A * A^n
  * strong series A = A^[1] >= A^[2] >= ...   with
        A^[n+1] = < union of A^[i] * A^[n+1-i] for i = 1..n >_+
Terms are listed until they hit {0} or provably stabilize; a stabilized
series keeps the witnessing repeat, so its last two terms are equal.

The right and left recurrences depend only on the previous term, so one
repeat certifies stabilization.  The strong recurrence looks at the whole
history and consecutive equal terms can still drop later; the certified stop
is a plateau covering positions N..2N-1 for some N >= 2 (every generator
A^[i] * A^[j] with i + j = 2N-1 then reappears with one index bumped into
the plateau, forcing A^[2N] = A^[2N-1], and so on inductively).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .brace import SkewBrace
from .groups import ElementSet, subgroup_closure
from .substructure import quotient_brace, socle, star_span


@dataclass(frozen=True)
class SeriesReport:
    kind: str
    terms: tuple[ElementSet, ...]
    stabilized: bool
    reaches_zero: bool
    length: int


def _full(A: SkewBrace) -> ElementSet:
    return ElementSet.of(range(A.order), A.order)


def _markov_series(A: SkewBrace, kind: str, step) -> SeriesReport:
    terms = [_full(A)]
    while not terms[-1].is_zero():
        nxt = step(terms[-1])
        if nxt.members == terms[-1].members:
            terms.append(nxt)
            return SeriesReport(kind, tuple(terms), True, False, len(terms))
        terms.append(nxt)
    return SeriesReport(kind, tuple(terms), True, True, len(terms))


def right_series(A: SkewBrace) -> SeriesReport:
    """Terms of A^(n+1) = A^(n) * A; every term is an ideal."""
    full = _full(A)
    return _markov_series(A, "right", lambda t: star_span(A, t, full))


def left_series(A: SkewBrace) -> SeriesReport:
    """Terms of A^(n+1) = A * A^n; every term is a left ideal."""
    full = _full(A)
    return _markov_series(A, "left", lambda t: star_span(A, full, t))


def _raw_star_image(A: SkewBrace, X: ElementSet, Y: ElementSet) -> frozenset:
    xs, ys = list(X.members), list(Y.members)
    if not xs or not ys:
        return frozenset()
    return frozenset(int(v) for v in A.star[np.ix_(xs, ys)].ravel())


def strong_series(A: SkewBrace) -> SeriesReport:
    terms = [_full(A)]
    images: dict[tuple[int, int], frozenset] = {}
    while True:
        k = len(terms)  # computing A^[k+1]
        gens: set[int] = set()
        for i in range(1, k + 1):
            pair = (i, k + 1 - i)
            if pair not in images:
                images[pair] = _raw_star_image(A, terms[pair[0] - 1], terms[pair[1] - 1])
            gens |= images[pair]
        terms.append(subgroup_closure(A.add, gens))
        L = len(terms)
        if terms[-1].is_zero():
            return SeriesReport("strong", tuple(terms), True, True, L)
        for N in range(2, (L + 1) // 2 + 1):
            span = terms[N - 1 : 2 * N - 1]
            if len(span) == N and all(t.members == span[0].members for t in span):
                return SeriesReport("strong", tuple(terms), True, False, L)
        assert L <= 4 * A.order + 8, "strong series failed to stabilize in bound"


@dataclass(frozen=True)
class SocleSeriesReport:
    terms: tuple[ElementSet, ...]
    has_s_series: bool
    mpl: int | None
    stall_index: int
    convention: str = field(
        default="mpl = least n with Soc_n(A) = A; the zero brace has mpl 0",
    )


def socle_series_and_mpl(A: SkewBrace) -> SocleSeriesReport:
    """Ascending Soc_0 <= Soc_1 <= ... with Soc_{n+1}/Soc_n = Soc(A/Soc_n).

    Reaching the full set at step n yields multipermutation level n and an
    s-series (the terms reversed); stalling below the full set means there is
    no s-series.  The raw stall index is reported alongside the convention so
    an off-by-one reading of the level stays visible.
    """
    terms = [ElementSet.of([0], A.order)]
    while not terms[-1].is_full():
        Q, proj = quotient_brace(A, terms[-1])
        soc_q = socle(Q).as_set
        pre = ElementSet.of(
            (x for x in range(A.order) if proj[x] in soc_q), A.order
        )
        if pre.members == terms[-1].members:
            terms.append(pre)
            return SocleSeriesReport(tuple(terms), False, None, len(terms) - 2)
        terms.append(pre)
    n = len(terms) - 1
    return SocleSeriesReport(tuple(terms), True, n, n)


@dataclass(frozen=True)
class NilpotencyReport:
    left: bool
    right: bool
    strong: bool
    witness_lengths: dict[str, int | None]


def nilpotency_report(A: SkewBrace) -> NilpotencyReport:
    """Left/right/strong nilpotency read off the three series."""
    reports = {
        "left": left_series(A),
        "right": right_series(A),
        "strong": strong_series(A),
    }
    return NilpotencyReport(
        left=reports["left"].reaches_zero,
        right=reports["right"].reaches_zero,
        strong=reports["strong"].reaches_zero,
        witness_lengths={
            k: (r.length if r.reaches_zero else None) for k, r in reports.items()
        },
    )


@dataclass(frozen=True)
class NilReport:
    left_nil: bool
    right_nil: bool
    strongly_nil: tuple[str, int]
    per_element_left: tuple[int | None, ...]
    per_element_right: tuple[int | None, ...]
    per_element_strongly: tuple[tuple[str, int], ...]
    cutoff: int


def _nested_nil(A: SkewBrace, a: int, from_left: bool) -> int | None:
    """Least n with the n-fold nested product zero, or None on a 0-free cycle."""
    st = A.star
    x, n, seen = a, 1, set()
    while x != 0:
        if x in seen:
            return None
        seen.add(x)
        x = int(st[a, x]) if from_left else int(st[x, a])
        n += 1
    return n


def nil_report(A: SkewBrace, cutoff: int | None = None) -> NilReport:
    """Per-element nil verdicts.

    Left/right verdicts are definite (the nested sequence either hits 0 or
    enters a cycle).  The strongly-nil verdict tracks the sets P_k of all
    k-fold star products of one element; it is "yes n" when P_n = {0} within
    the cutoff and "undetermined" otherwise, never a definite no.
    """
    if cutoff is None:
        cutoff = A.order * A.order
    image_cache: dict[tuple[frozenset, frozenset], frozenset] = {}
    st = A.star

    def image(X: frozenset, Y: frozenset) -> frozenset:
        key = (X, Y)
        if key not in image_cache:
            image_cache[key] = frozenset(
                int(st[x, y]) for x in X for y in Y
            )
        return image_cache[key]

    lefts, rights, strongs = [], [], []
    for a in range(A.order):
        lefts.append(_nested_nil(A, a, from_left=True))
        rights.append(_nested_nil(A, a, from_left=False))
        powers = [frozenset({a})]
        verdict: tuple[str, int] = ("undetermined", cutoff)
        if powers[0] == frozenset({0}):
            verdict = ("yes", 1)
        else:
            for k in range(2, cutoff + 1):
                new = frozenset().union(
                    *(image(powers[i - 1], powers[k - i - 1]) for i in range(1, k))
                )
                powers.append(new)
                if new == frozenset({0}):
                    verdict = ("yes", k)
                    break
        strongs.append(verdict)
    all_yes = all(v[0] == "yes" for v in strongs)
    aggregate = (
        ("yes", max(v[1] for v in strongs)) if all_yes else ("undetermined", cutoff)
    )
    return NilReport(
        left_nil=all(v is not None for v in lefts),
        right_nil=all(v is not None for v in rights),
        strongly_nil=aggregate,
        per_element_left=tuple(lefts),
        per_element_right=tuple(rights),
        per_element_strongly=tuple(strongs),
        cutoff=cutoff,
    )
