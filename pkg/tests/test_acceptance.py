"""Acceptance criteria, one test per criterion.  Each runs the stated check
at its stated budget; the session summary prints one PASS/FAIL line apiece."""

import time

import numpy as np

from braceforge.brace import (
    are_isomorphic_braces,
    brace_from_group,
    brace_from_group_opposite_addition,
    classify,
    star_identities_check,
)
from braceforge.constructions import (
    brace_from_cocycle,
    direct_product,
    enumerate_braces,
    enumerate_braces_bruteforce,
    is_perfect,
    wreath_sub_brace,
    z_window_check,
)
from braceforge.groups import (
    abelian,
    alternating,
    cyclic,
    nilpotency_analysis,
    symmetric,
)
from braceforge.laws import GLOBAL_LAWS, PER_BRACE_LAWS, run_laws
from braceforge.series import (
    left_series,
    right_series,
    socle_series_and_mpl,
    strong_series,
)
from braceforge.substructure import (
    fix,
    generated_subbrace,
    is_ideal,
    is_left_ideal,
    lambda_orbit,
    socle,
    star_span,
    sub_brace,
)
from braceforge.ybe import (
    decomposable_by_bipartition,
    orbits,
    restrict_solution,
    solution_from_brace,
    validate_solution,
)
from tests.conftest import build_fix_brace, build_funny_brace, build_ring_brace

from functools import reduce


def test_criterion_01_golden_strong_series():
    start = time.perf_counter()
    A = brace_from_cocycle(build_funny_brace())
    rep = strong_series(A)
    elapsed = time.perf_counter() - start

    terms = [t.members for t in rep.terms]
    assert terms == [
        tuple(range(16)),
        (0, 1, 4, 5, 8, 9, 12, 13),
        (0, 5, 8, 13),
        (0, 8),
        (0, 8),
        (0,),
    ]
    assert [len(t) for t in rep.terms] == [16, 8, 4, 2, 2, 1]
    assert rep.reaches_zero and rep.stabilized
    assert elapsed < 1.0


def test_criterion_02_fix_example_verdicts():
    start = time.perf_counter()
    A = build_fix_brace()
    fx = fix(A).members
    soc = socle(A).members
    left_v = is_left_ideal(A, [0, 3])
    ideal_v = is_ideal(A, [0, 3])
    orb = lambda_orbit(A, 1).members
    gen1 = generated_subbrace(A, {1}).members
    gen3 = generated_subbrace(A, {3}).members
    gen4 = generated_subbrace(A, {4}).members
    elapsed = time.perf_counter() - start

    assert fx == (0, 3)
    assert soc == (0, 1, 2)
    assert left_v.left_ideal
    assert ideal_v.ideal is False
    assert "star image escapes" in ideal_v.reason
    assert ideal_v.failing_witness == (3, 1, 1)
    assert orb == (1, 2)
    assert gen1 == (0, 1, 2)
    assert gen3 == (0, 3)
    assert gen4 == tuple(range(6))
    assert elapsed < 1.0


def test_criterion_03_ring_orbit_and_restriction():
    start = time.perf_counter()
    A = build_ring_brace()
    s = solution_from_brace(A)
    orbs = orbits(s)
    r = restrict_solution(s, [4, 5])
    split = decomposable_by_bipartition(r)
    elapsed = time.perf_counter() - start

    assert all(A.star[a, a] == 0 for a in range(A.order))
    assert classify(A).two_sided
    assert orbs == [(0,), (1,), (2, 3), (4, 5), (6, 7)]
    assert validate_solution(r).valid
    assert split == ((0,), (1,))  # the restriction splits into singletons
    assert elapsed < 1.0


def test_criterion_04_corpus_sweep():
    start = time.perf_counter()
    counts = []
    for n in range(1, 9):
        braces = enumerate_braces(n, cap=8)
        counts.append(len(braces))
        if n <= 6:
            oracle = enumerate_braces_bruteforce(n)
            assert sorted(b.key() for b in braces) == sorted(b.key() for b in oracle)
        for A in braces:
            ok, witness = star_identities_check(A)
            assert ok, (n, witness)
            rep = validate_solution(solution_from_brace(A))
            assert rep.ybe and rep.nondegenerate, n
            if A.add.is_abelian:
                assert rep.involutive, n
    elapsed = time.perf_counter() - start

    assert counts == [1, 1, 1, 4, 1, 6, 1, 47]
    assert elapsed < 600.0


def test_criterion_05_strong_iff_left_and_right(corpus18, funny_brace, fix_brace):
    pool = list(corpus18) + [("funny", funny_brace), ("fix", fix_brace)]
    seen_right_only = False
    for label, A in pool:
        l = left_series(A).reaches_zero
        r = right_series(A).reaches_zero
        s = strong_series(A).reaches_zero
        assert s == (l and r), label
        seen_right_only = seen_right_only or (r and not l)
    # the equivalence is vacuous unless one side can fail alone
    assert seen_right_only


def test_criterion_06_mpl_iff_right_nilpotent_and_nilpotent_type(corpus18, funny_brace):
    pool = list(corpus18) + [
        ("funny", funny_brace),
        ("trivial-s3", brace_from_group(symmetric(3))),
        ("opp-s3", brace_from_group_opposite_addition(symmetric(3))),
    ]
    for label, A in pool:
        rep = socle_series_and_mpl(A)
        expect = right_series(A).reaches_zero and nilpotency_analysis(A.add).nilpotent
        assert (rep.mpl is not None) == expect, label

    # right nilpotent but of non-nilpotent type: no multipermutation level
    ts3 = socle_series_and_mpl(brace_from_group(symmetric(3)))
    assert right_series(brace_from_group(symmetric(3))).reaches_zero
    assert ts3.mpl is None and ts3.stall_index == 0

    fun = socle_series_and_mpl(funny_brace)
    assert fun.mpl == 4
    assert [len(t) for t in fun.terms] == [1, 2, 4, 8, 16]


def test_criterion_07_left_nilpotent_iff_circle_nilpotent(corpus18, fix_brace):
    pool = list(corpus18) + [("fix", fix_brace)]
    checked = 0
    seen_negative = False
    for label, A in pool:
        if not nilpotency_analysis(A.add).nilpotent:
            continue
        checked += 1
        l = left_series(A).reaches_zero
        c = nilpotency_analysis(A.circle).nilpotent
        assert l == c, label
        seen_negative = seen_negative or not l
    assert checked > 0 and seen_negative

    # prime-power orders: every brace of order 4 or 8 is left nilpotent
    for n in (4, 8):
        braces = [A for label, A in corpus18 if A.order == n]
        assert len(braces) == {4: 4, 8: 47}[n]
        assert all(left_series(A).reaches_zero for A in braces)


def test_criterion_08_sylow_product_decomposition(corpus18, funny_brace):
    def decomposes(A) -> bool:
        sylows = nilpotency_analysis(A.add).sylow
        parts = []
        for p in sorted(sylows):
            members = sylows[p]
            assert is_ideal(A, members).ideal, ("sylow not an ideal", p)
            parts.append(sub_brace(A, members)[0])
        prod = reduce(direct_product, parts)
        return are_isomorphic_braces(A, prod, cap=max(64, A.order))

    ran = 0
    for label, A in corpus18:
        if A.order == 1:
            continue
        if nilpotency_analysis(A.add).nilpotent and nilpotency_analysis(A.circle).nilpotent:
            ran += 1
            assert decomposes(A), label
    assert ran >= 51  # all braces of order 4 and 8 qualify, and more

    start = time.perf_counter()
    big = direct_product(funny_brace, brace_from_group(cyclic(3)))
    assert big.order == 48
    assert decomposes(big)
    assert time.perf_counter() - start < 30.0


def test_criterion_09_ap_star_aq_vanishing(corpus18, fix_brace):
    def eligible_pairs(sylow):
        out = []
        for p in sylow:
            for q in sylow:
                if p == q:
                    continue
                e = 0
                m = len(sylow[q])
                while m % q == 0:
                    m //= q
                    e += 1
                if all(pow(q, t, p) != 1 for t in range(1, e + 1)):
                    out.append((p, q))
        return out

    pool = list(corpus18) + [("fix", fix_brace)]
    instances = 0
    for label, A in pool:
        na = nilpotency_analysis(A.add)
        if not na.nilpotent:
            continue
        pairs = eligible_pairs(na.sylow)
        if not pairs:
            continue
        instances += 1
        for p, q in pairs:
            span = star_span(A, na.sylow[p], na.sylow[q])
            assert span.is_zero(), (label, p, q, span.members)
    # two enumerated order-6 braces have additive Z/6, plus the fixture
    assert instances == 3


def test_criterion_10_wreath_socle():
    start = time.perf_counter()
    small = wreath_sub_brace(
        brace_from_group(cyclic(3)), brace_from_group(cyclic(2))
    )
    assert small.order == 6
    assert socle(small).members == (0, 1, 2)

    big = wreath_sub_brace(
        brace_from_group(cyclic(3)), brace_from_group(abelian([2, 2]))
    )
    assert big.order == 108
    assert socle(big).members == tuple(range(27))
    assert time.perf_counter() - start < 30.0


def test_criterion_11_opposite_a5_perfect():
    start = time.perf_counter()
    A = brace_from_group_opposite_addition(alternating(5))
    assert A.order == 60
    assert is_perfect(A)
    assert socle(A).members == (0,)
    assert time.perf_counter() - start < 30.0


def test_criterion_12_integer_window_checks():
    start = time.perf_counter()
    for kind in ("rump_cyclic", "dihedral_Z"):
        rep = z_window_check(kind, 100)
        assert rep.ok and rep.failures == ()
        assert rep.triples_checked == 201 ** 3
    assert time.perf_counter() - start < 60.0


def test_criterion_13_theorem_property_suites(corpus18):
    rep = run_laws(list(corpus18), corpus="orders 1..8", scan_questions=True)
    assert rep.ok
    names = {r.name: r for r in rep.results}
    assert set(names) == {n for n, _ in PER_BRACE_LAWS} | {n for n, _ in GLOBAL_LAWS}
    for r in rep.results:
        assert not r.failures, r.name

    for key in (
        "strong-iff-left-and-right",
        "mpl-iff-right-nilpotent-and-nilpotent-type",
        "left-nilpotent-iff-circle-nilpotent",
        "sylow-product-decomposition",
        "s-series-domination",
        "wreath-socle",
        "enumeration-oracle",
    ):
        assert names[key].checked > 0, key
    assert names["star-pq-zero"].checked == 2

    assert any("right nil but not right nilpotent" in q for q in rep.questions)
    assert any("strongly nil" in q for q in rep.questions)
