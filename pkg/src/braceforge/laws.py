"""Re-checkable law suites: every structural invariant of the library run
over a corpus of braces, with witnesses on failure.

Laws either hold for every finite brace (axioms, homomorphism properties) or
are theorems with hypotheses; the latter count as skipped where the
hypothesis fails.  Open questions are scanned separately and reported as
candidate counterexamples, never as failures.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, reduce

import numpy as np

from .brace import (
    SkewBrace,
    brace_from_group_opposite_addition,
    are_isomorphic_braces,
    star_identities_check,
    validate_brace,
)
from .constructions import (
    direct_product,
    enumerate_braces,
    enumerate_braces_bruteforce,
    wreath_sub_brace,
)
from .errors import BraceForgeError
from .groups import (
    ElementSet,
    abelian,
    cyclic,
    is_normal_subgroup,
    nilpotency_analysis,
    quotient_group,
    sub_group,
    subgroup_closure,
    validate_group,
)
from .series import (
    left_series,
    nil_report,
    right_series,
    socle_series_and_mpl,
    strong_series,
)
from .substructure import (
    fix,
    generated_subbrace,
    is_ideal,
    is_left_ideal,
    ker_lambda,
    lambda_orbit,
    quotient_brace,
    socle,
    star_span,
    sub_brace,
)
from .ybe import (
    decomposable_by_bipartition,
    orbits,
    restrict_solution,
    solution_from_brace,
    validate_solution,
)

SKIP = object()


@dataclass(frozen=True)
class LawResult:
    name: str
    checked: int
    passed: int
    skipped: int
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class LawsReport:
    corpus: str
    results: tuple[LawResult, ...]
    notes: tuple[str, ...] = ()
    questions: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_payload(self) -> dict:
        return {
            "corpus": self.corpus,
            "ok": self.ok,
            "laws": [
                {
                    "name": r.name,
                    "checked": r.checked,
                    "passed": r.passed,
                    "skipped": r.skipped,
                    "failures": [_jsonable(f) for f in r.failures],
                }
                for r in self.results
            ],
            "notes": list(self.notes),
            "questions": list(self.questions),
        }


def _jsonable(v):
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, ElementSet):
        return list(v.members)
    return v


class _Ctx:
    """Per-brace scratch: shared computations cached across law functions."""

    def __init__(self, label: str, A: SkewBrace):
        self.label = label
        self.A = A
        self.notes: list[str] = []

    @cached_property
    def left(self):
        return left_series(self.A)

    @cached_property
    def right(self):
        return right_series(self.A)

    @cached_property
    def strong(self):
        return strong_series(self.A)

    @cached_property
    def socle_members(self) -> ElementSet:
        return socle(self.A)

    @cached_property
    def socle_rep(self):
        return socle_series_and_mpl(self.A)

    @cached_property
    def add_nilp(self):
        return nilpotency_analysis(self.A.add)

    @cached_property
    def circ_nilp(self):
        return nilpotency_analysis(self.A.circle)

    @cached_property
    def a_squared(self) -> ElementSet:
        full = range(self.A.order)
        return star_span(self.A, full, full)

    @cached_property
    def solution(self):
        return solution_from_brace(self.A)

    @cached_property
    def solution_report(self):
        return validate_solution(self.solution)

    @cached_property
    def ideal_pool(self) -> list[ElementSet]:
        """Distinct ideals discovered among series terms and the socle."""
        seen: dict[tuple, ElementSet] = {}
        for term in (*self.right.terms, *self.socle_rep.terms, self.socle_members):
            if term.members not in seen and is_ideal(self.A, term).ideal:
                seen[term.members] = term
        return list(seen.values())


# ------------------------------------------------------------ per-brace laws


def _law_revalidate(ctx: _Ctx):
    A = ctx.A
    try:
        validate_group(A.add.table)
        validate_group(A.circle.table)
        validate_brace(A.add.table, A.circle.table)
    except BraceForgeError as e:
        return str(e)
    return None


def _law_quotient_projection(ctx: _Ctx):
    A = ctx.A
    Q, proj = quotient_group(A.add, ctx.socle_members)
    pa = np.asarray(proj)
    if set(proj) != set(range(Q.order)):
        return "projection is not surjective"
    if not np.array_equal(pa[A.add.table], Q.table[np.ix_(pa, pa)]):
        bad = np.argwhere(pa[A.add.table] != Q.table[np.ix_(pa, pa)])[0]
        return ("projection not a homomorphism at", [int(v) for v in bad])
    return None


def _law_lower_central(ctx: _Ctx):
    for side, rep in (("add", ctx.add_nilp), ("circle", ctx.circ_nilp)):
        G = ctx.A.add if side == "add" else ctx.A.circle
        chain = rep.lower_central
        for i in range(len(chain) - 1):
            if not chain[i + 1].as_set <= chain[i].as_set:
                return (side, "lower central series not descending at", i)
        for i, term in enumerate(chain):
            if not is_normal_subgroup(G, term):
                return (side, "lower central term not normal", i)
    return None


def _law_sylow_sizes(ctx: _Ctx):
    ran = False
    for side, rep in (("add", ctx.add_nilp), ("circle", ctx.circ_nilp)):
        if not rep.nilpotent:
            continue
        ran = True
        prod = 1
        for members in rep.sylow.values():
            prod *= len(members)
        if prod != ctx.A.order:
            return (side, "sylow size product", prod, "order", ctx.A.order)
    return None if ran else SKIP


def _law_lambda_circle(ctx: _Ctx):
    A = ctx.A
    n = A.order
    rows = np.arange(n)[:, None]
    if not np.array_equal(A.add.table[rows, A.lam], A.circle.table):
        return "a + lambda_a(b) != a o b"
    cinv = A.circle.inv
    if not np.array_equal(A.lam[rows[:, 0], cinv], A.add.inv):
        return "lambda_a(a') != -a"
    return None


def _law_lambda_homomorphism(ctx: _Ctx):
    A = ctx.A
    for a in range(A.order):
        lhs = A.lam[A.circle.table[a]]
        rhs = A.lam[a][A.lam]
        if not np.array_equal(lhs, rhs):
            b = int(np.argwhere((lhs != rhs).any(axis=1))[0][0])
            return ("lambda_{a o b} != lambda_a lambda_b at", (a, b))
    return None


def _law_star_identities(ctx: _Ctx):
    ok, witness = star_identities_check(ctx.A)
    return None if ok else ("star identity fails at", witness)


def _law_opposite_star(ctx: _Ctx):
    """In the opposite-addition brace of G, a * b is the commutator-like
    product b^-1 a b a^-1 of G."""
    G = ctx.A.circle
    B = brace_from_group_opposite_addition(G)
    t, inv = G.table, G.inv
    n = G.order
    for a in range(n):
        u = t[inv, a]  # u[b] = b^-1 a
        v = t[u, np.arange(n)]  # v[b] = b^-1 a b
        expect = t[v, inv[a]]
        if not np.array_equal(B.star[a], expect):
            b = int(np.argwhere(B.star[a] != expect)[0][0])
            return ("opposite star mismatch at", (a, b))
    return None


def _law_socle_is_ideal(ctx: _Ctx):
    v = is_ideal(ctx.A, ctx.socle_members)
    k = is_ideal(ctx.A, ker_lambda(ctx.A))
    if not k.ideal:
        ctx.notes.append(f"{ctx.label}: ker lambda is not an ideal ({k.reason})")
    if not v.ideal:
        return ("socle fails is_ideal:", v.reason, v.failing_witness)
    return None


def _law_socle_formulas(ctx: _Ctx):
    A = ctx.A
    t_add, t_circ, cinv = A.add.table, A.circle.table, A.circle.inv
    for a in ctx.socle_members:
        ba = t_circ[:, a]
        if not np.array_equal(t_add[np.arange(A.order), ba], t_add[ba, np.arange(A.order)]):
            b = int(np.argwhere(t_add[np.arange(A.order), ba] != t_add[ba, np.arange(A.order)])[0][0])
            return ("socle element does not add-commute:", (a, b))
        if not np.array_equal(A.lam[:, a], t_circ[ba, cinv]):
            b = int(np.argwhere(A.lam[:, a] != t_circ[ba, cinv])[0][0])
            return ("lambda_b(a) != b o a o b' at", (a, b))
    return None


def _law_orbit_generation(ctx: _Ctx):
    """The lambda-orbit of x inside B(x) generates B(x) under + and under o,
    and the two spans agree."""
    A = ctx.A
    for x in range(A.order):
        bx = generated_subbrace(A, [x])
        orbit = {int(A.lam[c, x]) for c in bx}
        by_add = subgroup_closure(A.add, orbit)
        by_circ = subgroup_closure(A.circle, orbit)
        if by_add.members != bx.members or by_circ.members != bx.members:
            return ("orbit spans disagree with B(x) at", x, by_add, by_circ, bx)
    return None


def _law_trivial_ideal(ctx: _Ctx):
    """An ideal meeting A*A only at 0 is starred to 0 by the whole brace."""
    A = ctx.A
    a2 = ctx.a_squared.as_set
    ran = False
    for I in ctx.ideal_pool:
        if I.as_set & a2 != {0}:
            continue
        ran = True
        block = A.star[np.ix_(I.members, range(A.order))]
        if block.any():
            i, b = (int(v) for v in np.argwhere(block)[0])
            return ("nonzero star from trivial-intersection ideal at", (I.members[i], b))
    return None if ran else SKIP


def _law_right_terms_ideals(ctx: _Ctx):
    for i, term in enumerate(ctx.right.terms):
        v = is_ideal(ctx.A, term)
        if not v.ideal:
            return ("right series term is not an ideal", i, v.reason, v.failing_witness)
    return None


def _law_left_strong_terms(ctx: _Ctx):
    for kind, rep in (("left", ctx.left), ("strong", ctx.strong)):
        for i, term in enumerate(rep.terms):
            v = is_left_ideal(ctx.A, term)
            if not v.left_ideal:
                return (kind, "series term is not a left ideal", i, v.reason)
    return None


def _law_series_monotone(ctx: _Ctx):
    for kind, rep in (("left", ctx.left), ("right", ctx.right), ("strong", ctx.strong)):
        for i in range(len(rep.terms) - 1):
            if not rep.terms[i + 1].as_set <= rep.terms[i].as_set:
                return (kind, "series not descending at", i)
    return None


def _law_strong_iff_left_right(ctx: _Ctx):
    s = ctx.strong.reaches_zero
    lr = ctx.left.reaches_zero and ctx.right.reaches_zero
    if s != lr:
        return (
            "strongly nilpotent", s,
            "left", ctx.left.reaches_zero,
            "right", ctx.right.reaches_zero,
        )
    return None


def _law_mpl_iff(ctx: _Ctx):
    has = ctx.socle_rep.mpl is not None
    expect = ctx.right.reaches_zero and ctx.add_nilp.nilpotent
    if has != expect:
        return (
            "mpl present", has,
            "right nilpotent", ctx.right.reaches_zero,
            "additive nilpotent", ctx.add_nilp.nilpotent,
        )
    return None


def _law_s_series_domination(ctx: _Ctx):
    """With an s-series I_0 >= ... >= I_n (socle terms reversed), the right
    series satisfies A^(i+1) <= I_i."""
    rep = ctx.socle_rep
    if not rep.has_s_series:
        return SKIP
    n = rep.mpl
    rt = ctx.right.terms
    for i in range(n + 1):
        term = rt[min(i, len(rt) - 1)]
        bound = rep.terms[n - i]
        if not term.as_set <= bound.as_set:
            return ("A^(i+1) escapes socle-series bound at i =", i)
    return None


def _law_ideal_meets_socle(ctx: _Ctx):
    if ctx.A.order == 1 or not (ctx.right.reaches_zero and ctx.add_nilp.nilpotent):
        return SKIP
    for I in ctx.ideal_pool:
        if I.is_zero():
            continue
        if not (I.as_set & ctx.socle_members.as_set) - {0}:
            return ("nonzero ideal misses the socle:", I)
    return None


def _law_socle_quotient_lift(ctx: _Ctx):
    Q, _ = quotient_brace(ctx.A, ctx.socle_members)
    if right_series(Q).reaches_zero and not ctx.right.reaches_zero:
        return "A/Soc(A) right nilpotent but A is not"
    return None


def _law_fix_meets_left_terms(ctx: _Ctx):
    if not ctx.left.reaches_zero:
        return SKIP
    fx = fix(ctx.A).as_set
    for i, term in enumerate(ctx.left.terms):
        if term.is_zero():
            continue
        if not (term.as_set & fx) - {0}:
            return ("nonzero left-series term misses Fix at", i, term)
    return None


def _law_left_nil_iff_circle(ctx: _Ctx):
    if not ctx.add_nilp.nilpotent:
        return SKIP
    l, c = ctx.left.reaches_zero, ctx.circ_nilp.nilpotent
    if l != c:
        return ("left nilpotent", l, "multiplicative group nilpotent", c)
    return None


def _law_left_nil_consequences(ctx: _Ctx):
    if not ctx.left.reaches_zero:
        return SKIP
    A = ctx.A
    sq, _ = sub_group(A.add, ctx.a_squared)
    if not nilpotency_analysis(sq).nilpotent:
        return ("additive group of A*A is not nilpotent", ctx.a_squared)
    Qc, _ = quotient_group(A.circle, ker_lambda(A))
    if not nilpotency_analysis(Qc).nilpotent:
        return "multiplicative group of A / ker(lambda) is not nilpotent"
    return None


def _law_cube_zero(ctx: _Ctx):
    rep = ctx.left
    if not (rep.reaches_zero and len(rep.terms) <= 3):
        return SKIP
    A = ctx.A
    sq_members = ctx.a_squared
    sq, _ = sub_group(A.add, sq_members)
    if not sq.is_abelian:
        return ("A*A not additively abelian", sq_members)
    sb, _ = sub_brace(A, sq_members)
    if not np.array_equal(sb.add.table, sb.circle.table):
        return ("A*A not a trivial sub-brace", sq_members)
    return None


def _additive_sylows(ctx: _Ctx) -> list[ElementSet]:
    return [ctx.add_nilp.sylow[p] for p in sorted(ctx.add_nilp.sylow)]


def _law_sylow_product(ctx: _Ctx):
    if not (ctx.add_nilp.nilpotent and ctx.circ_nilp.nilpotent):
        return SKIP
    A = ctx.A
    parts = []
    for members in _additive_sylows(ctx):
        v = is_ideal(A, members)
        if not v.ideal:
            return ("additive Sylow subgroup is not an ideal:", members, v.reason)
        parts.append(sub_brace(A, members)[0])
    if not parts:  # the zero brace: empty product
        return None
    prod = reduce(direct_product, parts)
    if not are_isomorphic_braces(A, prod, cap=max(32, A.order)):
        return "brace is not isomorphic to the product of its Sylow sub-braces"
    return None


def _law_sylow_left_ideals(ctx: _Ctx):
    if not ctx.add_nilp.nilpotent:
        return SKIP
    A = ctx.A
    sylows = _additive_sylows(ctx)
    for P in sylows:
        v = is_left_ideal(A, P)
        if not v.left_ideal:
            return ("Sylow subgroup is not a left ideal:", P, v.reason)
    for P, Q in itertools.combinations(sylows, 2):
        s = subgroup_closure(A.add, set(P.members) | set(Q.members))
        v = is_left_ideal(A, s)
        if not v.left_ideal:
            return ("Sylow sum is not a left ideal:", s, v.reason)
    return None


def _law_star_pq_zero(ctx: _Ctx):
    if not ctx.add_nilp.nilpotent:
        return SKIP
    sylow = ctx.add_nilp.sylow
    primes = sorted(sylow)
    ran = False
    for p, q in itertools.permutations(primes, 2):
        e = 0
        m = len(sylow[q])
        while m % q == 0:
            m //= q
            e += 1
        if any(pow(q, t, p) == 1 for t in range(1, e + 1)):
            continue
        ran = True
        span = star_span(ctx.A, sylow[p], sylow[q])
        if not span.is_zero():
            return ("A_p * A_q nonzero for (p, q) =", (p, q), span)
    return None if ran else SKIP


def _law_solution_valid(ctx: _Ctx):
    rep = ctx.solution_report
    if not (rep.ybe and rep.nondegenerate):
        return (
            "ybe", rep.ybe, "braid witness", rep.braid_witness,
            "nondegenerate", rep.nondegenerate, "witness", rep.degenerate_witness,
        )
    return None


def _law_abelian_involutive(ctx: _Ctx):
    if not ctx.A.add.is_abelian:
        ctx.notes.append(
            f"{ctx.label}: non-abelian type, involutive={ctx.solution_report.involutive}"
        )
        return SKIP
    if not ctx.solution_report.involutive:
        return "abelian type but solution is not involutive"
    return None


def _law_orbits_partition(ctx: _Ctx):
    s = ctx.solution
    orbs = orbits(s)
    flat = sorted(x for o in orbs for x in o)
    if flat != list(range(s.size)):
        return ("orbits do not partition the set:", orbs)
    for o in orbs:
        restrict_solution(s, o)  # raises NotInvariant on failure
    return None


def _law_bx_orbit_indecomposable(ctx: _Ctx):
    """Restricting the solution of B(x) to the orbit of x is indecomposable."""
    A = ctx.A
    for x in range(A.order):
        bx = generated_subbrace(A, [x])
        B, members = sub_brace(A, bx)
        s = solution_from_brace(B)
        xi = members.index(x)
        orbit = next(o for o in orbits(s) if xi in o)
        r = restrict_solution(s, orbit)
        if len(orbits(r)) != 1:
            return ("B(x)-orbit restriction decomposable at x =", x)
    return None


def _law_decomposable_iff_orbits(ctx: _Ctx):
    if ctx.A.order > 10:
        return SKIP
    s = ctx.solution
    split = decomposable_by_bipartition(s)
    many = len(orbits(s)) >= 2
    if (split is not None) != many:
        return ("bipartition search", split, "orbit count", len(orbits(s)))
    return None


def _law_round_trip(ctx: _Ctx):
    import json

    from .io import brace_from_payload, brace_payload

    B = brace_from_payload(json.loads(json.dumps(brace_payload(ctx.A))))
    if not (
        np.array_equal(B.add.table, ctx.A.add.table)
        and np.array_equal(B.circle.table, ctx.A.circle.table)
    ):
        return "round-tripped tables differ"
    return None


PER_BRACE_LAWS = (
    ("revalidate", _law_revalidate),
    ("quotient-projection", _law_quotient_projection),
    ("lower-central-series", _law_lower_central),
    ("sylow-size-product", _law_sylow_sizes),
    ("lambda-circle-consistency", _law_lambda_circle),
    ("lambda-homomorphism", _law_lambda_homomorphism),
    ("star-identities", _law_star_identities),
    ("opposite-star-formula", _law_opposite_star),
    ("socle-is-ideal", _law_socle_is_ideal),
    ("socle-formulas", _law_socle_formulas),
    ("orbit-generation", _law_orbit_generation),
    ("trivial-ideal-intersection", _law_trivial_ideal),
    ("right-terms-are-ideals", _law_right_terms_ideals),
    ("left-strong-terms-are-left-ideals", _law_left_strong_terms),
    ("series-monotone", _law_series_monotone),
    ("strong-iff-left-and-right", _law_strong_iff_left_right),
    ("mpl-iff-right-nilpotent-and-nilpotent-type", _law_mpl_iff),
    ("s-series-domination", _law_s_series_domination),
    ("nonzero-ideal-meets-socle", _law_ideal_meets_socle),
    ("socle-quotient-lift", _law_socle_quotient_lift),
    ("fix-meets-left-terms", _law_fix_meets_left_terms),
    ("left-nilpotent-iff-circle-nilpotent", _law_left_nil_iff_circle),
    ("left-nilpotent-consequences", _law_left_nil_consequences),
    ("cube-zero-trivial-square", _law_cube_zero),
    ("sylow-product-decomposition", _law_sylow_product),
    ("sylow-left-ideals", _law_sylow_left_ideals),
    ("star-pq-zero", _law_star_pq_zero),
    ("solution-valid", _law_solution_valid),
    ("abelian-involutive", _law_abelian_involutive),
    ("orbits-partition", _law_orbits_partition),
    ("bx-orbit-indecomposable", _law_bx_orbit_indecomposable),
    ("decomposable-iff-orbits", _law_decomposable_iff_orbits),
    ("serialization-round-trip", _law_round_trip),
)


# --------------------------------------------------------------- global laws


def _global_wreath_socle():
    """Socle of each admissible W x| B equals W x {0} exactly."""
    failures = []
    cases = [(3, [2]), (5, [2]), (7, [2]), (3, [2, 2])]
    for p, b_orders in cases:
        T = validate_brace(cyclic(p).table, cyclic(p).table)
        Bg = abelian(b_orders)
        B = validate_brace(Bg.table, Bg.table)
        W = wreath_sub_brace(T, B, cap=512)
        nw = W.order // B.order
        expected = tuple(range(nw))
        got = socle(W).members
        if got != expected:
            failures.append(
                {"unit": f"wreath p={p} B={b_orders}", "witness": list(got)}
            )
    return len(cases), failures


def _global_enumeration_oracle():
    """Holomorph enumeration and brute-force oracle agree for n <= 6."""
    failures = []
    for n in range(1, 7):
        fast = enumerate_braces(n)
        slow = enumerate_braces_bruteforce(n)
        if sorted(b.key() for b in fast) != sorted(b.key() for b in slow):
            failures.append(
                {"unit": f"order {n}", "witness": [len(fast), len(slow)]}
            )
    return 6, failures


GLOBAL_LAWS = (
    ("wreath-socle", _global_wreath_socle),
    ("enumeration-oracle", _global_enumeration_oracle),
)


# ----------------------------------------------------------- question scans


def scan_open_questions(labeled: list[tuple[str, SkewBrace]]) -> list[str]:
    """Candidate counterexamples for the open questions: braces that are nil
    in a per-element sense without the matching series reaching zero.
    Reported, never asserted."""
    found: list[str] = []
    undetermined = 0
    for label, A in labeled:
        nr = nil_report(A)
        if nr.right_nil and not right_series(A).reaches_zero:
            found.append(
                f"{label}: right nil but not right nilpotent"
                " (candidate counterexample, definition-sensitivity caveat)"
            )
        verdict, bound = nr.strongly_nil
        if verdict == "yes" and not strong_series(A).reaches_zero:
            found.append(
                f"{label}: strongly nil (n = {bound}) but not strongly nilpotent"
                " (candidate counterexample, definition-sensitivity caveat)"
            )
        if verdict == "undetermined":
            undetermined += 1
    if undetermined:
        found.append(
            f"strongly-nil undetermined within cutoff for {undetermined} brace(es)"
        )
    return found


# ------------------------------------------------------------------ running


def standard_corpus(orders, cap: int | None = None) -> list[tuple[str, SkewBrace]]:
    """Labeled enumeration corpus over the given orders."""
    orders = list(orders)
    if cap is None:
        cap = max(orders, default=1)
    out = []
    for n in orders:
        for i, A in enumerate(enumerate_braces(n, cap=cap)):
            out.append((f"order {n} #{i}", A))
    return out


def run_laws(
    labeled: list[tuple[str, SkewBrace]],
    corpus: str = "",
    scan_questions: bool = False,
    per_brace_laws=PER_BRACE_LAWS,
    global_laws=GLOBAL_LAWS,
) -> LawsReport:
    """Run every law over a labeled corpus and collect a report."""
    results = []
    notes: list[str] = []
    ctxs = [_Ctx(label, A) for label, A in labeled]
    for name, law in per_brace_laws:
        checked = passed = skipped = 0
        failures = []
        for ctx in ctxs:
            verdict = law(ctx)
            if verdict is SKIP:
                skipped += 1
                continue
            checked += 1
            if verdict is None:
                passed += 1
            else:
                from .io import brace_payload

                failures.append(
                    {
                        "label": ctx.label,
                        "brace": brace_payload(ctx.A),
                        "witness": verdict,
                    }
                )
        results.append(LawResult(name, checked, passed, skipped, tuple(failures)))
    for ctx in ctxs:
        notes.extend(ctx.notes)
    for name, law in global_laws:
        checked, failures = law()
        results.append(
            LawResult(name, checked, checked - len(failures), 0, tuple(failures))
        )
    questions = scan_open_questions(labeled) if scan_questions else []
    return LawsReport(
        corpus=corpus,
        results=tuple(results),
        notes=tuple(notes),
        questions=tuple(questions),
    )
