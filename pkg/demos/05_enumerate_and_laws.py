"""Exhaustive enumeration and the law harness.

Enumeration walks all lambda assignments into the holomorph of each additive
group, then deduplicates under additive automorphisms.  The law harness runs
every structural identity and theorem-shaped implication over a labeled
corpus and reports failures with witnesses; a separate scan flags candidate
counterexamples for the open per-element nilpotency questions.
"""

from braceforge import (
    brace_from_group_opposite_addition,
    enumerate_braces,
    enumerate_braces_bruteforce,
    run_laws,
    scan_open_questions,
    standard_corpus,
    symmetric,
    z_window_check,
)

counts = [len(enumerate_braces(n)) for n in range(1, 9)]
print("braces of order 1..8:", counts)

# the brute-force oracle tries every relabeled circle table; it agrees
oracle = [len(enumerate_braces_bruteforce(n)) for n in range(1, 7)]
print("oracle counts 1..6: ", oracle)

labeled = standard_corpus(range(1, 7))
rep = run_laws(labeled, corpus="orders 1..6", scan_questions=True)
print(f"laws over {len(labeled)} braces: {'all pass' if rep.ok else 'FAILURES'}")
worst = max(rep.results, key=lambda r: r.checked)
print(f"busiest law: {worst.name} ({worst.checked} checks)")
for line in rep.notes[:3]:
    print("note:", line)
for line in rep.questions:
    print("question:", line)

# the opposite-addition brace on S3 is the canonical question candidate
opp = brace_from_group_opposite_addition(symmetric(3))
for line in scan_open_questions([("opposite S3", opp)]):
    print(line)

# exact window checks of the two classical brace structures on the integers
for kind in ("rump_cyclic", "dihedral_Z"):
    w = z_window_check(kind, 40)
    print(f"{kind}: {w.triples_checked} triples on [-40, 40], failures: {len(w.failures)}")
