"""Brace validation, the lambda and star maps, classification, and brace
isomorphism."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braceforge.brace import (
    are_isomorphic_braces,
    brace_from_group,
    brace_from_group_opposite_addition,
    classify,
    lambda_of,
    star,
    star_identities_check,
    validate_brace,
)
from braceforge.constructions import enumerate_braces
from braceforge.errors import (
    CompatibilityFailed,
    IdentityMismatch,
    NotClosed,
)
from braceforge.groups import abelian, cyclic, dihedral, symmetric


def test_trivial_braces_validate():
    for G in (cyclic(6), symmetric(3), dihedral(8)):
        A = brace_from_group(G)
        assert A.order == G.order
        assert np.array_equal(A.add.table, A.circle.table)
        assert np.all(A.star == 0)
        assert np.array_equal(A.lam, np.tile(np.arange(G.order), (G.order, 1)))


def test_validate_rejects_shape_mismatch():
    with pytest.raises(NotClosed):
        validate_brace(cyclic(2).table, cyclic(3).table)


def test_validate_rejects_identity_mismatch():
    add = [[0, 1], [1, 0]]
    circ = [[1, 0], [0, 1]]  # valid group, but its identity is 1
    with pytest.raises(IdentityMismatch):
        validate_brace(add, circ)


def test_validate_rejects_incompatible_pair():
    # Z/4 addition against a relabeled Z/4 circle whose lambda maps are not
    # additive: both tables are groups with identity 0, compatibility fails
    t4 = cyclic(4).table
    p = np.array([0, 1, 3, 2])
    q = np.argsort(p)
    circ = q[t4[np.ix_(p, p)]]
    with pytest.raises(CompatibilityFailed) as ei:
        validate_brace(t4, circ)
    a, b, c = ei.value.witness
    lhs = circ[a][t4[b, c]]
    rhs = t4[t4[circ[a, b], (-a) % 4], circ[a, c]]
    assert lhs != rhs


def test_lambda_and_star_values(fix_brace):
    A = fix_brace
    # lambda_a(b) = -a + a o b; a = 3 is the flip (x, y) -> (-x, y)
    assert lambda_of(A, 0) == (0, 1, 2, 3, 4, 5)
    assert lambda_of(A, 3) == (0, 2, 1, 3, 5, 4)
    assert star(A, 3, 1) == 1  # lambda_3(1) - 1 = 2 - 1
    assert star(A, 3, 3) == 0


def test_star_identities_on_corpus():
    for n in (4, 6):
        for A in enumerate_braces(n):
            ok, witness = star_identities_check(A)
            assert ok and witness is None


def test_classify_trivial_and_types():
    t = classify(brace_from_group(cyclic(6)))
    assert t.trivial and t.abelian_type and t.nilpotent_type and t.two_sided
    s = classify(brace_from_group(symmetric(3)))
    assert s.trivial and not s.abelian_type and not s.nilpotent_type


def test_classify_ring_brace_two_sided(ring_brace):
    c = classify(ring_brace)
    assert not c.trivial and c.abelian_type and c.two_sided


def test_opposite_star_formula():
    for G in (symmetric(3), dihedral(8)):
        B = brace_from_group_opposite_addition(G)
        t, inv = G.table, G.inv
        for a in range(G.order):
            for b in range(G.order):
                expect = t[t[t[inv[b], a], b], inv[a]]  # b^-1 a b a^-1
                assert B.star[a, b] == expect


def test_opposite_brace_of_abelian_group_is_trivial():
    B = brace_from_group_opposite_addition(cyclic(5))
    assert np.array_equal(B.add.table, B.circle.table)


def test_brace_isomorphism_basics(fix_brace):
    t4 = brace_from_group(cyclic(4))
    t22 = brace_from_group(abelian([2, 2]))
    assert not are_isomorphic_braces(t4, t22)
    assert are_isomorphic_braces(fix_brace, fix_brace)
    assert not are_isomorphic_braces(fix_brace, brace_from_group(cyclic(6)))


def test_order_6_braces_pairwise_distinct():
    braces = enumerate_braces(6)
    assert len(braces) == 6
    for i in range(6):
        for j in range(i + 1, 6):
            assert not are_isomorphic_braces(braces[i], braces[j])


@settings(max_examples=20, deadline=None)
@given(data=st.data())
def test_relabeling_preserves_brace_isomorphism(data):
    n = data.draw(st.integers(min_value=2, max_value=6))
    pool = enumerate_braces(n)
    A = pool[data.draw(st.integers(min_value=0, max_value=len(pool) - 1))]
    perm = [0] + data.draw(st.permutations(list(range(1, n))))
    p = np.array(perm)
    inv = np.argsort(p)
    B = validate_brace(inv[A.add.table[np.ix_(p, p)]], inv[A.circle.table[np.ix_(p, p)]])
    assert are_isomorphic_braces(A, B)
    ok, _ = star_identities_check(B)
    assert ok
