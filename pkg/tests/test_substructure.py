"""Left ideals, ideals, socle, fix, spans, generated sub-braces, quotients."""

import numpy as np
import pytest

from braceforge.brace import brace_from_group, brace_from_group_opposite_addition
from braceforge.errors import NotAnIdeal, NotASubgroup
from braceforge.groups import cyclic, dihedral, symmetric
from braceforge.substructure import (
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


def test_fix_example_verdicts(fix_brace):
    A = fix_brace
    assert fix(A).members == (0, 3)
    assert socle(A).members == (0, 1, 2)
    v = is_left_ideal(A, [0, 3])
    assert v.left_ideal and v.add_subgroup
    w = is_ideal(A, [0, 3])
    assert w.ideal is False
    assert w.failing_witness is not None
    s, b, out = w.failing_witness
    assert s in (0, 3) and out not in (0, 3)


def test_verdict_refuses_truthiness(fix_brace):
    v = is_left_ideal(fix_brace, [0, 3])
    with pytest.raises(TypeError):
        bool(v)


def test_trivial_brace_extremes():
    A = brace_from_group(symmetric(3))
    assert ker_lambda(A).is_full()
    assert fix(A).is_full()
    # socle of a trivial brace is the additive center
    assert socle(A).members == (0,)
    Z = brace_from_group(cyclic(6))
    assert socle(Z).is_full()


def test_opposite_brace_socle_and_span():
    B = brace_from_group_opposite_addition(symmetric(3))
    assert socle(B).members == (0,)  # center of S3
    full = range(6)
    assert star_span(B, full, full).members == (0, 3, 4)  # A3, the derived subgroup
    D = brace_from_group_opposite_addition(dihedral(8))
    assert socle(D).members == (0, 2)  # center of D8


def test_is_ideal_catches_additive_normality(fix_brace):
    # {0, 1, 2} is the socle, hence an ideal
    v = is_ideal(fix_brace, [0, 1, 2])
    assert v.ideal
    # subgroup generated by a flip in the trivial S3 brace: not add-normal
    A = brace_from_group(symmetric(3))
    w = is_ideal(A, [0, 1])
    assert w.ideal is False and w.add_subgroup


def test_non_subgroup_verdict(fix_brace):
    v = is_left_ideal(fix_brace, [0, 1])
    assert not v.add_subgroup and not v.left_ideal
    assert v.failing_witness is not None


def test_quotient_brace(fix_brace):
    Q, proj = quotient_brace(fix_brace, [0, 1, 2])
    assert Q.order == 2
    assert sorted(set(proj)) == [0, 1]
    with pytest.raises(NotAnIdeal):
        quotient_brace(fix_brace, [0, 3])


def test_generated_subbrace_and_orbit(fix_brace):
    assert generated_subbrace(fix_brace, [1]).members == (0, 1, 2)
    assert generated_subbrace(fix_brace, [3]).members == (0, 3)
    assert generated_subbrace(fix_brace, [4]).members == tuple(range(6))
    assert lambda_orbit(fix_brace, 1).members == (1, 2)
    assert lambda_orbit(fix_brace, 3).members == (3,)


def test_sub_brace_reindexes(fix_brace):
    B, members = sub_brace(fix_brace, [0, 1, 2])
    assert B.order == 3 and members == (0, 1, 2)
    assert np.array_equal(B.add.table, B.circle.table)  # socle is trivial as a brace
    with pytest.raises(NotASubgroup):
        sub_brace(fix_brace, [0, 4])


def test_star_span_directional(funny_brace):
    A = funny_brace
    full = range(16)
    sq = star_span(A, full, full)
    assert sq.members == (0, 1, 4, 5, 8, 9, 12, 13)
    assert star_span(A, [0], full).is_zero()


def test_socle_is_ideal_across_corpus(corpus18):
    for label, A in corpus18[:30]:
        v = is_ideal(A, socle(A))
        assert v.ideal, label
