import random

import pytest
from hypothesis import given, settings, strategies as st

from rncfan.combinatorics import canonical_permutation, cm_sequences, weight_from_b
from rncfan.fan import cones_containing
from rncfan.groebner import (
    TermOrder,
    buchberger,
    cm_reduced_gb,
    initial_forms,
    initial_ideal_refined,
    verify_hilbert,
)
from rncfan.tpoly import MonomialIdeal, divides, unit_exp


def ideal(text, d):
    return MonomialIdeal.parse(text, d)


def test_d2_single_generator():
    gb = buchberger(2, TermOrder((0, 2, 3)))
    assert gb.lines() == ["t1^2 - t0*t2"]


def test_d1_has_empty_basis():
    assert buchberger(1, TermOrder((0, 1))).elements == ()


def test_d3_lex_cell():
    gb = buchberger(3, TermOrder((0, 1, 3, 7)))
    assert gb.initial_ideal() == ideal("t1*t3;t0*t3;t0*t2", 3)


def test_weight_length_checked():
    with pytest.raises(ValueError):
        buchberger(3, TermOrder((0, 1, 2)))


def test_bad_tiebreak():
    with pytest.raises(ValueError):
        TermOrder((0, 1), "grevlex")


def test_reducedness():
    gb = buchberger(5, TermOrder((0, 2, 3, 7, 8, 20)))
    leads = gb.leads
    for g in gb.elements:
        for lead in leads:
            if lead != g.lead:
                assert not divides(lead, g.lead)
            assert not divides(lead, g.tail)


def test_initial_forms_examples():
    f = initial_forms(2, (0, 1, 2))
    assert not f.is_monomial and len(f.binomials) == 1
    f = initial_forms(2, (0, 2, 3))
    assert f.is_monomial and f.monomial_ideal() == ideal("t1^2", 2)
    f = initial_forms(3, (0, 1, 2, 4))
    assert set(f.monomials) == {unit_exp(4, 0, 3), unit_exp(4, 1, 3)}
    assert len(f.binomials) == 1
    b = f.binomials[0]
    assert {b.lead, b.tail} == {unit_exp(4, 1, 1), unit_exp(4, 0, 2)}


@pytest.mark.parametrize("tiebreak", ["lex", "revlex"])
@pytest.mark.parametrize("w", [(0, 1, 2, 4), (0, 1, 2, 3), (0, 2, 4, 5, 6), (0, 1, 3, 5, 7, 9)])
def test_refinement_identity(w, tiebreak):
    d = len(w) - 1
    forms = initial_forms(d, w, tiebreak)
    assert initial_ideal_refined(forms, tiebreak) == forms.gb.initial_ideal()


@pytest.mark.parametrize("d", range(2, 8))
def test_closed_form_matches_buchberger(d):
    for i in cm_sequences(d):
        cm_reduced_gb(i, verify=True)


def test_special_cones():
    d = 5
    lex = cm_reduced_gb(tuple(range(d + 1))).initial_ideal()
    assert lex == MonomialIdeal(d + 1, tuple(
        unit_exp(d + 1, i, j) for i in range(d + 1) for j in range(i + 2, d + 1)))
    square = cm_reduced_gb((0, d)).initial_ideal()
    assert square == MonomialIdeal(d + 1, tuple(
        unit_exp(d + 1, i, j) for i in range(1, d) for j in range(i, d)))


def test_canonical_weight_is_in_the_cone():
    for i in cm_sequences(6):
        w = weight_from_b(canonical_permutation(i))
        assert i in cones_containing(w, 6, closed=False)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(1, 40), min_size=2, max_size=5))
def test_hilbert_count_postcondition(b):
    d = len(b)
    gb = buchberger(d, TermOrder(weight_from_b(b)), verify=False)
    verify_hilbert(gb.initial_ideal(), 2 * d + 2)


def test_tiebreak_independence_inside_open_cones():
    rng = random.Random(3)
    checked = 0
    for _ in range(150):
        d = rng.randint(2, 5)
        a = (0, *sorted(rng.sample(range(1, 40), d)))
        if cones_containing(a, d, closed=False):
            lex = buchberger(d, TermOrder(a, "lex")).initial_ideal()
            rev = buchberger(d, TermOrder(a, "revlex")).initial_ideal()
            assert lex == rev
            checked += 1
    assert checked > 20
