import random

import pytest

from rncfan import fan
from rncfan.combinatorics import cm_sequences
from rncfan.groebner import cm_reduced_gb
from rncfan.hilbsym import LinearForm, compare_invariants, h1_form, symbolic_h, symbolic_invariants
from rncfan.tpoly import FiberViolation, MonomialIdeal
from rncfan.xy_ideals import h_polynomial, hilbert_h1, normalize


def ideal(text, d):
    return MonomialIdeal.parse(text, d)


D4_I = "t1*t3;t1*t2;t0*t2;t3^3;t1^2*t4;t1^3;t2*t4;t2*t3;t2^2"
D4_J = "t1*t3;t1*t2;t1^2;t3^3;t2*t4;t2*t3;t2^2"


def test_linear_form_basics():
    f = LinearForm((1, -2, 0, 3))
    assert f((1, 1, 1, 1)) == 2
    assert str(f) == "A0 - 2A1 + 3A3"
    assert str(LinearForm((0, -1))) == "-A1"
    assert str(LinearForm((0, 0))) == "0"
    with pytest.raises(ValueError):
        f((1, 2))


def test_d3_cell_h_forms():
    s = symbolic_h(ideal("t1*t3;t0*t3;t0*t2", 3))
    assert s.h == (LinearForm((1, 1, 1, 1)), LinearForm((0, 1, 1, 0)))
    s = symbolic_h(ideal("t2^2;t1*t2;t0*t2;t0^2*t3", 3))
    assert [f.coeffs for f in s.h] == [(1, 1, 1, 1), (1, 1, -2, 2), (-1, 1, 1, -1)]


def test_evaluation_matches_numeric_h():
    s = symbolic_h(ideal("t1*t3;t0*t3;t0*t2", 3))
    assert s.h_at((0, 1, 2, 3)) == h_polynomial((0, 1, 2, 3)).h == (6, 3)


def test_d4_pair_forms():
    inv = symbolic_invariants(ideal(D4_I, 4))
    assert inv["e0"].coeffs == (4, 0, 0, 0, 4)
    assert inv["e1"].coeffs == (3, -1, 0, -3, 4)
    assert inv["e2"].coeffs == (-1, 2, 0, -2, 1)
    inv = symbolic_invariants(ideal(D4_J, 4))
    assert inv["e2"].coeffs == (0, 0, 1, -2, 1)


def test_lex_e0_form():
    assert symbolic_invariants(ideal("t1*t3;t0*t3;t0*t2", 3))["e0"].coeffs == (1, 2, 2, 1)


def test_compare_d4_pair():
    r = compare_invariants(ideal(D4_I, 4), ideal(D4_J, 4))
    assert r.e0_equal and r.e1_equal and r.Q_equal and r.radical_equal and r.top_equal
    assert not r.Q1_equal and not r.sat_equal and not r.h_equal
    assert r.toppo_consistent


def test_compare_reflexive():
    I = ideal(D4_I, 4)
    r = compare_invariants(I, I)
    assert all(v for v in r.to_json().values())


def test_distinct_cm_ideals_have_distinct_h():
    hs = [symbolic_h(cm_reduced_gb(i).initial_ideal()).h for i in cm_sequences(3)]
    assert len(set(hs)) == len(hs)


def test_compare_rejects_mismatched_rings():
    with pytest.raises(ValueError):
        compare_invariants(ideal("t0*t2", 2), ideal("t0*t2;t0*t3;t1*t3", 3))


def test_fiber_violation_propagates():
    with pytest.raises(FiberViolation):
        symbolic_h(ideal("t1", 3))


def test_q1_reproduces_h1_in_the_tail():
    I = ideal(D4_I, 4)
    s = symbolic_h(I)
    rng = random.Random(5)
    cell = next(c for c in fan.traverse_fan(4) if c.initial_ideal == I)
    a = cell.interior_weight.a
    for _ in range(5):
        # stay inside the open cone: positive multiple plus lineality
        k, m = rng.randint(1, 3), rng.randint(0, 3)
        b = tuple(k * x + m * j for j, x in enumerate(a))
        for deg in range(s.stabilized_at - 3, s.stabilized_at + 1):
            assert s.q1_at(b, deg) == hilbert_h1(b, deg)


def test_symbolic_and_numeric_agree_on_every_cell():
    rng = random.Random(9)
    for d in (2, 3, 4):
        for c in fan.traverse_fan(d):
            I = c.initial_ideal
            s = symbolic_h(I)
            base = c.interior_weight.a
            forms = [h1_form(I, k) for k in range(2 * d + 1)]
            for _ in range(20):
                k, m = rng.randint(1, 4), rng.randint(0, 4)
                a = normalize([k * x + m * j for j, x in enumerate(base)]).a
                assert s.h_at(a) == h_polynomial(a).h + (0,) * (len(s.h) - len(h_polynomial(a).h))
                for kk, f in enumerate(forms):
                    assert f(a) == hilbert_h1(a, kk)
            if c.depth == 2:
                assert len(s.h) == 2 and s.h[1](base) > 0


def test_pairwise_invariants_exhaustive_d3():
    cells = fan.traverse_fan(3)
    cache = {}
    for c1 in cells:
        for c2 in cells:
            r = compare_invariants(c1.initial_ideal, c2.initial_ideal, cache)
            assert r.h_equal == r.ideal_equal
            assert r.e0_equal == r.radical_equal
            assert r.Q1_equal == r.sat_equal
