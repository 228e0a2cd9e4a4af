import pytest

from rncfan.combinatorics import cm_sequences
from rncfan.groebner import cm_reduced_gb
from rncfan.tpoly import (
    FiberViolation,
    MonomialIdeal,
    NotIGPhi,
    PureBinomial,
    StructureData,
    ideal_components,
    igphi_build,
    igphi_recognize,
    intersect,
    irreducible_components,
    line_structure,
    parse_monomial,
    render_monomial,
    rnc_generators,
    standard_monomials,
    unit_exp,
)


def ideal(text, d):
    return MonomialIdeal.parse(text, d)


def test_rnc_generators():
    two = {frozenset((g.lead, g.tail)) for g in rnc_generators(2)}
    assert two == {frozenset((unit_exp(3, 0, 2), unit_exp(3, 1, 1)))}
    three = {frozenset((g.lead, g.tail)) for g in rnc_generators(3)}
    assert three == {
        frozenset((unit_exp(4, 0, 2), unit_exp(4, 1, 1))),
        frozenset((unit_exp(4, 0, 3), unit_exp(4, 1, 2))),
        frozenset((unit_exp(4, 1, 3), unit_exp(4, 2, 2))),
    }
    assert rnc_generators(1) == []


def test_binomial_must_be_bihomogeneous():
    with pytest.raises(ValueError):
        PureBinomial(unit_exp(3, 0, 1), unit_exp(3, 2, 2))


def test_monomial_text_round_trip():
    e = parse_monomial("t1^2*t3", 4)
    assert e == (0, 2, 0, 1)
    assert render_monomial(e) == "t1^2*t3"
    assert parse_monomial("[1,0,1]", 3) == (1, 0, 1)


def test_ideal_is_minimalized():
    I = ideal("t0*t2;t0*t1*t2;t1^2", 2)
    assert len(I.gens) == 2


def test_standard_monomials_lex_ideal():
    I = ideal("t0*t2;t0*t3;t1*t3", 3)
    mons, msum = standard_monomials(I, 1)
    assert len(mons) == 4 and msum == (1, 1, 1, 1)
    mons, msum = standard_monomials(I, 2)
    assert len(mons) == 7 and msum == (3, 4, 4, 3)
    mons, msum = standard_monomials(I, 0)
    assert mons == [(0, 0, 0, 0)] and msum == (0, 0, 0, 0)


def test_fiber_violation():
    with pytest.raises(FiberViolation):
        standard_monomials(ideal("t1", 2), 1)


D4_I = "t1*t3;t1*t2;t0*t2;t3^3;t1^2*t4;t1^3;t2*t4;t2*t3;t2^2"
D4_J = "t1*t3;t1*t2;t1^2;t3^3;t2*t4;t2*t3;t2^2"


def test_components_of_the_d4_pair():
    I, J = ideal(D4_I, 4), ideal(D4_J, 4)
    ci = ideal_components(I)
    assert ci.saturation == ideal("t2;t1*t3;t1^2*t4;t3^3;t1^3", 4)
    assert ci.top == ideal("t1*t3;t2;t3^3;t1^2", 4)
    assert ci.radical == ideal("t1;t2;t3", 4)
    assert ci.dim == 2
    cj = ideal_components(J)
    assert cj.saturation == J
    assert cj.top == ci.top


def test_cm_ideal_is_saturated():
    I = ideal("t1*t3;t0*t3;t0*t2", 3)
    assert ideal_components(I).saturation == I


@pytest.mark.parametrize("text, d", [
    (D4_I, 4), (D4_J, 4), ("t1*t3;t0*t3;t0*t2", 3), ("t2^2;t1*t2;t0*t2;t0^2*t3", 3),
    ("t0^2*t1;t1^3*t2;t0*t2^2", 2),
])
def test_decomposition_oracle(text, d):
    I = ideal(text, d)
    comps = irreducible_components(I)
    assert intersect(comps, I.nvars) == I
    c = ideal_components(I)
    assert I.issubset(c.saturation) and c.saturation.issubset(c.top)


def test_igphi_worked_example():
    e1, e2, e3 = (0, 1), (0, 2), (2, 3)
    s = StructureData(
        V=(0, 1, 2, 3), Q=(4, 5, 6, 7, 8), edges=(e1, e2, e3),
        phi=((4, e2), (5, e1), (6, e1), (7, e3), (8, e2)),
    )
    I = igphi_build(s)
    n = 9
    expected = [unit_exp(n, 0, 3), unit_exp(n, 1, 2), unit_exp(n, 1, 3)]
    expected += [unit_exp(n, q, r) for q in range(4, 9) for r in range(q, 9)]
    expected += [unit_exp(n, 4, y) for y in (1, 3)]
    expected += [unit_exp(n, 5, y) for y in (2, 3)]
    expected += [unit_exp(n, 6, y) for y in (2, 3)]
    expected += [unit_exp(n, 7, y) for y in (0, 1)]
    expected += [unit_exp(n, 8, y) for y in (1, 3)]
    assert I == MonomialIdeal(n, tuple(expected))
    assert igphi_recognize(I) == s


def test_igphi_path_without_squares():
    s = StructureData((0, 1, 2), (), ((0, 1), (1, 2)), ())
    assert igphi_build(s) == ideal("t0*t2", 2)


def test_igphi_rejects_non_tree():
    with pytest.raises(ValueError):
        igphi_build(StructureData((0, 1, 2), (), ((0, 1), (1, 2), (0, 2)), ()))


def test_line_structure_d6():
    I = igphi_build(line_structure((0, 3, 4, 6)))
    assert I == cm_reduced_gb((0, 3, 4, 6)).initial_ideal()
    assert len(I.gens) == 15


def test_recognize_line_tree():
    s = igphi_recognize(ideal("t1*t3;t0*t3;t0*t2", 3))
    assert s.V == (0, 1, 2, 3) and s.Q == ()
    assert s.edges == ((0, 1), (1, 2), (2, 3))


@pytest.mark.parametrize("text, d, reason", [
    ("t3^2;t2*t3;t1*t3;t0*t4;t0*t3;t1^2", 4, "phi-undefined"),
    ("t1^2", 3, "graph-not-tree"),
    ("t2^2;t1*t2;t0*t2;t0^2*t3", 3, "not-quadratic"),
])
def test_recognizer_failures(text, d, reason):
    with pytest.raises(NotIGPhi) as info:
        igphi_recognize(ideal(text, d))
    assert info.value.reason == reason


@pytest.mark.parametrize("d", range(1, 8))
def test_catalog_ideals_are_igphi(d):
    for i in cm_sequences(d):
        I = cm_reduced_gb(i).initial_ideal()
        assert igphi_build(line_structure(i), d + 1) == I
        assert igphi_recognize(I).V == i
