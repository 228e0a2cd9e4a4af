import pytest
from hypothesis import given, settings, strategies as st

from rncfan.polyhedra import (
    ConeSystem,
    DegenerateCone,
    fm_feasible,
    fm_implies,
    interior_point,
    irredundant,
    lp_implies,
    max_min_slack,
    same_cone,
    simplex_max,
)


def b_le(d, p, q):
    n = [0] * (d + 1)
    n[q] += 1
    n[q - 1] -= 1
    n[p] -= 1
    n[p - 1] += 1
    return tuple(n)


def test_simplex_small_problems():
    assert simplex_max([3, 2], [[1, 1], [1, 0], [0, 1]], [4, 3, 3])[0] == 11
    assert simplex_max([1, 1], [[1, -1]], [1]) == (None, None)
    value, x = simplex_max([2, 3, 4], [[3, 2, 1], [2, 5, 3]], [10, 15])
    assert value == 20 and x == [0, 0, 5]


def test_simplex_needs_feasible_origin():
    with pytest.raises(ValueError):
        simplex_max([1], [[1]], [-1])


def test_simplex_degenerate_cycle_example():
    # Beale's classic cycling example (scaled to integers); Bland's rule terminates.
    c = [3, -80, 2, -24]
    A = [[1, -32, -4, 36], [1, -24, -1, 6], [0, 0, 1, 0]]
    b = [0, 0, 1]
    value, x = simplex_max(c, A, b)
    assert value == sum(ci * xi for ci, xi in zip(c, x))
    assert all(sum(a * v for a, v in zip(row, x)) <= rhs for row, rhs in zip(A, b))


def test_cone_system_rejects_non_orthogonal():
    with pytest.raises(ValueError):
        ConeSystem(2, ((1, 0, 0),))


def test_contains_closed_and_open():
    s = ConeSystem(2, ((1, -2, 1),), (True,))
    assert s.contains((0, 1, 2), closed=True)
    assert not s.contains((0, 1, 2), closed=False)
    assert s.contains((0, 1, 3), closed=False)


def test_implication_and_facets():
    d = 3
    chain = [b_le(d, 1, 2), b_le(d, 2, 3)]
    assert lp_implies(chain, b_le(d, 1, 3))
    assert fm_implies(chain, b_le(d, 1, 3))
    assert not lp_implies(chain, b_le(d, 3, 1))
    assert not fm_implies(chain, b_le(d, 3, 1))
    assert set(irredundant(chain + [b_le(d, 1, 3)])) == set(chain)


def test_interior_point_and_degenerate():
    d = 3
    chain = [b_le(d, 1, 2), b_le(d, 2, 3)]
    w = interior_point(chain)
    assert all(sum(x * y for x, y in zip(n, w)) > 0 for n in chain)
    with pytest.raises(DegenerateCone):
        interior_point(chain + [b_le(d, 3, 1)])


def test_facet_point_lies_on_the_facet():
    d = 4
    facets = [b_le(d, 1, 2), b_le(d, 2, 3), b_le(d, 3, 4)]
    s, w = max_min_slack(facets[1:], equalities=[facets[0]])
    assert s > 0
    assert sum(x * y for x, y in zip(facets[0], w)) == 0


def test_same_cone():
    d = 3
    assert same_cone([b_le(d, 1, 2), b_le(d, 2, 3)],
                     [b_le(d, 1, 2), b_le(d, 2, 3), b_le(d, 1, 3)])
    assert not same_cone([b_le(d, 1, 2)], [b_le(d, 1, 2), b_le(d, 2, 3)])


def test_fm_strict_infeasible():
    assert not fm_feasible([((1, -1), True), ((-1, 1), False)])
    assert fm_feasible([((1, -1), False), ((-1, 1), False)])


def lineality_free(v):
    """Lift free coordinates for indices 2..d into a lineality-orthogonal normal."""
    s1 = sum(v)
    s2 = sum((i + 2) * x for i, x in enumerate(v))
    a1 = -(s2)
    a0 = -s1 - a1
    n = (a0, a1, *v)
    assert sum(n) == 0 and sum(i * x for i, x in enumerate(n)) == 0
    return n


vectors = st.lists(st.integers(-3, 3), min_size=3, max_size=3).map(lineality_free)


@settings(max_examples=60, deadline=None)
@given(st.lists(vectors, min_size=1, max_size=4), vectors)
def test_lp_and_fm_agree(system, target):
    assert lp_implies(system, target) == fm_implies(system, target)
