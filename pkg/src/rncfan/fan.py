"""The Groebner fan of P: Cohen-Macaulay cones, Groebner cones and traversal."""

from __future__ import annotations

import os
from math import lcm
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import polyhedra
from .combinatorics import (
    avoider_count,
    bigcone_perm_count,
    canonical_permutation,
    catalan_product,
    check_sequence,
    cm_sequences,
    fibonacci_f,
    gap_two_sequences,
    weight_from_b,
)
from .groebner import ReducedGB, TermOrder, _cm_pairs, buchberger
from .polyhedra import ConeSystem, Vec, dot
from .tpoly import MonomialIdeal, canonical_key, vertex_sequence
from .xy_ideals import ASequence, deviation, normalize

DEFAULT_MAX_D = 6


class TraversalCapExceeded(ValueError):
    pass


class FlipFailure(ArithmeticError):
    pass


def _unit(n: int, *idx: int) -> list[int]:
    v = [0] * n
    for i in idx:
        v[i] += 1
    return v


def cone_system(i: Sequence[int]) -> ConeSystem:
    """The open cone ``C(i)``; call ``.closed()`` for its closure."""
    i = check_sequence(i)
    d = i[-1]
    ineqs: list[Vec] = []
    for (s, r), (p, q) in _cm_pairs(i):
        n = [x - y for x, y in zip(_unit(d + 1, s, r), _unit(d + 1, p, q))]
        n = tuple(n)
        if n not in ineqs:
            ineqs.append(n)
    return ConeSystem(d, tuple(ineqs), (True,) * len(ineqs))


def cones_containing(a: Sequence, d: int | None = None, closed: bool = True) -> list[tuple[int, ...]]:
    a = tuple(Fraction(x) for x in a)
    d = len(a) - 1 if d is None else d
    if len(a) != d + 1:
        raise ValueError(f"weight has length {len(a)}, expected {d + 1}")
    return [i for i in cm_sequences(d) if _catalog(d)[i].contains(a, closed=closed)]


_CATALOG: dict[int, dict] = {}


def _catalog(d: int) -> dict:
    if d not in _CATALOG:
        _CATALOG[d] = {i: cone_system(i) for i in cm_sequences(d)}
    return _CATALOG[d]


def in_cm_region(a: Sequence) -> bool:
    return bool(cones_containing(a))


# -- Groebner cones -----------------------------------------------------------

@dataclass(frozen=True)
class GroebnerCone:
    system: ConeSystem
    facets: tuple[Vec, ...]
    interior: tuple[Fraction, ...]

    def facet_system(self) -> ConeSystem:
        return ConeSystem(self.system.d, self.facets)

    def to_json(self) -> dict:
        return {
            "inequalities": [list(n) for n in self.system.inequalities],
            "facets": [list(n) for n in self.facets],
            "interior_weight": [str(x) for x in self.interior],
        }


def gb_inequalities(gb: ReducedGB) -> tuple[Vec, ...]:
    return tuple(g.normal for g in gb.elements)


def groebner_cone(gb: ReducedGB) -> GroebnerCone:
    ineqs = gb_inequalities(gb)
    system = ConeSystem(gb.d, ineqs)
    if gb.d < 2:
        return GroebnerCone(system, (), tuple(Fraction(x) for x in range(gb.d + 1)))
    facets = polyhedra.irredundant(ineqs)
    interior = polyhedra.interior_point(facets)
    return GroebnerCone(system, facets, interior)


def representative(w: Sequence) -> ASequence:
    """An element of ``W_d`` in the same open cells as ``w`` (any sign allowed)."""
    w = [Fraction(x) for x in w]
    m = min(w)
    return normalize([x - m for x in w])


# -- traversal ----------------------------------------------------------------

@dataclass(frozen=True)
class FanCell:
    gb: ReducedGB
    cone: GroebnerCone
    interior_weight: ASequence
    initial_ideal: MonomialIdeal
    depth: int

    @property
    def d(self) -> int:
        return self.gb.d

    @property
    def sequence(self) -> tuple[int, ...] | None:
        """The radical's sequence ``i`` for Cohen-Macaulay cells."""
        if self.depth != 2:
            return None
        return vertex_sequence(self.initial_ideal)

    def to_json(self) -> dict:
        out = {
            "initial_ideal": self.initial_ideal.to_json(),
            "facets": [list(n) for n in self.cone.facets],
            "interior_weight": list(self.interior_weight.a),
            "depth": self.depth,
        }
        if self.sequence is not None:
            out["sequence"] = list(self.sequence)
        return out


def ideal_key(I: MonomialIdeal):
    return tuple(canonical_key(g) for g in I.gens)


def cell_depth(I: MonomialIdeal, weight: ASequence) -> int:
    if I.saturation() != I:
        return 0
    return 2 if deviation(weight) == 0 else 1


def make_cell(gb: ReducedGB) -> FanCell:
    cone = groebner_cone(gb)
    rep = representative(cone.interior)
    I = gb.initial_ideal()
    return FanCell(gb, cone, rep, I, cell_depth(I, rep))


def _integral(w: Sequence[Fraction]) -> tuple[int, ...]:
    """A positive multiple of ``w`` with integer entries."""
    den = 1
    for x in w:
        den = lcm(den, Fraction(x).denominator)
    return tuple(int(x * den) for x in w)


def _idot(n, w) -> int:
    return sum(x * y for x, y in zip(n, w))


def max_d() -> int:
    return int(os.environ.get("RNC_MAX_D", DEFAULT_MAX_D))


def _start_weight(d: int) -> tuple[int, ...]:
    return weight_from_b(range(1, d + 1))


def facet_point(cell: FanCell, facet: Vec) -> tuple[Fraction, tuple[Fraction, ...]]:
    """A relative-interior point of a facet and its minimum slack on the others."""
    others = [n for n in cell.cone.facets if n != facet]
    if not others:
        return Fraction(1), polyhedra.lift([0] * (len(facet) - 2))
    s, wf = polyhedra.max_min_slack(others, equalities=[facet])
    if s is None or s <= 0:
        raise FlipFailure(f"facet {facet} has no relative interior point")
    return s, wf


def flip(cell: FanCell, facet: Vec, tiebreak: str = "lex", point=None) -> ReducedGB:
    """Reduced GB of the cell across ``facet``."""
    s, wf = facet_point(cell, facet) if point is None else point
    others = [n for n in cell.cone.facets if n != facet]
    bound = max([abs(dot(n, facet)) for n in others] + [1])
    eps = s / (2 * bound)
    for _ in range(40):
        w = tuple(x - eps * y for x, y in zip(wf, facet))
        gb = buchberger(cell.d, TermOrder(w, tiebreak), verify=False)
        if gb.initial_ideal() != cell.initial_ideal and all(
            dot(n, wf) >= 0 for n in gb_inequalities(gb)
        ):
            return gb
        eps /= 2
    raise FlipFailure(f"could not cross facet {facet}")


def traverse_fan(d: int, cap: int | None = None, tiebreak: str = "lex") -> list[FanCell]:
    """All maximal cells, found breadth-first by flipping across facets.

    A flip is skipped when an already known cell has the opposite facet and
    contains the facet point: in a fan that cell is the neighbour.
    """
    cap = max_d() if cap is None else cap
    if d > cap:
        raise TraversalCapExceeded(f"d={d} exceeds the traversal cap {cap} (set RNC_MAX_D)")
    if d < 1:
        raise ValueError("d must be positive")
    first = make_cell(buchberger(d, TermOrder(_start_weight(d), tiebreak)))
    cells = {first.initial_ideal: first}
    by_facet: dict[Vec, list[FanCell]] = {}

    def register(cell):
        for n in cell.cone.facets:
            by_facet.setdefault(n, []).append(cell)

    register(first)
    frontier = [first]
    while frontier:
        nxt = []
        for cell in frontier:
            for facet in cell.cone.facets:
                point = facet_point(cell, facet)
                wi = _integral(point[1])
                opposite = tuple(-x for x in facet)
                if any(
                    all(_idot(n, wi) >= 0 for n in c.cone.facets)
                    for c in by_facet.get(opposite, ())
                ):
                    continue
                gb = flip(cell, facet, tiebreak, point)
                I = gb.initial_ideal()
                if I not in cells:
                    new = make_cell(gb)
                    cells[I] = new
                    register(new)
                    nxt.append(new)
        frontier = nxt
    return sorted(cells.values(), key=lambda c: ideal_key(c.initial_ideal))


def depth_census(d: int, cells: Iterable[FanCell] | None = None) -> dict[int, int]:
    cells = traverse_fan(d) if cells is None else cells
    counts = Counter(c.depth for c in cells)
    return {k: counts[k] for k in sorted(counts)}


def sampled_initial_ideals(d: int, samples: int, rng, bound: int = 40) -> set[MonomialIdeal]:
    """Initial ideals at random strictly increasing integer weights."""
    out = set()
    for _ in range(samples):
        b = [rng.randint(1, bound) for _ in range(d)]
        out.add(buchberger(d, TermOrder(weight_from_b(b)), verify=False).initial_ideal())
    return out


# -- big cone and permutations ------------------------------------------------

@dataclass(frozen=True)
class BigCone:
    d: int
    system: ConeSystem
    sequences: tuple[tuple[int, ...], ...]

    @property
    def sequence_count(self) -> int:
        return len(self.sequences)

    def member(self, a: Sequence) -> bool:
        return self.system.contains(a)

    def to_json(self) -> dict:
        return {
            "system": self.system.to_json(),
            "sequence_count": self.sequence_count,
            "fibonacci": fibonacci_f(self.d),
            "sequences": [list(i) for i in self.sequences],
        }


def big_cone(d: int) -> BigCone:
    if d < 1:
        raise ValueError("d must be positive")
    ineqs = []
    for j in range(1, d - 1):
        n = [0] * (d + 1)
        n[j - 1] += 1
        n[j + 2] += 1
        n[j] -= 1
        n[j + 1] -= 1
        ineqs.append(tuple(n))
    seqs = tuple(gap_two_sequences(d))
    if len(seqs) != fibonacci_f(d):
        raise ArithmeticError(f"{len(seqs)} gap-2 sequences but f_{d} = {fibonacci_f(d)}")
    return BigCone(d, ConeSystem(d, tuple(ineqs)), seqs)


def closure_in_big_cone(i: Sequence[int], method: str = "lp") -> bool:
    """Whether the closure of ``C(i)`` satisfies every ``b_j <= b_{j+2}``."""
    i = check_sequence(i)
    d = i[-1]
    system = cone_system(i).inequalities
    implies = polyhedra.lp_implies if method == "lp" else polyhedra.fm_implies
    return all(implies(system, n) for n in big_cone(d).system.inequalities)


def permutation_tools(d: int) -> dict:
    seqs = cm_sequences(d)
    return {
        "d": d,
        "avoider_count": avoider_count(d),
        "bigcone_perm_count": bigcone_perm_count(d),
        "canonical": {",".join(map(str, i)): list(canonical_permutation(i)) for i in seqs},
        "catalan_product": {",".join(map(str, i)): catalan_product(i) for i in gap_two_sequences(d)},
    }


def permutation_cone(sigma: Sequence[int]) -> ConeSystem:
    """Open ``C_sigma``: ``b_{sigma^-1(1)} < ... < b_{sigma^-1(d)}``."""
    d = len(sigma)
    inv = [0] * (d + 1)
    for pos, val in enumerate(sigma, start=1):
        inv[val] = pos
    ineqs = []
    for v in range(1, d):
        lo, hi = inv[v], inv[v + 1]
        n = [0] * (d + 1)
        n[hi] += 1
        n[hi - 1] -= 1
        n[lo] -= 1
        n[lo - 1] += 1
        ineqs.append(tuple(n))
    return ConeSystem(d, tuple(ineqs), (True,) * len(ineqs))
