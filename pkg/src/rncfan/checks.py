"""Acceptance checks shared by ``rncfan selftest`` and the test suite.

Each check returns a :class:`CheckResult`; a check passes only if its
mathematical assertions hold and it finishes inside its time budget.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from . import fan, polyhedra
from .combinatorics import (
    avoider_count,
    avoiders,
    bigcone_perm_count,
    bigcone_permutations,
    catalan_product,
    cm_sequences,
    fibonacci_f,
    gap_two_sequences,
    weight_from_b,
)
from .groebner import TermOrder, buchberger, cm_reduced_gb
from .hilbsym import LinearForm, compare_invariants, h1_form, symbolic_h, symbolic_invariants
from .tpoly import MonomialIdeal, PureBinomial, ideal_components, parse_monomial
from .xy_ideals import deviation, hilbert_h1, minplus_product, zariski_product_cm


@dataclass
class CheckResult:
    number: int
    title: str
    passed: bool
    seconds: float
    limit: float
    detail: list[str] = field(default_factory=list)

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] {self.number:2d}. {self.title} ({self.seconds:.2f}s, limit {self.limit:g}s)"

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "title": self.title,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "limit": self.limit,
            "detail": self.detail,
        }


def b_normal(d: int, coeffs: dict[int, int]) -> tuple[int, ...]:
    """Turn ``sum c_j b_j >= 0`` into an inequality on ``a``."""
    n = [0] * (d + 1)
    for j, c in coeffs.items():
        n[j] += c
        n[j - 1] -= c
    return tuple(n)


def b_le(d: int, p: int, q: int) -> tuple[int, ...]:
    """``b_p <= b_q``."""
    return b_normal(d, {q: 1, p: -1})


def _ideal(text: str, d: int) -> MonomialIdeal:
    return MonomialIdeal.parse(text, d)


def _binomial(text: str, d: int) -> PureBinomial:
    lead, tail = text.split("-")
    return PureBinomial(parse_monomial(lead.strip(), d + 1), parse_monomial(tail.strip(), d + 1))


# -- golden data --------------------------------------------------------------

D3_CELLS = {
    "a": ("t1*t3;t0*t3;t0*t2", [b_le(3, 1, 2), b_le(3, 2, 3)],
          [(1, 1, 1, 1), (0, 1, 1, 0)]),
    "b": ("t1*t3;t0*t3;t1^2", [b_le(3, 2, 1), b_le(3, 1, 3)],
          [(1, 1, 1, 1), (1, -1, 2, 0)]),
    "c": ("t2^2;t0*t3;t0*t2", [b_le(3, 1, 3), b_le(3, 3, 2)],
          [(1, 1, 1, 1), (0, 2, -1, 1)]),
    "d": ("t2^2;t1*t2;t1^2", [b_le(3, 3, 2), b_le(3, 2, 1)],
          [(1, 1, 1, 1), (2, -1, -1, 2)]),
    "e": ("t2^2;t1*t2;t0*t2;t0^2*t3",
          [b_le(3, 3, 1), b_le(3, 1, 2), b_normal(3, {3: 1, 2: 1, 1: -2})],
          [(1, 1, 1, 1), (1, 1, -2, 2), (-1, 1, 1, -1)]),
    "f": ("t1*t3;t1*t2;t1^2;t0*t3^2",
          [b_le(3, 2, 3), b_le(3, 3, 1), b_normal(3, {3: 2, 1: -1, 2: -1})],
          [(1, 1, 1, 1), (2, -2, 1, 1), (-1, 1, 1, -1)]),
    "g": ("t1*t3;t1*t2;t1^2;t2^3",
          [b_le(3, 2, 3), b_le(3, 3, 1), b_normal(3, {1: 1, 2: 1, 3: -2})],
          [(1, 1, 1, 1), (2, -2, 1, 1), (0, 1, -2, 1)]),
    "h": ("t2^2;t1*t2;t0*t2;t1^3",
          [b_le(3, 3, 1), b_le(3, 1, 2), b_normal(3, {1: 2, 3: -1, 2: -1})],
          [(1, 1, 1, 1), (1, 1, -2, 2), (1, -2, 1, 0)]),
}

D6_WEIGHT = (0, 3, 5, 6, 10, 16, 21)
D6_GB = (
    "t1^2 - t0*t2", "t1*t2 - t0*t3", "t2^2 - t1*t3", "t0*t4 - t1*t3", "t0*t5 - t2*t3",
    "t1*t4 - t2*t3", "t0*t6 - t3^2", "t1*t5 - t3^2", "t2*t4 - t3^2", "t1*t6 - t3*t4",
    "t2*t5 - t3*t4", "t2*t6 - t4^2", "t3*t5 - t4^2", "t3*t6 - t4*t5", "t5^2 - t4*t6",
)
D6_STARRED = (
    (-1, 2, -1, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0),
    (1, -1, 0, -1, 1, 0, 0),
    (0, 0, 0, 1, -1, -1, 1),
    (0, 0, 0, 0, -1, 2, -1),
)
D6_SIGMA = (3, 2, 1, 4, 6, 5)

D4_I = "t1*t3;t1*t2;t0*t2;t3^3;t1^2*t4;t1^3;t2*t4;t2*t3;t2^2"
D4_J = "t1*t3;t1*t2;t1^2;t3^3;t2*t4;t2*t3;t2^2"
D4_FORMS = {
    "I": {"e0": (4, 0, 0, 0, 4), "e1": (3, -1, 0, -3, 4), "e2": (-1, 2, 0, -2, 1)},
    "J": {"e0": (4, 0, 0, 0, 4), "e1": (3, -1, 0, -3, 4), "e2": (0, 0, 1, -2, 1)},
}
D4_I_SAT = "t2;t1*t3;t1^2*t4;t3^3;t1^3"
D4_TOP = "t1*t3;t2;t3^3;t1^2"


# -- criteria -----------------------------------------------------------------

def check_fan_census(detail: list[str]) -> bool:
    ok = True
    expected = {2: 2, 3: 8, 4: 42}
    censuses = {3: {1: 4, 2: 4}, 4: {0: 10, 1: 24, 2: 8}}
    for d, count in expected.items():
        cells = fan.traverse_fan(d)
        census = fan.depth_census(d, cells)
        detail.append(f"d={d}: {len(cells)} cells, census {census}")
        ok &= len(cells) == count
        if d in censuses:
            ok &= census == censuses[d]
    return ok


def _catalog_ideals(d: int) -> set[MonomialIdeal]:
    return {cm_reduced_gb(i).initial_ideal() for i in cm_sequences(d)}


def sampled_cm_ideals(d: int, extra: int, seed: int) -> set[MonomialIdeal]:
    """CM initial ideals met at sampled generic weights.

    Every permutation ordering of ``b`` is visited (slightly perturbed so the
    weight is generic), which reaches each permutation cone, plus ``extra``
    uniformly random weights.
    """
    from itertools import permutations

    rng = random.Random(seed)
    weights = []
    for sigma in permutations(range(1, d + 1)):
        weights.append(weight_from_b([100 * s + rng.randint(0, 9) for s in sigma]))
    for _ in range(extra):
        weights.append(weight_from_b([rng.randint(1, 1000) for _ in range(d)]))
    seen: dict[MonomialIdeal, bool] = {}
    for w in weights:
        gb = buchberger(d, TermOrder(w), verify=False)
        I = gb.initial_ideal()
        if I in seen:
            continue
        if ideal_components(I).saturation != I:
            seen[I] = False
        else:
            seen[I] = fan.make_cell(gb).depth == 2
    return {I for I, cm in seen.items() if cm}


def check_cm_catalog(detail: list[str]) -> bool:
    """Full traversal for every d within the traversal cap, sampling beyond it."""
    ok = True
    for d in range(2, 7):
        catalog = _catalog_ideals(d)
        ok &= len(catalog) == 2 ** (d - 1)
        if d <= fan.max_d():
            cells = fan.traverse_fan(d)
            found = {c.initial_ideal for c in cells if c.depth == 2}
            how = f"traversal of {len(cells)} cells"
        else:
            found = sampled_cm_ideals(d, extra=2000, seed=6)
            how = "sampled weights (every permutation order plus 2000 random)"
        same = found == catalog
        detail.append(f"d={d}: {len(found)} CM cells by {how}, catalog {len(catalog)}, equal={same}")
        ok &= same
    return ok


def check_golden_d6(detail: list[str]) -> bool:
    gb = buchberger(6, TermOrder(D6_WEIGHT))
    golden = {_binomial(t, 6) for t in D6_GB}
    same_gb = set(gb.elements) == golden and len(gb.elements) == 15
    cone = fan.groebner_cone(gb)
    facets = set(cone.facets) == set(D6_STARRED)
    perm = fan.permutation_cone(D6_SIGMA)
    same_cone = polyhedra.same_cone(cone.facets, perm.inequalities)
    revlex = set(buchberger(6, TermOrder(D6_WEIGHT, "revlex")).elements) == golden
    detail.append(f"15 elements match: {same_gb}; revlex agrees: {revlex}")
    detail.append(f"facets = starred five: {facets}; equals C_sigma for sigma={D6_SIGMA}: {same_cone}")
    return same_gb and facets and same_cone and revlex


def check_golden_d3(detail: list[str]) -> bool:
    cells = {c.initial_ideal: c for c in fan.traverse_fan(3)}
    ok = len(cells) == 8
    for label, (text, b_ineqs, h) in D3_CELLS.items():
        I = _ideal(text, 3)
        cell = cells.get(I)
        if cell is None:
            detail.append(f"({label}) ideal not found among cells")
            ok = False
            continue
        h_ok = symbolic_h(I).h == tuple(LinearForm(f) for f in h)
        cone_ok = polyhedra.same_cone(cell.cone.facets, b_ineqs)
        detail.append(f"({label}) h-forms {h_ok}, facet system {cone_ok}")
        ok &= h_ok and cone_ok
    return ok


def check_golden_d4(detail: list[str]) -> bool:
    I, J = _ideal(D4_I, 4), _ideal(D4_J, 4)
    ok = True
    for name, X in (("I", I), ("J", J)):
        inv = symbolic_invariants(X)
        match = all(inv[k] == LinearForm(v) for k, v in D4_FORMS[name].items())
        detail.append(f"{name}: " + ", ".join(f"{k}={v}" for k, v in inv.items()) + f" match={match}")
        ok &= match
    ci, cj = ideal_components(I), ideal_components(J)
    comps = (
        ci.saturation == _ideal(D4_I_SAT, 4)
        and cj.saturation == J
        and ci.top == cj.top == _ideal(D4_TOP, 4)
    )
    cmp = compare_invariants(I, J)
    detail.append(f"I^sat, J^sat = J, I^top = J^top as printed: {comps}")
    detail.append(f"Q equal: {cmp.Q_equal}, Q1 equal: {cmp.Q1_equal}")
    return ok and comps and cmp.Q_equal and not cmp.Q1_equal


def check_deviation_cones(detail: list[str], trials: int = 500, seed: int = 7) -> bool:
    rng = random.Random(seed)
    agree = cm = 0
    for _ in range(trials):
        d = rng.randint(2, 6)
        a = sorted(rng.sample(range(1, 31), d))
        a = (0, *a)
        lhs = deviation(a) == 0
        rhs = bool(fan.cones_containing(a, d, closed=True))
        cm += lhs
        if lhs == rhs:
            agree += 1
        else:
            detail.append(f"disagreement at a={a}: deviation-zero={lhs}, in a closure={rhs}")
    detail.append(f"{agree}/{trials} agree ({cm} with deviation 0)")
    return agree == trials


def brute_h1(a, k: int) -> int:
    """``dim R/I^(k+1)`` by minimizing over every way to split each exponent."""
    d = len(a) - 1
    best: dict[int, int] = {}
    for js in product(range(d + 1), repeat=k + 1):
        i = sum(js)
        v = sum(a[j] for j in js)
        if i not in best or v < best[i]:
            best[i] = v
    return sum(best.values())


def check_oracles(detail: list[str], trials: int = 100, seed: int = 11) -> bool:
    rng = random.Random(seed)
    ok, forms = True, 0
    for _ in range(trials):
        d = rng.randint(1, 4)
        k = rng.randint(0, 3)
        strict = rng.random() < 0.6
        if strict:
            a = (0, *sorted(rng.sample(range(1, 25), d)))
        else:
            a = (0, *sorted(rng.randint(0, 12) for _ in range(d)))
        dp = hilbert_h1(a, k)
        if dp != brute_h1(a, k):
            detail.append(f"DP {dp} differs from brute force at a={a}, k={k}")
            ok = False
        if strict:
            I = buchberger(d, TermOrder(a)).initial_ideal()
            if h1_form(I, k)(a) != dp:
                detail.append(f"standard-monomial form differs at a={a}, k={k}")
                ok = False
            forms += 1
    detail.append(f"{trials} DP/brute-force comparisons, {forms} standard-monomial comparisons")
    return ok


def _big_cone_sample(d: int, rng) -> tuple[int, ...]:
    odd = sorted(rng.randint(1, 6) for _ in range((d + 1) // 2))
    even = sorted(rng.randint(1, 6) for _ in range(d // 2))
    b = [odd[j // 2] if j % 2 == 0 else even[j // 2] for j in range(d)]
    return weight_from_b(b)


def check_big_cone(detail: list[str], samples: int = 200, seed: int = 13) -> bool:
    ok = True
    for d in range(3, 11):
        ok &= len(gap_two_sequences(d)) == fibonacci_f(d) == fan.big_cone(d).sequence_count
    detail.append("gap-2 counts equal f_d for d=3..10: " + str(ok))
    rng = random.Random(seed)
    for d in range(3, 6):
        big = fan.big_cone(d)
        lp = all(fan.closure_in_big_cone(i, "lp") for i in big.sequences)
        fm = all(fan.closure_in_big_cone(i, "fm") for i in big.sequences)
        closures = [fan.cone_system(i) for i in big.sequences]
        landed = 0
        for _ in range(samples):
            a = _big_cone_sample(d, rng)
            assert big.member(a)
            landed += any(c.contains(a, closed=True) for c in closures)
        detail.append(f"d={d}: closures inside (LP {lp}, FM {fm}); {landed}/{samples} samples in a closure")
        ok &= lp and fm and landed == samples
    return ok


def check_permutations(detail: list[str]) -> bool:
    ok = True
    for d in range(1, 8):
        ok &= len(avoiders(d)) == avoider_count(d) == 2 ** (d - 1)
        ok &= len(bigcone_permutations(d)) == bigcone_perm_count(d)
    value = catalan_product((0, 2, 3, 5, 7, 9, 10, 12, 14))
    detail.append(f"counts match brute force for d<=7: {ok}; catalan product {value}")
    return ok and value == 10


def check_products(detail: list[str]) -> bool:
    prod = minplus_product((0, 4, 6, 7), (0, 2))
    dev = deviation(prod)
    z = zariski_product_cm([(0, 4, 6, 7), (0, 2)])
    detail.append(f"product {prod.a}, deviation {dev}, independent-direction CM {z}")
    return prod.a == (0, 2, 6, 7, 9) and dev == 2 and z


def check_pairwise_invariants(detail: list[str]) -> bool:
    cells = fan.traverse_fan(4)
    cache: dict = {}
    bad = {"h": 0, "e0": 0, "Q1": 0}
    agree = 0
    for c1 in cells:
        for c2 in cells:
            r = compare_invariants(c1.initial_ideal, c2.initial_ideal, cache)
            bad["h"] += r.h_equal != r.ideal_equal
            bad["e0"] += r.e0_equal != r.radical_equal
            bad["Q1"] += r.Q1_equal != r.sat_equal
            agree += r.toppo_consistent
    n = len(cells) ** 2
    detail.append(f"{n} pairs; violations {bad}")
    detail.append(f"Q equality agrees with top equality on {agree}/{n} pairs (evidence only)")
    return len(cells) == 42 and not any(bad.values())


CRITERIA: list[tuple[int, str, float, Callable[[list[str]], bool]]] = [
    (1, "fan censuses for d=2,3,4", 30, check_fan_census),
    (2, "CM catalog equals depth-2 cells for d=2..6", 120, check_cm_catalog),
    (3, "d=6 golden reduced GB and facets", 1, check_golden_d6),
    (4, "d=3 golden h-forms and facet systems", 5, check_golden_d3),
    (5, "d=4 golden pair invariants and components", 5, check_golden_d4),
    (6, "deviation zero iff in a CM cone closure", 30, check_deviation_cones),
    (7, "min-plus DP against brute force and standard monomials", 30, check_oracles),
    (8, "big cone: Fibonacci count and closure containment", 30, check_big_cone),
    (9, "permutation counts and Catalan product", 10, check_permutations),
    (10, "product counterexample suite", 1, check_products),
    (11, "exhaustive d=4 pairwise invariant equivalences", 120, check_pairwise_invariants),
]


def run_check(number: int) -> CheckResult:
    for n, title, limit, fn in CRITERIA:
        if n == number:
            detail: list[str] = []
            start = time.perf_counter()
            try:
                ok = fn(detail)
            except Exception as exc:  # a crash is a failed criterion, reported
                detail.append(f"error: {type(exc).__name__}: {exc}")
                ok = False
            seconds = time.perf_counter() - start
            if seconds > limit:
                detail.append(f"over time budget: {seconds:.2f}s > {limit:g}s")
            return CheckResult(n, title, ok and seconds <= limit, seconds, limit, detail)
    raise KeyError(f"no criterion {number}")


def run_all(numbers=None) -> list[CheckResult]:
    numbers = [n for n, *_ in CRITERIA] if numbers is None else numbers
    return [run_check(n) for n in numbers]
