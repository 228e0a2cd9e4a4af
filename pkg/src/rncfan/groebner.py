"""Buchberger's algorithm for the rational normal curve ideal P.

Every polynomial met along the way is a pure difference ``t^u - t^v``, so an
element is just a pair of exponent vectors and reduction is a translation
``u -> u - lead + tail``.  Weights are compared exactly and ties are broken
by lex or revlex with ``t_0 > ... > t_d``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from math import gcd
from typing import Sequence

from .tpoly import (
    Exp,
    MonomialIdeal,
    PureBinomial,
    check_fibers,
    degree,
    divides,
    exp_lcm,
    exp_sub,
    exp_add,
    rnc_generators,
    standard_monomials_upto,
    unit_exp,
    weighted_degree,
)

TIEBREAKS = ("lex", "revlex")


class NonPureDifference(ArithmeticError):
    """A reduction left the pure-difference, bihomogeneous world."""


@dataclass(frozen=True)
class TermOrder:
    weight: tuple[Fraction, ...]
    tiebreak: str = "lex"

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.weight)
        object.__setattr__(self, "weight", w)
        if self.tiebreak not in TIEBREAKS:
            raise ValueError(f"tiebreak must be one of {TIEBREAKS}")
        # positive rescaling to integers keeps the order and speeds up keys
        den = 1
        for x in w:
            den = den * x.denominator // gcd(den, x.denominator)
        object.__setattr__(self, "_scaled", tuple(int(x * den) for x in w))

    @property
    def d(self) -> int:
        return len(self.weight) - 1

    def key(self, e: Exp):
        w = sum(x * y for x, y in zip(self._scaled, e))
        if self.tiebreak == "lex":
            return (w, e)
        return (w, tuple(-x for x in reversed(e)))

    def to_json(self) -> dict:
        return {"weight": [str(x) for x in self.weight], "tiebreak": self.tiebreak}


@dataclass(frozen=True)
class ReducedGB:
    elements: tuple[PureBinomial, ...]
    order: TermOrder

    @property
    def d(self) -> int:
        return self.order.d

    @property
    def leads(self) -> tuple[Exp, ...]:
        return tuple(g.lead for g in self.elements)

    @cached_property
    def _initial(self) -> MonomialIdeal:
        return MonomialIdeal(self.d + 1, self.leads)

    def initial_ideal(self) -> MonomialIdeal:
        return self._initial

    def to_json(self) -> list:
        return [g.to_json() for g in self.elements]

    def lines(self) -> list[str]:
        return [str(g) for g in self.elements]


def _strip_gcd(u: Exp, v: Exp) -> tuple[Exp, Exp]:
    common = tuple(min(x, y) for x, y in zip(u, v))
    if any(common):
        return exp_sub(u, common), exp_sub(v, common)
    return u, v


def _orient(order: TermOrder, u: Exp, v: Exp):
    if u == v:
        return None
    return (u, v) if order.key(u) > order.key(v) else (v, u)


def _check(u: Exp, v: Exp) -> None:
    if degree(u) != degree(v) or weighted_degree(u) != weighted_degree(v):
        raise NonPureDifference(f"{u} - {v} is not bihomogeneous")


def _reduce_lead(order: TermOrder, u: Exp, v: Exp, basis):
    """Reduce until the lead is not divisible by any lead in ``basis``."""
    pair = _orient(order, u, v)
    while pair is not None:
        u, v = pair
        for lead, tail in basis:
            if divides(lead, u):
                u = exp_add(exp_sub(u, lead), tail)
                _check(u, v)
                break
        else:
            return pair
        pair = _orient(order, *_strip_gcd(u, v))
    return None


def _reduce_tail(v: Exp, basis) -> Exp:
    changed = True
    while changed:
        changed = False
        for lead, tail in basis:
            if divides(lead, v):
                v = exp_add(exp_sub(v, lead), tail)
                changed = True
                break
    return v


def _coprime(u: Exp, v: Exp) -> bool:
    return not any(x and y for x, y in zip(u, v))


def buchberger(d: int, order: TermOrder, verify: bool = True) -> ReducedGB:
    """Reduced Groebner basis of P for ``order``."""
    if order.d != d:
        raise ValueError(f"weight has length {order.d + 1}, expected {d + 1}")
    basis: list[tuple[Exp, Exp]] = []
    queue: list = []

    def add(pair):
        idx = len(basis)
        basis.append(pair)
        for j in range(idx):
            if _coprime(basis[j][0], pair[0]):
                continue
            l = exp_lcm(basis[j][0], pair[0])
            heapq.heappush(queue, (degree(l), order.key(l), j, idx))

    for g in rnc_generators(d) if d > 1 else []:
        pair = _reduce_lead(order, g.lead, g.tail, basis)
        if pair is not None:
            add(pair)
    while queue:
        _, _, i, j = heapq.heappop(queue)
        (ui, vi), (uj, vj) = basis[i], basis[j]
        l = exp_lcm(ui, uj)
        s = _orient(order, *_strip_gcd(exp_add(exp_sub(l, ui), vi), exp_add(exp_sub(l, uj), vj)))
        if s is None:
            continue
        pair = _reduce_lead(order, s[0], s[1], basis)
        if pair is not None:
            add(pair)

    minimal: list[tuple[Exp, Exp]] = []
    for u, v in sorted(basis, key=lambda p: (degree(p[0]), order.key(p[0]))):
        if not any(divides(m[0], u) for m in minimal):
            minimal.append((u, v))
    elements = []
    for u, v in minimal:
        t = _reduce_tail(v, minimal)
        elements.append(PureBinomial(u, t))
    elements.sort(key=lambda g: (degree(g.lead), tuple(reversed(g.lead))))
    gb = ReducedGB(tuple(elements), order)
    if verify:
        verify_hilbert(gb.initial_ideal(), 3)
    return gb


def verify_hilbert(I: MonomialIdeal, K: int) -> None:
    """``dk + 1`` standard monomials in degree k, one per bidegree, for ``k <= K``."""
    levels = standard_monomials_upto(I, K)
    for k in range(1, K + 1):
        check_fibers(levels[k], k, I.d)


@dataclass(frozen=True)
class InitialForms:
    """Generators of ``in_w(P)``: monomials where the weight is strict, binomials on ties."""

    monomials: tuple[Exp, ...]
    binomials: tuple[PureBinomial, ...]
    gb: ReducedGB

    @property
    def is_monomial(self) -> bool:
        return not self.binomials

    def monomial_ideal(self) -> MonomialIdeal:
        if not self.is_monomial:
            raise ValueError("initial ideal is not monomial")
        return MonomialIdeal(self.gb.d + 1, self.monomials)

    def lines(self) -> list[str]:
        from .tpoly import render_monomial

        return [render_monomial(m) for m in self.monomials] + [str(b) for b in self.binomials]

    def to_json(self) -> dict:
        return {
            "monomials": [list(m) for m in self.monomials],
            "binomials": [b.to_json() for b in self.binomials],
            "is_monomial": self.is_monomial,
        }


def initial_forms(d: int, w: Sequence, tiebreak: str = "lex") -> InitialForms:
    order = TermOrder(tuple(w), tiebreak)
    gb = buchberger(d, order)
    monos, binos = [], []
    for g in gb.elements:
        wl = sum(x * y for x, y in zip(order.weight, g.lead))
        wt = sum(x * y for x, y in zip(order.weight, g.tail))
        if wl > wt:
            monos.append(g.lead)
        else:
            binos.append(g)
    return InitialForms(tuple(monos), tuple(binos), gb)


def initial_ideal_refined(forms: InitialForms, tiebreak: str = "lex") -> MonomialIdeal:
    """``in_tau(in_w(P))`` computed from the initial forms alone.

    Buchberger runs on the mixed set of monomials and binomials with the bare
    tiebreak order.  A monomial is stored with tail ``None``.
    """
    d = forms.gb.d
    order = TermOrder((0,) * (d + 1), tiebreak)
    elements: list[tuple[Exp, Exp | None]] = []
    pending = [(m, None) for m in forms.monomials] + [(b.lead, b.tail) for b in forms.binomials]
    while pending:
        r = _reduce_mixed(order, *pending.pop(), elements)
        if r is None:
            continue
        for e in elements:
            if _coprime(e[0], r[0]) or (e[1] is None and r[1] is None):
                continue
            l = exp_lcm(e[0], r[0])
            se = exp_add(exp_sub(l, e[0]), e[1]) if e[1] is not None else None
            sr = exp_add(exp_sub(l, r[0]), r[1]) if r[1] is not None else None
            pending.append((se, sr) if se is not None else (sr, None))
        elements.append(r)
    return MonomialIdeal(d + 1, tuple(u for u, _ in elements))


def _reduce_mixed(order, u, v, elements):
    while True:
        if v is not None:
            pair = _orient(order, u, v)
            if pair is None:
                return None
            u, v = pair
        for lu, lv in elements:
            if divides(lu, u):
                if lv is None:
                    if v is None:
                        return None
                    u, v = v, None
                else:
                    u = exp_add(exp_sub(u, lu), lv)
                break
        else:
            return (u, v)


def cm_reduced_gb(i: Sequence[int], verify: bool = False) -> ReducedGB:
    """Closed-form reduced GB of the Cohen-Macaulay initial ideal for ``i``.

    For each pair ``s <= r`` with ``2 i_v <= s + r <= i_v + i_{v+1}`` the element
    is ``t_s t_r - t_{i_v} t_{s+r-i_v}``; with ``i_v + i_{v+1} <= s + r <= 2 i_{v+1}``
    it is ``t_s t_r - t_{i_{v+1}} t_{s+r-i_{v+1}}``.  Tautologies are skipped.
    """
    from .combinatorics import canonical_permutation, check_sequence, weight_from_b

    i = check_sequence(i)
    d = i[-1]
    n = d + 1
    elements: dict[Exp, PureBinomial] = {}
    for lead, tail in _cm_pairs(i):
        g = PureBinomial(unit_exp(n, *lead), unit_exp(n, *tail))
        elements.setdefault(g.lead, g)
    weight = weight_from_b(canonical_permutation(i))
    order = TermOrder(weight, "lex")
    gb = ReducedGB(
        tuple(sorted(elements.values(), key=lambda g: (degree(g.lead), tuple(reversed(g.lead))))),
        order,
    )
    if verify:
        ref = buchberger(d, order)
        if set(ref.elements) != set(gb.elements):
            raise ArithmeticError(f"closed form disagrees with Buchberger for {i}")
    return gb


def _cm_pairs(i: Sequence[int]):
    """``((s, r), tail)`` index pairs of the closed-form GB / cone inequalities."""
    d = i[-1]
    for v in range(len(i) - 1):
        lo, hi = i[v], i[v + 1]
        for s in range(d + 1):
            for r in range(s, d + 1):
                j = s + r
                for anchor, ok in ((lo, 2 * lo <= j <= lo + hi), (hi, lo + hi <= j <= 2 * hi)):
                    if not ok:
                        continue
                    tail = tuple(sorted((anchor, j - anchor)))
                    if tail != (s, r):
                        yield (s, r), tail
