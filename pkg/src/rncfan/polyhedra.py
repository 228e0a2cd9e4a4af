"""Exact rational polyhedral tools for homogeneous cones.

Every cone here contains the lineality space spanned by ``(1,...,1)`` and
``(0,1,...,d)``, so computations run in the quotient obtained by fixing
``w_0 = w_1 = 0``.  Two independent engines are provided: a dense simplex
with Bland's rule over ``Fraction`` and Fourier-Motzkin elimination.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vec = tuple[int, ...]


class DegenerateCone(ValueError):
    """The strict system has no interior point modulo lineality."""


def primitive(v: Sequence[int]) -> Vec:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return tuple(int(x) // g for x in v) if g else tuple(int(x) for x in v)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def orthogonal_to_lineality(n: Sequence[int]) -> bool:
    return sum(n) == 0 and sum(i * x for i, x in enumerate(n)) == 0


# -- simplex ------------------------------------------------------------------

def simplex_max(c: Sequence, A: Sequence[Sequence], b: Sequence):
    """Maximize ``c.x`` subject to ``A x <= b``, ``x >= 0``, with ``b >= 0``.

    Integer data only.  Returns ``(value, x)`` as Fractions or ``(None, None)``
    when unbounded.  The tableau is kept fraction-free (every entry is its true
    value times the current basis determinant ``D > 0``) and pivoting follows
    Bland's rule so degenerate problems terminate.
    """
    m, n = len(A), len(c)
    if any(x < 0 for x in b):
        raise ValueError("origin must be feasible (b >= 0)")
    width = n + m
    T = []
    for r, row in enumerate(A):
        t = [int(x) for x in row] + [0] * m + [int(b[r])]
        t[n + r] = 1
        T.append(t)
    obj = [-int(x) for x in c] + [0] * (m + 1)
    basis = [n + r for r in range(m)]
    D = 1
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        for r in range(m):
            a = T[r][enter]
            if a > 0:
                if leave is None:
                    leave = r
                    continue
                lhs = T[r][-1] * T[leave][enter]
                rhs = T[leave][-1] * a
                if lhs < rhs or (lhs == rhs and basis[r] < basis[leave]):
                    leave = r
        if leave is None:
            return None, None
        D = _pivot(T, obj, leave, enter, D)
        basis[leave] = enter
    x = [Fraction(0)] * n
    for r, j in enumerate(basis):
        if j < n:
            x[j] = Fraction(T[r][-1], D)
    return Fraction(obj[-1], D), x


def _pivot(T, obj, r, j, D):
    """Integer pivot; Bareiss' theorem makes every division exact."""
    row = T[r]
    p = row[j]
    for other in T + [obj]:
        if other is row:
            continue
        f = other[j]
        if f:
            other[:] = [(p * x - f * y) // D for x, y in zip(other, row)]
        elif p != D:
            other[:] = [(p * x) // D for x in other]
    return p


def lp_free(c: Sequence, A: Sequence[Sequence], b: Sequence):
    """Like :func:`simplex_max` but with free variables (split as ``u - v``)."""
    n = len(c)
    A2 = [list(row) + [-x for x in row] for row in A]
    c2 = list(c) + [-x for x in c]
    value, x = simplex_max(c2, A2, b)
    if value is None:
        return None, None
    return value, [x[i] - x[n + i] for i in range(n)]


# -- cone systems -------------------------------------------------------------

@dataclass(frozen=True)
class ConeSystem:
    """Inequalities ``n . a >= 0`` (or ``> 0`` where ``strict``) on ``a in Q^(d+1)``."""

    d: int
    inequalities: tuple[Vec, ...]
    strict: tuple[bool, ...] = ()

    def __post_init__(self):
        ineqs = tuple(tuple(int(x) for x in n) for n in self.inequalities)
        object.__setattr__(self, "inequalities", ineqs)
        strict = tuple(self.strict) if self.strict else (False,) * len(ineqs)
        if len(strict) != len(ineqs):
            raise ValueError("one strictness flag per inequality")
        object.__setattr__(self, "strict", strict)
        for n in ineqs:
            if len(n) != self.d + 1:
                raise ValueError(f"inequality {n} has wrong length for d={self.d}")
            if not orthogonal_to_lineality(n):
                raise ValueError(f"inequality {n} is not orthogonal to the lineality space")

    def closed(self) -> "ConeSystem":
        return ConeSystem(self.d, self.inequalities)

    def opened(self) -> "ConeSystem":
        return ConeSystem(self.d, self.inequalities, (True,) * len(self.inequalities))

    def contains(self, a: Sequence, closed: bool = True) -> bool:
        for n, s in zip(self.inequalities, self.strict):
            v = dot(n, a)
            if v < 0 or (v == 0 and s and not closed):
                return False
        return True

    def primitive_set(self) -> tuple[Vec, ...]:
        seen = []
        for n in self.inequalities:
            p = primitive(n)
            if any(p) and p not in seen:
                seen.append(p)
        return tuple(seen)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "inequalities": [list(n) for n in self.inequalities],
            "strict": list(self.strict),
        }


def reduced(n: Sequence) -> list:
    """Coordinates of a lineality-orthogonal functional on ``{w_0 = w_1 = 0}``."""
    return list(n[2:])


def lift(x: Sequence) -> tuple[Fraction, ...]:
    return (Fraction(0), Fraction(0)) + tuple(Fraction(v) for v in x)


def _box(k: int):
    rows, rhs = [], []
    for i in range(k):
        e = [0] * k
        e[i] = 1
        rows.append(e)
        rhs.append(1)
        rows.append([-x for x in e])
        rhs.append(1)
    return rows, rhs


def lp_implies(system: Sequence[Vec], target: Vec) -> bool:
    """Whether ``n . w >= 0`` for all ``n`` in ``system`` forces ``target . w >= 0``."""
    if not any(target):
        return True
    k = len(target) - 2
    if k <= 0:
        return True
    rows = [[-x for x in reduced(n)] for n in system]
    rhs = [0] * len(rows)
    brow, brhs = _box(k)
    value, _ = lp_free([-x for x in reduced(target)], rows + brow, rhs + brhs)
    return value == 0


def max_min_slack(system: Sequence[Vec], equalities: Sequence[Vec] = ()):
    """Maximize ``s`` with ``n . w >= s`` for ``n`` in system, equalities held at 0.

    ``w`` is confined to the unit box of the quotient and ``s <= 1``.
    Returns ``(s, w)`` with ``w`` lifted to full coordinates.
    """
    k = len(system[0]) - 2 if system else len(equalities[0]) - 2
    rows, rhs = [], []
    for n in system:
        rows.append([-x for x in reduced(n)] + [1])
        rhs.append(0)
    for n in equalities:
        r = reduced(n)
        rows.append(list(r) + [0])
        rhs.append(0)
        rows.append([-x for x in r] + [0])
        rhs.append(0)
    brow, brhs = _box(k)
    rows += [r + [0] for r in brow]
    rhs += brhs
    rows.append([0] * k + [1])
    rhs.append(1)
    value, x = lp_free([0] * k + [1], rows, rhs)
    return value, lift(x[:k])


def irredundant(system: Sequence[Vec], rays: int | None = None) -> tuple[Vec, ...]:
    """Facet normals of the full-dimensional cone ``{n . w >= 0}`` (primitive, deduplicated).

    Rays shot from an interior point certify most facets cheaply: the first
    hyperplane a ray meets, if it is met alone, supports a facet.  A remaining
    candidate implied by the facets found so far is redundant; anything still
    undecided gets the full implication test against all other inequalities.
    """
    ineqs: list[Vec] = []
    for n in system:
        p = primitive(n)
        if any(p) and p not in ineqs:
            ineqs.append(p)
    if len(ineqs) <= 1:
        return tuple(ineqs)
    k = len(ineqs[0]) - 2
    w0 = interior_point(ineqs)
    base = [dot(n, w0) for n in ineqs]
    found: set[int] = set()
    rng = random.Random(len(ineqs) * 7919 + k)
    for _ in range(rays if rays is not None else 4 * len(ineqs)):
        u = (0, 0) + tuple(rng.randint(-20, 20) for _ in range(k))
        best, hit = None, []
        for j, n in enumerate(ineqs):
            rate = dot(n, u)
            if rate < 0:
                t = base[j] / -rate
                if best is None or t < best:
                    best, hit = t, [j]
                elif t == best:
                    hit.append(j)
        if len(hit) == 1:
            found.add(hit[0])
    facets = [ineqs[j] for j in sorted(found)]
    out = []
    for j, n in enumerate(ineqs):
        if j in found:
            out.append(n)
        elif facets and lp_implies(facets, n):
            continue
        elif not lp_implies(ineqs[:j] + ineqs[j + 1:], n):
            out.append(n)
    return tuple(out)


def interior_point(system: Sequence[Vec]) -> tuple[Fraction, ...]:
    s, w = max_min_slack(system)
    if s is None or s <= 0:
        raise DegenerateCone("no interior point modulo lineality")
    return w


def implies_all(system: Sequence[Vec], targets: Iterable[Vec]) -> bool:
    return all(lp_implies(system, t) for t in targets)


def same_cone(a: Sequence[Vec], b: Sequence[Vec]) -> bool:
    return implies_all(a, b) and implies_all(b, a)


# -- Fourier-Motzkin ----------------------------------------------------------

def fm_feasible(rows: Iterable[tuple[Sequence[int], bool]]) -> bool:
    """Decide ``exists w: n.w >= 0 (> 0 if strict)`` for a homogeneous system."""
    current: dict[Vec, bool] = {}
    for n, s in rows:
        p = primitive(n)
        current[p] = current.get(p, False) or s
    if not current:
        return True
    nvar = len(next(iter(current)))
    for k in range(nvar):
        pos = [(n, s) for n, s in current.items() if n[k] > 0]
        neg = [(n, s) for n, s in current.items() if n[k] < 0]
        nxt: dict[Vec, bool] = {n: s for n, s in current.items() if n[k] == 0}
        for p, sp in pos:
            for q, sq in neg:
                comb = primitive([-q[k] * x + p[k] * y for x, y in zip(p, q)])
                nxt[comb] = nxt.get(comb, False) or sp or sq
        current = nxt
    return not any(s and not any(n) for n, s in current.items())


def fm_implies(system: Sequence[Vec], target: Vec, strict_target: bool = False) -> bool:
    """``system`` (closed) implies ``target . w >= 0`` (``> 0`` if strict_target)."""
    rows = [(reduced(n), False) for n in system]
    rows.append(([-x for x in reduced(target)], not strict_target))
    return not fm_feasible(rows)
