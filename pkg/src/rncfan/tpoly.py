"""Monomials, pure binomials and monomial ideals in K[t_0, ..., t_d].

Exponent vectors are plain tuples of ints.  Monomial ideals are kept in a
canonical minimal form so they can be hashed and compared directly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

Exp = tuple[int, ...]


# -- exponent vectors ---------------------------------------------------------

def degree(e: Exp) -> int:
    return sum(e)


def weighted_degree(e: Exp) -> int:
    """Second grading ``(0,1,...,d) . e``."""
    return sum(i * x for i, x in enumerate(e))


def divides(u: Exp, v: Exp) -> bool:
    return all(x <= y for x, y in zip(u, v))


def exp_lcm(u: Exp, v: Exp) -> Exp:
    return tuple(max(x, y) for x, y in zip(u, v))


def exp_add(u: Exp, v: Exp) -> Exp:
    return tuple(x + y for x, y in zip(u, v))


def exp_sub(u: Exp, v: Exp) -> Exp:
    return tuple(x - y for x, y in zip(u, v))


def unit_exp(n: int, *idx: int) -> Exp:
    e = [0] * n
    for i in idx:
        e[i] += 1
    return tuple(e)


def canonical_key(e: Exp):
    return (sum(e), tuple(reversed(e)))


def render_monomial(e: Exp) -> str:
    parts = []
    for i, x in enumerate(e):
        if x == 1:
            parts.append(f"t{i}")
        elif x > 1:
            parts.append(f"t{i}^{x}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^t(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, nvars: int) -> Exp:
    """Parse ``"t0*t2"``, ``"t1^2"`` or the exponent form ``"[1,0,1]"``."""
    text = text.strip()
    if text.startswith("["):
        e = tuple(int(x) for x in text.strip("[]").split(","))
        if len(e) != nvars:
            raise ValueError(f"exponent vector {text} has wrong length for {nvars} variables")
        return e
    e = [0] * nvars
    if text == "1":
        return tuple(e)
    for factor in text.replace(" ", "").split("*"):
        m = _FACTOR.match(factor)
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        i, p = int(m.group(1)), int(m.group(2) or 1)
        if i >= nvars:
            raise ValueError(f"variable t{i} out of range for d={nvars - 1}")
        e[i] += p
    return tuple(e)


# -- pure binomials -----------------------------------------------------------

@dataclass(frozen=True)
class PureBinomial:
    """``t^lead - t^tail``, homogeneous for both gradings of P."""

    lead: Exp
    tail: Exp

    def __post_init__(self):
        if self.lead == self.tail:
            raise ValueError("lead and tail must differ")
        if len(self.lead) != len(self.tail):
            raise ValueError("exponent vectors of different lengths")
        if degree(self.lead) != degree(self.tail) or weighted_degree(self.lead) != weighted_degree(self.tail):
            raise ValueError(f"{self} is not bihomogeneous")

    @property
    def normal(self) -> tuple[int, ...]:
        return exp_sub(self.lead, self.tail)

    def __str__(self):
        return f"{render_monomial(self.lead)} - {render_monomial(self.tail)}"

    def to_json(self) -> dict:
        return {"lead": list(self.lead), "tail": list(self.tail)}


def rnc_generators(d: int) -> list[PureBinomial]:
    """The 2-minors ``t_{v-1} t_r - t_v t_{r-1}`` (1 <= v < r <= d) of T_d."""
    if d < 1:
        raise ValueError("d must be positive")
    n = d + 1
    return [
        PureBinomial(unit_exp(n, v - 1, r), unit_exp(n, v, r - 1))
        for v in range(1, d + 1)
        for r in range(v + 1, d + 1)
    ]


# -- monomial ideals ----------------------------------------------------------

def minimalize(gens: Iterable[Exp]) -> tuple[Exp, ...]:
    gens = sorted(set(gens), key=canonical_key)
    out: list[Exp] = []
    for g in gens:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple[Exp, ...] = field(default=())

    def __post_init__(self):
        for g in self.gens:
            if len(g) != self.nvars:
                raise ValueError(f"generator {g} has wrong length for {self.nvars} variables")
        object.__setattr__(self, "gens", minimalize(tuple(int(x) for x in g) for g in self.gens))

    @classmethod
    def parse(cls, text: str, d: int) -> "MonomialIdeal":
        """Semicolon separated monomials, e.g. ``"t0*t2;t1^2"``."""
        parts = [p for p in text.split(";") if p.strip()]
        return cls(d + 1, tuple(parse_monomial(p, d + 1) for p in parts))

    @property
    def d(self) -> int:
        return self.nvars - 1

    def __contains__(self, e: Exp) -> bool:
        return any(divides(g, e) for g in self.gens)

    def __str__(self):
        return "(" + ", ".join(render_monomial(g) for g in self.gens) + ")"

    def to_json(self) -> list:
        return [list(g) for g in self.gens]

    def text(self) -> str:
        return ";".join(render_monomial(g) for g in self.gens)

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(g in other for g in self.gens)

    def colon_var_power(self, i: int) -> "MonomialIdeal":
        """``I : t_i^infinity``."""
        return MonomialIdeal(self.nvars, tuple(g[:i] + (0,) + g[i + 1:] for g in self.gens))

    def radical(self) -> "MonomialIdeal":
        return MonomialIdeal(self.nvars, tuple(tuple(min(x, 1) for x in g) for g in self.gens))

    def saturation(self) -> "MonomialIdeal":
        """``I : m^infinity`` as the intersection of the ``I : t_i^infinity``."""
        return intersect([self.colon_var_power(i) for i in range(self.nvars)], self.nvars)

    def dim(self) -> int:
        """Krull dimension of ``S/I``: largest coordinate set containing no generator support."""
        if self.is_unit():
            return -1
        supports = [frozenset(i for i, x in enumerate(g) if x) for g in self.gens]
        for size in range(self.nvars, -1, -1):
            for subset in combinations(range(self.nvars), size):
                s = frozenset(subset)
                if not any(sup <= s for sup in supports):
                    return size
        return 0


def intersect(ideals: Sequence[MonomialIdeal], nvars: int) -> MonomialIdeal:
    if not ideals:
        return MonomialIdeal(nvars, (unit_exp(nvars),))
    gens = ideals[0].gens
    for other in ideals[1:]:
        gens = minimalize(exp_lcm(g, h) for g in gens for h in other.gens)
    return MonomialIdeal(nvars, gens)


@lru_cache(maxsize=None)
def _irreducible(gens: tuple[Exp, ...]) -> frozenset:
    for g in gens:
        support = [i for i, x in enumerate(g) if x]
        if len(support) > 1:
            i = support[0]
            power = tuple(g[i] if j == i else 0 for j in range(len(g)))
            rest = g[:i] + (0,) + g[i + 1:]
            return _irreducible(minimalize(gens + (power,))) | _irreducible(minimalize(gens + (rest,)))
    return frozenset([gens])


def irreducible_components(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Irredundant decomposition into ideals generated by pure powers."""
    if not I.gens:
        return [I]
    comps = [MonomialIdeal(I.nvars, c) for c in _irreducible(I.gens)]
    keep = [
        c for c in comps
        if not any(o != c and o.issubset(c) for o in comps)
    ]
    return sorted(set(keep), key=lambda c: [canonical_key(g) for g in c.gens])


def component_dim(Q: MonomialIdeal) -> int:
    return Q.nvars - len(Q.gens)


@dataclass(frozen=True)
class Components:
    radical: MonomialIdeal
    saturation: MonomialIdeal
    top: MonomialIdeal
    dim: int
    irreducible: tuple[MonomialIdeal, ...]

    def to_json(self) -> dict:
        return {
            "radical": self.radical.to_json(),
            "saturation": self.saturation.to_json(),
            "top": self.top.to_json(),
            "dim": self.dim,
            "irreducible": [c.to_json() for c in self.irreducible],
        }


def ideal_components(I: MonomialIdeal) -> Components:
    comps = irreducible_components(I)
    dim = I.dim()
    top = intersect([c for c in comps if component_dim(c) == dim], I.nvars)
    return Components(I.radical(), I.saturation(), top, dim, tuple(comps))


def vertex_sequence(I: MonomialIdeal) -> tuple[int, ...]:
    """Indices ``j`` with no power of ``t_j`` in ``I``."""
    rad = I.radical()
    return tuple(j for j in range(I.nvars) if unit_exp(I.nvars, j) not in rad)


# -- standard monomials -------------------------------------------------------

class FiberViolation(ValueError):
    """Some bidegree does not carry exactly one standard monomial."""


def standard_monomials_upto(I: MonomialIdeal, K: int) -> list[list[Exp]]:
    """Standard monomials of ``S/I`` grouped by degree ``0..K``.

    Depth-first over nondecreasing index words; a branch stops as soon as the
    prefix lies in ``I`` since every divisor of a standard monomial is standard.
    """
    n = I.nvars
    out: list[list[Exp]] = [[] for _ in range(K + 1)]
    stack = [(unit_exp(n), 0, 0)]
    while stack:
        e, deg, first = stack.pop()
        out[deg].append(e)
        if deg == K:
            continue
        for i in range(first, n):
            f = e[:i] + (e[i] + 1,) + e[i + 1:]
            if f not in I:
                stack.append((f, deg + 1, i))
    for level in out:
        level.sort(key=canonical_key)
    return out


def check_fibers(monomials: Sequence[Exp], k: int, d: int) -> None:
    """Exactly one standard monomial in each bidegree ``(k, v)``, ``0 <= v <= kd``."""
    seen: dict[int, int] = {}
    for e in monomials:
        v = weighted_degree(e)
        seen[v] = seen.get(v, 0) + 1
    for v in range(k * d + 1):
        if seen.get(v, 0) != 1:
            raise FiberViolation(f"degree {k}: {seen.get(v, 0)} standard monomials of weight {v}")
    if len(monomials) != k * d + 1:
        raise FiberViolation(f"degree {k}: {len(monomials)} standard monomials, expected {k * d + 1}")


def standard_monomials(I: MonomialIdeal, k: int, check: bool = True) -> tuple[list[Exp], Exp]:
    """Degree-k monomials outside ``I`` and their componentwise sum."""
    mons = standard_monomials_upto(I, k)[k]
    if check:
        check_fibers(mons, k, I.d)
    msum = tuple(sum(col) for col in zip(*mons)) if mons else unit_exp(I.nvars)
    return mons, msum


# -- I(G, phi) ----------------------------------------------------------------

class NotIGPhi(ValueError):
    """Raised by :func:`igphi_recognize`; ``reason`` is a stable code."""

    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


Edge = tuple[int, int]


@dataclass(frozen=True)
class StructureData:
    """Vertex variables ``V``, square variables ``Q``, tree ``edges`` on V and ``phi: Q -> edges``."""

    V: tuple[int, ...]
    Q: tuple[int, ...]
    edges: tuple[Edge, ...]
    phi: tuple[tuple[int, Edge], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(tuple(sorted(e)) for e in self.edges)))
        object.__setattr__(self, "phi", tuple(sorted((q, tuple(sorted(e))) for q, e in dict(self.phi).items())))

    @property
    def phi_map(self) -> dict[int, Edge]:
        return dict(self.phi)

    def to_json(self) -> dict:
        return {
            "V": list(self.V),
            "Q": list(self.Q),
            "edges": [list(e) for e in self.edges],
            "phi": {str(q): list(e) for q, e in self.phi},
        }


def is_tree(V: Sequence[int], edges: Sequence[Edge]) -> bool:
    if not V or len(edges) != len(V) - 1:
        return False
    parent = {v: v for v in V}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in edges:
        if x not in parent or y not in parent:
            return False
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[rx] = ry
    return True


def igphi_build(s: StructureData, nvars: int | None = None) -> MonomialIdeal:
    """``I(G, phi) = J + H``.

    ``J`` is generated by the non-edges of the tree (a tree has no triangles,
    so no squarefree cubics are needed) and
    ``H = (Q)^2 + (q y : q in Q, y in V, y not in phi(q))``.
    """
    if not is_tree(s.V, s.edges):
        raise ValueError(f"edges {s.edges} do not form a tree on {s.V}")
    phi = s.phi_map
    if set(phi) != set(s.Q):
        raise ValueError("phi must be defined exactly on Q")
    if any(e not in s.edges for e in phi.values()):
        raise ValueError("phi must take values in the edge set")
    n = nvars if nvars is not None else max(s.V + s.Q) + 1
    edges = set(s.edges)
    gens = [unit_exp(n, x, y) for x, y in combinations(sorted(s.V), 2) if (x, y) not in edges]
    Q = sorted(s.Q)
    gens += [unit_exp(n, q, r) for i, q in enumerate(Q) for r in Q[i:]]
    gens += [unit_exp(n, q, y) for q in Q for y in s.V if y not in phi[q]]
    return MonomialIdeal(n, tuple(gens))


def igphi_recognize(I: MonomialIdeal) -> StructureData:
    """Recover ``(G, phi)`` with ``I = I(G, phi)`` or raise :class:`NotIGPhi`."""
    n = I.nvars
    if any(degree(g) != 2 for g in I.gens):
        raise NotIGPhi("not-quadratic", str(I))
    Q = tuple(i for i in range(n) if unit_exp(n, i, i) in I)
    V = tuple(i for i in range(n) if i not in Q)
    edges = tuple((x, y) for x, y in combinations(V, 2) if unit_exp(n, x, y) not in I)
    if not is_tree(V, edges):
        raise NotIGPhi("graph-not-tree", f"V={V} edges={edges}")
    phi = {}
    for q in Q:
        nbrs = tuple(y for y in V if unit_exp(n, q, y) not in I)
        if len(nbrs) != 2 or nbrs not in edges:
            raise NotIGPhi("phi-undefined", f"t{q} misses {nbrs}")
        phi[q] = nbrs
    s = StructureData(V, Q, edges, tuple(phi.items()))
    if igphi_build(s, n) != I:
        raise NotIGPhi("reconstruction-mismatch", str(I))
    return s


def is_igphi(I: MonomialIdeal) -> bool:
    try:
        igphi_recognize(I)
    except NotIGPhi:
        return False
    return True


def line_structure(i: Sequence[int]) -> StructureData:
    """The line tree on ``t_{i_0}, ..., t_{i_k}`` with each ``t_s`` sent to its block edge."""
    i = tuple(i)
    d = i[-1]
    edges = tuple((i[j], i[j + 1]) for j in range(len(i) - 1))
    phi = []
    for j in range(len(i) - 1):
        for s in range(i[j] + 1, i[j + 1]):
            phi.append((s, (i[j], i[j + 1])))
    Q = tuple(s for s in range(d + 1) if s not in i)
    return StructureData(i, Q, edges, tuple(phi))
