"""Hilbert data of a fan cell as linear forms in ``A = (A_0, ..., A_d)``.

For a monomial ideal ``L`` of K[x,y] whose a-sequence lies in the cell of
``I``, ``dim R/L^(k+1) = a . sum M_(k+1)(I)``.  Everything below is that
vector series pushed through the usual h-vector and Hilbert polynomial
manipulations, one coordinate at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .tpoly import (
    MonomialIdeal,
    check_fibers,
    ideal_components,
    standard_monomials_upto,
    unit_exp,
    vertex_sequence,
)
from .xy_ideals import (
    InconsistentResult,
    WindowTooSmall,
    as_sequence,
    multiplicity_form,
    times_one_minus_z_cubed,
)


@dataclass(frozen=True)
class LinearForm:
    """``sum coeffs[j] * A_j``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, d: int) -> "LinearForm":
        return cls((0,) * (d + 1))

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, a) -> int:
        a = tuple(a)
        if len(a) != len(self.coeffs):
            raise ValueError(f"need {len(self.coeffs)} values, got {len(a)}")
        return sum(c * x for c, x in zip(self.coeffs, a))

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def scale(self, k: int) -> "LinearForm":
        return LinearForm(tuple(k * x for x in self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append((sign, f"{mag}A{j}"))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return " ".join([head] + [f"{s} {t}" for s, t in parts[1:]])

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def form_coefficients(forms: Sequence[LinearForm]) -> tuple[LinearForm, LinearForm, LinearForm]:
    """``e_i = sum_j binom(j, i) h_j`` applied to forms."""
    d = forms[0].d
    out = []
    for i in range(3):
        acc = LinearForm.zero(d)
        for j, h in enumerate(forms):
            acc = acc + h.scale(comb(j, i))
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class SymbolicHilbert:
    """``Q1`` is stored in the basis ``binom(k+2,2), k+1, 1``, so ``q1 = (e0, -e1, e2)``."""

    h: tuple[LinearForm, ...]
    e: tuple[LinearForm, LinearForm, LinearForm]
    q1: tuple[LinearForm, LinearForm, LinearForm]
    stabilized_at: int

    @property
    def e0(self) -> LinearForm:
        return self.e[0]

    @property
    def e1(self) -> LinearForm:
        return self.e[1]

    @property
    def e2(self) -> LinearForm:
        return self.e[2]

    @property
    def q(self) -> tuple[LinearForm, LinearForm]:
        """``dim L^k / L^(k+1) = e0 (k+1) - e1`` for large k."""
        return (self.e[0], self.e[1])

    def h_at(self, a) -> tuple[int, ...]:
        return tuple(f(a) for f in self.h)

    def q1_at(self, a, k: int) -> int:
        c0, c1, c2 = (f(a) for f in self.q1)
        return c0 * comb(k + 2, 2) + c1 * (k + 1) + c2

    def to_json(self) -> dict:
        return {
            "h": [f.to_json() for f in self.h],
            "e": [f.to_json() for f in self.e],
            "q1": [f.to_json() for f in self.q1],
            "stabilized_at": self.stabilized_at,
        }


def msum_series(I: MonomialIdeal, K: int, check: bool = True) -> list[tuple[int, ...]]:
    """``[sum M_1(I), ..., sum M_(K+1)(I)]`` as integer vectors."""
    levels = standard_monomials_upto(I, K + 1)
    out = []
    for k in range(1, K + 2):
        if check:
            check_fibers(levels[k], k, I.d)
        out.append(tuple(sum(col) for col in zip(*levels[k])) if levels[k] else unit_exp(I.nvars))
    return out


def h1_form(I: MonomialIdeal, k: int) -> LinearForm:
    """The form whose value at ``a`` is ``dim R/L^(k+1)``."""
    return LinearForm(msum_series(I, k)[k])


def _vector_times_cube(series: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    cols = [times_one_minus_z_cubed([v[j] for v in series]) for j in range(len(series[0]))]
    return [tuple(col[n] for col in cols) for n in range(len(series))]


def _fit_q1(series, k0: int):
    """Binomial-basis coefficients through degrees ``k0, k0+1, k0+2``."""
    f0, f1, f2 = (series[k0 + t] for t in range(3))
    c0 = tuple(z - 2 * y + x for x, y, z in zip(f0, f1, f2))
    c1 = tuple(y - x - c * (k0 + 2) for x, y, c in zip(f0, f1, c0))
    c2 = tuple(x - a * comb(k0 + 2, 2) - b * (k0 + 1) for x, a, b in zip(f0, c0, c1))
    return c0, c1, c2


def symbolic_h(I: MonomialIdeal, window: int | None = None, max_doublings: int = 10) -> SymbolicHilbert:
    d = I.d
    K = 2 * d + 6 if window is None else window
    for _ in range(max_doublings + 1):
        series = msum_series(I, K)
        prod = _vector_times_cube(series)
        if not any(any(v) for v in prod[-4:]):
            break
        K *= 2
    else:
        raise WindowTooSmall(f"symbolic series not stabilized at window {K // 2}")
    while prod and not any(prod[-1]):
        prod.pop()
    h = tuple(LinearForm(v) for v in prod)
    e = form_coefficients(h)

    c0, c1, c2 = _fit_q1(series, K - 2)
    for k in range(K - 5, K + 1):
        for j in range(d + 1):
            if c0[j] * comb(k + 2, 2) + c1[j] * (k + 1) + c2[j] != series[k][j]:
                raise InconsistentResult(f"Q1 fit fails at degree {k}")
    q1 = (LinearForm(c0), LinearForm(c1), LinearForm(c2))
    if q1 != (e[0], e[1].scale(-1), e[2]):
        raise InconsistentResult("Q1 fit disagrees with the h-forms")

    radical_form = LinearForm(multiplicity_form(vertex_sequence(I), d))
    if radical_form != e[0]:
        raise InconsistentResult(f"e0 form {e[0]} differs from the radical form {radical_form}")
    return SymbolicHilbert(h, e, q1, K)


def symbolic_invariants(I: MonomialIdeal) -> dict[str, LinearForm]:
    s = symbolic_h(I)
    return {"e0": s.e[0], "e1": s.e[1], "e2": s.e[2]}


@dataclass(frozen=True)
class Comparison:
    e0_equal: bool
    e1_equal: bool
    e2_equal: bool
    h_equal: bool
    Q_equal: bool
    Q1_equal: bool
    ideal_equal: bool
    radical_equal: bool
    sat_equal: bool
    top_equal: bool

    @property
    def toppo_consistent(self) -> bool:
        """Whether ``Q`` equality and top-component equality agree (evidence only)."""
        return self.Q_equal == self.top_equal

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["toppo_consistent"] = self.toppo_consistent
        return out


def compare_invariants(I: MonomialIdeal, J: MonomialIdeal, cache: dict | None = None) -> Comparison:
    if I.nvars != J.nvars:
        raise ValueError(f"ideals live in different rings ({I.nvars} and {J.nvars} variables)")
    cache = {} if cache is None else cache

    def data(X):
        if X not in cache:
            cache[X] = (symbolic_h(X), ideal_components(X))
        return cache[X]

    (si, ci), (sj, cj) = data(I), data(J)
    return Comparison(
        e0_equal=si.e[0] == sj.e[0],
        e1_equal=si.e[1] == sj.e[1],
        e2_equal=si.e[2] == sj.e[2],
        h_equal=si.h == sj.h,
        Q_equal=si.q == sj.q,
        Q1_equal=si.q1 == sj.q1,
        ideal_equal=I == J,
        radical_equal=ci.radical == cj.radical,
        sat_equal=ci.saturation == cj.saturation,
        top_equal=ci.top == cj.top,
    )


def evaluate_h(I: MonomialIdeal, a) -> tuple[int, ...]:
    """``h^I`` at an a-sequence."""
    return symbolic_h(I).h_at(as_sequence(a).a)
