"""Monomial ideals of K[x,y] encoded by their a-sequences.

An m-primary monomial ideal containing ``x^d`` is stored as the weakly
increasing vector ``a = (a_0, ..., a_d)`` with ``a_0 = 0``, where ``a_i`` is
the least ``j`` with ``x^(d-i) y^j`` in the ideal.  Everything here is exact
integer arithmetic; rationals only show up in weights and hull slopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Iterable, Sequence


class WindowTooSmall(ArithmeticError):
    """The Hilbert series did not stabilize inside the allowed window."""


class InconsistentResult(ArithmeticError):
    """An identity that must hold exactly failed; indicates a bug."""


@dataclass(frozen=True)
class ASequence:
    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise ValueError("a-sequence must be non-empty")
        if a[0] != 0:
            raise ValueError(f"a_0 must be 0, got {a[0]}")
        for i in range(1, len(a)):
            if a[i] < a[i - 1]:
                raise ValueError(f"a-sequence must be weakly increasing: {a}")

    @property
    def d(self) -> int:
        return len(self.a) - 1

    @property
    def b(self) -> tuple[int, ...]:
        return tuple(self.a[i] - self.a[i - 1] for i in range(1, len(self.a)))

    @property
    def is_lex_segment(self) -> bool:
        return all(x > 0 for x in self.b)

    def __iter__(self):
        return iter(self.a)

    def __len__(self):
        return len(self.a)

    def __getitem__(self, i):
        return self.a[i]

    def __str__(self):
        return ",".join(str(x) for x in self.a)


def as_sequence(a) -> ASequence:
    return a if isinstance(a, ASequence) else ASequence(tuple(a))


def parse_sequence(text: str) -> ASequence:
    """Parse ``"0,2,6,7,9"`` into an :class:`ASequence`."""
    try:
        values = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError:
        raise ValueError(f"unparsable sequence {text!r}: expected comma-separated integers") from None
    return ASequence(values)


def parse_weight(text: str) -> tuple[Fraction, ...]:
    """Parse a comma separated list of integers or rationals like ``1/2``."""
    try:
        return tuple(Fraction(tok) for tok in text.replace(" ", "").split(",") if tok)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"unparsable weight {text!r}: expected comma-separated rationals") from None


def normalize(w: Iterable) -> ASequence:
    """Move a non-negative rational weight into W_d without leaving its cone.

    Only multiples of ``(1,...,1)`` and ``(0,1,...,d)`` are added and the
    vector is rescaled by a positive integer, so every homogeneous system
    vanishing on those two vectors sees the same signs.
    """
    w = [Fraction(x) for x in w]
    if not w:
        raise ValueError("empty weight")
    if any(x < 0 for x in w):
        raise ValueError(f"weight entries must be non-negative: {w}")
    w0 = w[0]
    shifted = [x - w0 for x in w]
    den = lcm(*(x.denominator for x in shifted))
    ints = [int(x * den) for x in shifted]
    if len(ints) == 1:
        return ASequence((0,))
    gaps = [ints[i] - ints[i - 1] for i in range(1, len(ints))]
    k = max(0, 1 - min(gaps))
    return ASequence(tuple(x + k * i for i, x in enumerate(ints)))


def minplus_product(a, a2) -> ASequence:
    """a-sequence of the product ideal: ``c_i = min(a_j + a2_k : j + k = i)``."""
    a, a2 = as_sequence(a).a, as_sequence(a2).a
    c = [None] * (len(a) + len(a2) - 1)
    for j, x in enumerate(a):
        for k, y in enumerate(a2):
            s = x + y
            if c[j + k] is None or s < c[j + k]:
                c[j + k] = s
    return ASequence(tuple(c))


def minplus_power(a, n: int) -> ASequence:
    """The n-th min-plus power (sequence of ``I^n``); ``n = 0`` gives ``(0,)``."""
    a = as_sequence(a)
    out = ASequence((0,))
    for _ in range(n):
        out = minplus_product(out, a)
    return out


def hilbert_h1(a, k: int) -> int:
    """``dim_K R/I^(k+1)``, i.e. the entry sum of the (k+1)-st min-plus power."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return sum(minplus_power(a, k + 1).a)


def h1_series(a, K: int) -> list[int]:
    """``[H^1(I,0), ..., H^1(I,K)]`` computed incrementally."""
    a = as_sequence(a)
    out, power = [], a
    for _ in range(K + 1):
        out.append(sum(power.a))
        power = minplus_product(power, a)
    return out


def times_one_minus_z_cubed(series: Sequence) -> list:
    """Coefficients of ``(1-z)^3 * series`` truncated to ``len(series)``."""
    kernel = (1, -3, 3, -1)
    return [
        sum(c * series[n - j] for j, c in enumerate(kernel) if n - j >= 0)
        for n in range(len(series))
    ]


def hilbert_coefficients(h: Sequence[int]) -> tuple[int, int, int]:
    """``(e_0, e_1, e_2)`` from an h-vector: ``e_i = sum_j binom(j, i) h_j``."""
    return tuple(sum(comb(j, i) * hj for j, hj in enumerate(h)) for i in range(3))


def hilbert_polynomial_value(e: Sequence[int], k: int) -> int:
    """``P^1_I(k) = e0 C(k+2,2) - e1 C(k+1,1) + e2``."""
    return e[0] * comb(k + 2, 2) - e[1] * (k + 1) + e[2]


def stabilized_h(window_of, start_window: int, max_doublings: int = 10):
    """Grow the window until ``(1-z)^3 * series`` ends in four zeros.

    ``window_of(K)`` must return the series terms for degrees ``0..K``.
    Returns ``(h, K)`` with trailing zeros of ``h`` stripped.
    """
    K = start_window
    for _ in range(max_doublings + 1):
        prod = times_one_minus_z_cubed(window_of(K))
        if not any(prod[-4:]):
            while prod and prod[-1] == 0:
                prod.pop()
            return prod, K
        K *= 2
    raise WindowTooSmall(f"Hilbert series not stabilized at window {K // 2}")


@dataclass(frozen=True)
class HilbertReport:
    h: tuple[int, ...]
    e: tuple[int, int, int]
    colength: int
    series_window: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "h": list(self.h),
            "e": list(self.e),
            "colength": self.colength,
            "series_window": list(self.series_window),
        }


def h_polynomial(a, window: int | None = None) -> HilbertReport:
    a = as_sequence(a)
    K = window if window is not None else 2 * a.d + 6
    h, K = stabilized_h(lambda n: h1_series(a, n), K)
    values = h1_series(a, K)
    e = hilbert_coefficients(h)
    for k in range(max(0, len(h) - 2), K + 1):
        if hilbert_polynomial_value(e, k) != values[k]:
            raise InconsistentResult(f"Hilbert polynomial disagrees with H^1 at k={k}")
    return HilbertReport(tuple(h), tuple(e), values[0], tuple(values))


def lower_hull_vertices(a: Sequence) -> tuple[int, ...]:
    """Indices ``0 = i_0 < ... < i_k = d`` of the lower Newton boundary.

    From ``i_t`` the next vertex is the largest ``j`` minimizing the slope
    ``(a_j - a_{i_t}) / (j - i_t)``; collinear points are skipped.
    """
    d = len(a) - 1
    verts = [0]
    while verts[-1] < d:
        i = verts[-1]
        best_j, best = None, None
        for j in range(i + 1, d + 1):
            slope = Fraction(a[j] - a[i], j - i)
            if best is None or slope <= best:
                best_j, best = j, slope
        verts.append(best_j)
    return tuple(verts)


def multiplicity_form(vertices: Sequence[int], d: int) -> tuple[int, ...]:
    """Coefficients of ``e_0`` as a linear form in ``a`` for the given hull."""
    coeffs = [0] * (d + 1)
    k = len(vertices) - 1
    if k == 0:
        return tuple(coeffs)
    coeffs[vertices[0]] += vertices[1] - vertices[0]
    for t in range(1, k):
        coeffs[vertices[t]] += vertices[t + 1] - vertices[t - 1]
    coeffs[vertices[k]] += vertices[k] - vertices[k - 1]
    return tuple(coeffs)


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def newton_multiplicity(a) -> tuple[tuple[int, ...], int]:
    """Hull vertices and multiplicity ``e_0`` of a lex-segment ideal."""
    a = as_sequence(a)
    if not a.is_lex_segment:
        raise ValueError(f"{a} is not strictly increasing; normalize it first")
    verts = lower_hull_vertices(a.a)
    return verts, _dot(multiplicity_form(verts, a.d), a.a)


def multiplicity(a) -> int:
    """``e_0`` of any m-primary monomial ideal given by its a-sequence.

    The hull is located on ``a + (0,1,...,d)``, which has the same vertex
    set, and the form is evaluated on the raw sequence.
    """
    a = as_sequence(a)
    shifted = [x + i for i, x in enumerate(a.a)]
    return _dot(multiplicity_form(lower_hull_vertices(shifted), a.d), a.a)


def deviation(a) -> int:
    """``V(I) = e_0 - dim R/I^2 + 2 dim R/I``."""
    a = as_sequence(a)
    v = multiplicity(a) - hilbert_h1(a, 1) + 2 * hilbert_h1(a, 0)
    if v < 0:
        raise InconsistentResult(f"negative deviation {v} for {a}")
    return v


def is_gr_cm(a) -> bool:
    return deviation(a) == 0


def zariski_product_cm(factors: Iterable) -> bool:
    """CM test for ``L_1 ... L_s`` with factors in independent directions."""
    factors = [as_sequence(f) for f in factors]
    for f in factors:
        if not f.is_lex_segment:
            raise ValueError(f"factor {f} is not a lex-segment sequence")
    return all(is_gr_cm(f) for f in factors)
