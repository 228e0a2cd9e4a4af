"""Gap sequences ``0 = i_0 < ... < i_k = d`` and the permutations attached to them."""

from __future__ import annotations

from itertools import combinations, permutations
from math import comb
from typing import Sequence


def check_sequence(i: Sequence[int]) -> tuple[int, ...]:
    i = tuple(int(x) for x in i)
    if len(i) < 2 or i[0] != 0 or any(i[j] >= i[j + 1] for j in range(len(i) - 1)):
        raise ValueError(f"invalid sequence {i}: need 0 = i_0 < i_1 < ... < i_k = d with k >= 1")
    return i


def cm_sequences(d: int) -> list[tuple[int, ...]]:
    """All ``2^(d-1)`` sequences, in lexicographic order."""
    if d < 1:
        raise ValueError("d must be positive")
    out = []
    for size in range(d):
        for inner in combinations(range(1, d), size):
            out.append((0,) + inner + (d,))
    return sorted(out)


def canonical_permutation(i: Sequence[int]) -> tuple[int, ...]:
    """Concatenation of the runs ``(i_j, i_j - 1, ..., i_{j-1} + 1)``."""
    i = check_sequence(i)
    out: list[int] = []
    for j in range(1, len(i)):
        out.extend(range(i[j], i[j - 1], -1))
    return tuple(out)


def weight_from_b(b: Sequence[int]) -> tuple[int, ...]:
    """``a_0 = 0``, ``a_i = b_1 + ... + b_i``."""
    a = [0]
    for x in b:
        a.append(a[-1] + x)
    return tuple(a)


def sequence_of_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`canonical_permutation`: cut after each new running maximum run."""
    d = len(sigma)
    cuts, seen_max = [0], 0
    for pos, x in enumerate(sigma, start=1):
        seen_max = max(seen_max, x)
        if seen_max == pos:
            cuts.append(pos)
    if cuts[-1] != d:
        cuts.append(d)
    return tuple(cuts)


def contains_pattern(sigma: Sequence[int], pattern: Sequence[int]) -> bool:
    k = len(pattern)
    for idx in combinations(range(len(sigma)), k):
        vals = [sigma[j] for j in idx]
        ranks = sorted(vals)
        if all(ranks.index(v) + 1 == p for v, p in zip(vals, pattern)):
            return True
    return False


def avoiders(d: int) -> list[tuple[int, ...]]:
    """Permutations of ``1..d`` avoiding both 231 and 312 (brute force)."""
    return [
        s for s in permutations(range(1, d + 1))
        if not contains_pattern(s, (2, 3, 1)) and not contains_pattern(s, (3, 1, 2))
    ]


def avoider_count(d: int) -> int:
    return 2 ** (d - 1)


def bigcone_permutations(d: int) -> list[tuple[int, ...]]:
    """Permutations with ``sigma(j) < sigma(j+2)`` for all j (brute force)."""
    return [
        s for s in permutations(range(1, d + 1))
        if all(s[j] < s[j + 2] for j in range(d - 2))
    ]


def bigcone_perm_count(d: int) -> int:
    return comb(d, d // 2)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def step_two_runs(values: Sequence[int]) -> list[list[int]]:
    """Split sorted integers into maximal runs ``{a, a+2, a+4, ...}``."""
    runs: list[list[int]] = []
    for x in sorted(values):
        for run in runs:
            if run[-1] + 2 == x:
                run.append(x)
                break
        else:
            runs.append([x])
    return runs


def catalan_product(i: Sequence[int]) -> int:
    """Number of permutation cones making up ``C(i)`` for a gap-at-most-2 sequence."""
    i = check_sequence(i)
    if any(i[j + 1] - i[j] > 2 for j in range(len(i) - 1)):
        raise ValueError(f"{i} has a gap larger than 2")
    missing = [x for x in range(1, i[-1] + 1) if x not in i]
    out = 1
    for run in step_two_runs(missing):
        out *= catalan(len(run))
    return out


def catalan_product_bruteforce(i: Sequence[int]) -> int:
    """Count ``sigma`` with ``sigma(j) < sigma(j+2)`` and descents exactly off ``i``."""
    i = check_sequence(i)
    d = i[-1]
    inside = set(i)
    count = 0
    for s in bigcone_permutations(d):
        if all((s[j - 1] > s[j]) == (j not in inside) for j in range(1, d)):
            count += 1
    return count


def gap_two_sequences(d: int) -> list[tuple[int, ...]]:
    return [i for i in cm_sequences(d) if all(i[j + 1] - i[j] <= 2 for j in range(len(i) - 1))]


def fibonacci_f(d: int) -> int:
    """``f_1 = 1``, ``f_2 = 2``, ``f_d = f_{d-1} + f_{d-2}``."""
    a, b = 1, 2
    if d == 1:
        return 1
    for _ in range(d - 2):
        a, b = b, a + b
    return b
