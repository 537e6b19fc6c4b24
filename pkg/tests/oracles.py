"""Brute-force reference implementations, deliberately sharing no code with the package."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import prod


def all_partitions(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    """Every partition of n, by recursion on the largest part."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        out += [(first,) + rest for rest in all_partitions(n - first, first)]
    return out


def partitions_upto(n: int) -> list[tuple[int, ...]]:
    return [lam for m in range(n + 1) for lam in all_partitions(m)]


def ferrers(lam) -> set[tuple[int, int]]:
    return {(i + 1, j + 1) for i, row in enumerate(lam) for j in range(row)}


def from_cells(cells) -> tuple[int, ...]:
    rows = Counter(i for i, _ in cells)
    return tuple(rows[i] for i in sorted(rows))


def transpose(lam) -> tuple[int, ...]:
    return from_cells({(j, i) for i, j in ferrers(lam)})


def hook_multiset(lam) -> Counter:
    cells = ferrers(lam)
    out = Counter()
    for i, j in cells:
        arm = sum(1 for (a, b) in cells if a == i and b > j)
        leg = sum(1 for (a, b) in cells if b == j and a > i)
        out[arm + leg + 1] += 1
    return out


def weyl_dim(lam, v: int) -> int:
    """Weyl dimension formula for GL_v, no hooks involved."""
    lam = list(lam)
    if len(lam) > v:
        return 0
    lam += [0] * (v - len(lam))
    num = Fraction(1)
    for i in range(v):
        for j in range(i + 1, v):
            num *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=None)
def syt_count(lam: tuple[int, ...]) -> int:
    """Standard tableaux, by removing the cell holding the largest entry."""
    if sum(lam) == 0:
        return 1
    total = 0
    for i, part in enumerate(lam):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if part > nxt:
            smaller = tuple(x for x in lam[:i] + (part - 1,) + lam[i + 1 :] if x)
            total += syt_count(smaller)
    return total


# polynomials in v variables: dict exponent-tuple -> int


def poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def complete_h(k: int, v: int) -> dict:
    out: dict = {}
    for combo in combinations_with_replacement(range(v), k):
        exp = [0] * v
        for idx in combo:
            exp[idx] += 1
        out[tuple(exp)] = 1
    return out


def elementary_e(j: int, v: int) -> dict:
    out: dict = {}
    for combo in combinations(range(v), j):
        exp = [0] * v
        for idx in combo:
            exp[idx] = 1
        out[tuple(exp)] = 1
    return out


def vandermonde(v: int) -> dict:
    poly = {tuple([0] * v): 1}
    for i in range(v):
        for j in range(i + 1, v):
            lin = {}
            ei = [0] * v
            ei[i] = 1
            ej = [0] * v
            ej[j] = 1
            lin[tuple(ei)] = 1
            lin[tuple(ej)] = -1
            poly = poly_mul(poly, lin)
    return poly


def schur_expand(poly: dict, v: int) -> dict[tuple[int, ...], int]:
    """Schur coefficients of a symmetric polynomial via the bialternant."""
    alt = poly_mul(poly, vandermonde(v))
    out = {}
    for exp, c in alt.items():
        if all(exp[i] > exp[i + 1] for i in range(v - 1)):
            lam = tuple(x - (v - 1 - i) for i, x in enumerate(exp))
            lam = tuple(x for x in lam if x)
            out[lam] = c
    return out


def product_oracle(syms, wedges, v: int) -> dict[tuple[int, ...], int]:
    poly = {tuple([0] * v): 1}
    for k in syms:
        poly = poly_mul(poly, complete_h(k, v))
    for j in wedges:
        poly = poly_mul(poly, elementary_e(j, v))
    return schur_expand(poly, v)


def column_heights(lam) -> list[int]:
    return [sum(1 for part in lam if part >= j) for j in range(1, (lam[0] if lam else 0) + 1)]


def q_oracle(v: int, lam, l: int) -> int:
    return sum(v - h for h in column_heights(lam) if h > l)


def durfee_oracle(lam) -> int:
    side = 0
    while all((i, j) in ferrers(lam) for i in range(1, side + 2) for j in range(1, side + 2)):
        side += 1
    return side


def weak_compositions_oracle(total: int, parts: int) -> list[tuple[int, ...]]:
    from itertools import product as cartesian

    return sorted(c for c in cartesian(range(total + 1), repeat=parts) if sum(c) == total)


def dim_product(syms, wedges, v: int) -> int:
    from math import comb

    return prod(comb(v + k - 1, k) for k in syms) * prod(comb(v, j) for j in wedges)
