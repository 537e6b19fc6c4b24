"""Numerical vanishing criteria for Dolbeault cohomology of ample bundles.

A verdict only ever certifies vanishing. When ``guaranteed`` is false the
group is simply not covered by the theorem; nothing is claimed about
non-vanishing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError
from .partitions import Partition, conjugate
from .schur import PowerFactor, product_decompose, sym, wedge


class Positivity(enum.Enum):
    E_AMPLE_L_NEF = "E_AMPLE_L_NEF"
    E_NEF_L_AMPLE = "E_NEF_L_AMPLE"


class Theorem(enum.Enum):
    A = "A"
    A_PRIME = "A_PRIME"
    COR_B = "COR_B"
    COR_C = "COR_C"
    MULTI = "MULTI"


@dataclass(frozen=True)
class PositivityContext:
    """Base dimension, rank, positivity hypothesis and Sommese ampleness defect."""

    n: int
    e: int
    positivity: Positivity = Positivity.E_AMPLE_L_NEF
    k_ample_defect: int = 0

    def __post_init__(self):
        if self.n < 1 or self.e < 1:
            raise DomainError("n and e must be positive")
        if self.k_ample_defect < 0:
            raise DomainError("k-ample defect must be nonnegative")


@dataclass(frozen=True)
class VanishingVerdict:
    theorem: Theorem
    threshold: int
    p: int
    q: int
    guaranteed: bool
    margin: int
    # one entry per bundle for MULTI verdicts
    required_det_power: int | tuple[int, ...]

    def to_json(self) -> dict:
        det = self.required_det_power
        return {
            "theorem": self.theorem.value,
            "threshold": self.threshold,
            "p": self.p,
            "q": self.q,
            "guaranteed": self.guaranteed,
            "margin": self.margin,
            "required_det_power": list(det) if isinstance(det, tuple) else det,
        }


def _verdict(theorem: Theorem, threshold: int, p: int, q: int, det_power) -> VanishingVerdict:
    margin = p + q - threshold
    return VanishingVerdict(theorem, threshold, p, q, margin >= 1, margin, det_power)


def _check_degrees(n: int, p: int, q: int) -> None:
    if not (0 <= p <= n and 0 <= q <= n):
        raise DomainError(f"need 0 <= p, q <= n = {n}, got p={p}, q={q}")


def q_statistic(v: int, lam: Iterable[int], l: int) -> int:
    """Sum of ``v - h`` over the columns of height ``h > l``.

    Defined for every ``l >= 0``; it is zero once ``l >= v - 1`` because the
    only columns left are full.
    """
    lam = Partition(lam)
    if lam.length > v:
        raise DomainError(f"partition {lam} has more than {v} parts")
    if l < 0:
        raise DomainError("l must be nonnegative")
    return sum(v - h for h in conjugate(lam) if h > l)


def wedge_contribution(e: int, js: Sequence[int]) -> int:
    for j in js:
        if not 0 <= j <= e:
            raise DomainError(f"wedge exponent {j} outside [0, {e}]")
    return sum(e - j for j in js)


def theorem_a(ctx: PositivityContext, ks: Sequence[int], js: Sequence[int], p: int, q: int) -> VanishingVerdict:
    """``H^{p,q}(S^{k_1}E...S^{k_l}E (x) W^{j_1}E... (x) det^{l+n-p} (x) L)``."""
    _check_degrees(ctx.n, p, q)
    if any(k < 0 for k in ks):
        raise DomainError("symmetric exponents must be nonnegative")
    threshold = ctx.n + wedge_contribution(ctx.e, js) + ctx.k_ample_defect
    return _verdict(Theorem.A, threshold, p, q, len(ks) + ctx.n - p)


def theorem_a_prime(ctx: PositivityContext, lam: Iterable[int], l: int, p: int, q: int) -> VanishingVerdict:
    """``H^{p,q}(S_lam E (x) det^{l+n-p} (x) L)`` for ``0 <= l <= e-1``."""
    lam = Partition(lam)
    _check_degrees(ctx.n, p, q)
    if not 0 <= l <= ctx.e - 1:
        raise DomainError(f"l must lie in [0, {ctx.e - 1}]")
    threshold = ctx.n + q_statistic(ctx.e, lam, l) + ctx.k_ample_defect
    return _verdict(Theorem.A_PRIME, threshold, p, q, l + ctx.n - p)


def corollary_b(ctx: PositivityContext, lam: Iterable[int], p: int, q: int) -> VanishingVerdict:
    """Twist by ``det^{l(lam)+n-p}`` and get vanishing for ``p + q > n``.

    Partitions with ``e`` rows are allowed: a full first column only asks for
    more determinant than the ``l = e - 1`` case of Theorem A'.
    """
    lam = Partition(lam)
    if lam.length > ctx.e:
        raise DomainError(f"partition {lam} has more than {ctx.e} parts")
    base = theorem_a_prime(ctx, lam, min(lam.length, ctx.e - 1), p, q)
    return _verdict(Theorem.COR_B, base.threshold, p, q, lam.length + ctx.n - p)


def corollary_b_tensor(ctx: PositivityContext, k: int, p: int, q: int) -> VanishingVerdict:
    """Tensor power ``E^{(x)k}`` twisted by ``det^{min(k, e-1)+n-p}``."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    _check_degrees(ctx.n, p, q)
    threshold = ctx.n + ctx.k_ample_defect
    return _verdict(Theorem.COR_B, threshold, p, q, min(k, ctx.e - 1) + ctx.n - p)


def corollary_c(ctx: PositivityContext, lam: Iterable[int], p: int, q: int) -> VanishingVerdict:
    """No extra twist beyond ``det^{n-p}``; threshold ``n + e*lam_1 - |lam|``."""
    base = theorem_a_prime(ctx, lam, 0, p, q)
    return _verdict(Theorem.COR_C, base.threshold, p, q, base.required_det_power)


def multi_bundle_threshold(contexts: Sequence[PositivityContext], contributions: Sequence[int]) -> int:
    """Threshold for a product of bundles, one term of the Theorem A shape per bundle.

    Each contribution is the bundle's own ``sum(e - j)`` or ``q_l(e, lam)``.
    Ampleness defects are added up.
    """
    if not contexts:
        raise DomainError("need at least one bundle")
    if len(contexts) != len(contributions):
        raise DomainError("one contribution per bundle")
    dims = {ctx.n for ctx in contexts}
    if len(dims) != 1:
        raise DomainError(f"bundles live on bases of different dimensions {sorted(dims)}")
    if any(c < 0 for c in contributions):
        raise DomainError("contributions are nonnegative")
    return contexts[0].n + sum(contributions) + sum(ctx.k_ample_defect for ctx in contexts)


def multi_bundle_verdict(
    contexts: Sequence[PositivityContext],
    contributions: Sequence[int],
    det_offsets: Sequence[int],
    p: int,
    q: int,
) -> VanishingVerdict:
    """Verdict for several bundles; ``det_offsets[i]`` is bundle i's ``l`` (or count of symmetric factors)."""
    threshold = multi_bundle_threshold(contexts, contributions)
    _check_degrees(contexts[0].n, p, q)
    if len(det_offsets) != len(contexts):
        raise DomainError("one determinant offset per bundle")
    n = contexts[0].n
    return _verdict(Theorem.MULTI, threshold, p, q, tuple(l + n - p for l in det_offsets))


def aprime_to_a_witness(lam: Iterable[int], l: int, e: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Symmetric and wedge exponents whose product contains ``S_lam`` with the same bound.

    Returns ``(js, ks)``: the wedges are the columns taller than ``l`` and the
    symmetric powers are what remains of the first ``l`` rows.
    """
    lam = Partition(lam)
    if lam.length > e:
        raise DomainError(f"partition {lam} has more than {e} parts")
    if not 0 <= l <= e - 1:
        raise DomainError(f"l must lie in [0, {e - 1}]")
    js = tuple(h for h in conjugate(lam) if h > l)
    m = len(js)
    ks = tuple(lam.part(b) - m for b in range(1, l + 1) if lam.part(b) >= m)
    return js, ks


def witness_factors(js: Sequence[int], ks: Sequence[int]) -> list[PowerFactor]:
    return [sym(k) for k in ks] + [wedge(j) for j in js]


def a_bound_dominates(e: int, ks: Sequence[int], js: Sequence[int], max_check_size: int | None = None) -> bool:
    """Check that Theorem A' covers every component of a Theorem A product.

    For each component ``lam`` of ``prod S^k (x) prod W^j`` the A' statistic at
    ``l = len(ks)`` must not exceed ``sum(e - j)``. Products of total degree
    above ``max_check_size`` are refused rather than silently skipped.
    """
    degree = sum(ks) + sum(js)
    if max_check_size is not None and degree > max_check_size:
        raise DomainError(f"product degree {degree} exceeds max_check_size {max_check_size}")
    bound = wedge_contribution(e, js)
    decomp = product_decompose(witness_factors(js, ks), e)
    return all(q_statistic(e, lam, len(ks)) <= bound for lam in decomp)


__all__ = [
    "Positivity",
    "PositivityContext",
    "Theorem",
    "VanishingVerdict",
    "a_bound_dominates",
    "aprime_to_a_witness",
    "corollary_b",
    "corollary_b_tensor",
    "corollary_c",
    "multi_bundle_threshold",
    "multi_bundle_verdict",
    "q_statistic",
    "theorem_a",
    "theorem_a_prime",
    "wedge_contribution",
]
