"""Degeneracy loci of bundle maps: expected dimensions, resolution terms,
and the restriction-map verdicts obtained by feeding the resolution of the
ideal sheaf into the vanishing theorem.

Positivity of E, F and the comparison ``L^k >= det E (x) det F`` are input
flags; nothing here inspects geometry.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from .errors import DomainError, HypothesisError
from .partitions import (
    Partition,
    adjoin_k,
    box_partitions,
    conjugate,
    durfee_rank,
    from_square,
    partitions_of,
    square_decompose,
)
from .vanishing import q_statistic


class Shape(enum.Enum):
    GENERAL = "GENERAL"
    SYMMETRIC = "SYMMETRIC"
    SKEW = "SKEW"


class Conclusion(enum.Enum):
    ISOMORPHISM = "ISOMORPHISM"
    INJECTIVE = "INJECTIVE"
    NONE = "NONE"


def _validate_ranks(e: int, f: int, k: int, shape: Shape) -> None:
    if shape is Shape.GENERAL:
        if not 0 < k < min(e, f):
            raise DomainError(f"need 0 < k < min(e, f) = {min(e, f)}, got k={k}")
        return
    if f != e:
        raise DomainError("symmetric and skew maps need F = E")
    if not 0 < k < e:
        raise DomainError(f"need 0 < k < e = {e}, got k={k}")
    if shape is Shape.SKEW and k % 2:
        raise DomainError("k must be even for a skew-symmetric map")


@dataclass(frozen=True)
class LocusProblem:
    """A map ``E* -> F (x) L`` and the rank bound ``k`` defining ``D_k``."""

    n: int
    e: int
    f: int | None = None
    k: int = 1
    shape: Shape = Shape.GENERAL
    line_twist_ok: bool = True

    def __post_init__(self):
        if self.f is None:
            object.__setattr__(self, "f", self.e)
        if self.n < 1:
            raise DomainError("n must be positive")
        _validate_ranks(self.e, self.f, self.k, self.shape)


def expected_codim(problem: LocusProblem) -> int:
    e, f, k = problem.e, problem.f, problem.k
    if problem.shape is Shape.GENERAL:
        return (e - k) * (f - k)
    if problem.shape is Shape.SYMMETRIC:
        return comb(e - k + 1, 2)
    return comb(e - k, 2)


def expected_dim(problem: LocusProblem) -> int:
    """``rho``; negative values mean the locus is expected to be empty."""
    return problem.n - expected_codim(problem)


class ResolutionTerm(NamedTuple):
    degree_i: int
    e_side: Partition
    f_side: Partition | None
    source_lambda: Partition

    def to_json(self) -> dict:
        return {
            "i": self.degree_i,
            "lambda": list(self.source_lambda),
            "e_side": list(self.e_side),
            "f_side": None if self.f_side is None else list(self.f_side),
        }


def lascoux_terms(i: int, e: int, f: int, k: int) -> list[ResolutionTerm]:
    """Summands ``S_{lam(k)} E* (x) S_{lam*(k)} F*`` of the degree ``i`` term."""
    _validate_ranks(e, f, k, Shape.GENERAL)
    if i < 1:
        raise DomainError("resolution degrees start at 1")
    lams = sorted(partitions_of(i, max_part=f - k, max_length=e - k))
    return [ResolutionTerm(i, adjoin_k(lam, k), adjoin_k(conjugate(lam), k), lam) for lam in lams]


def jpw_terms(i: int, e: int, k: int, shape: Shape) -> list[ResolutionTerm]:
    """Summands of the resolution for symmetric or skew-symmetric maps.

    Indexed by ``lam = (l, mu, mu*)``; symmetric maps need ``l`` even and
    ``i = |mu| + l(l-1)/2`` with exponent ``lam(k-1)``, skew maps use
    ``i = |mu| + l(l+1)/2`` and ``lam(k+1)``.
    """
    if shape is Shape.GENERAL:
        raise DomainError("general maps use lascoux_terms")
    _validate_ranks(e, e, k, shape)
    if i < 1:
        raise DomainError("resolution degrees start at 1")
    symmetric = shape is Shape.SYMMETRIC
    extra = k - 1 if symmetric else k + 1
    terms = []
    l = 1
    while l + extra <= e:
        offset = l * (l - 1) // 2 if symmetric else l * (l + 1) // 2
        if offset > i:
            break
        if not (symmetric and l % 2):
            # lam has l + mu_1 rows, so lam(extra) fits in e rows iff mu_1 <= e - extra - l
            for mu in partitions_of(i - offset, max_part=e - extra - l, max_length=l):
                lam = from_square(l, mu, conjugate(mu))
                terms.append(ResolutionTerm(i, adjoin_k(lam, extra), None, lam))
        l += 1
    return sorted(terms, key=lambda term: term.source_lambda)


def resolution_length(problem: LocusProblem) -> int:
    """Largest degree carrying a nonzero term (the box size in the general case)."""
    if problem.shape is Shape.GENERAL:
        return (problem.e - problem.k) * (problem.f - problem.k)
    top = 0
    i = 1
    # degrees are bounded by the e x e square
    while i <= problem.e * problem.e:
        if jpw_terms(i, problem.e, problem.k, problem.shape):
            top = i
        i += 1
    return top


class HookIdentity(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


def q_hook_identity_check(e: int, f: int, k: int, lam) -> HookIdentity:
    """Compare the E- and F-side statistics of ``lam(k)`` with their closed form."""
    _validate_ranks(e, f, k, Shape.GENERAL)
    lam = Partition(lam)
    if not lam:
        raise DomainError("partition must be nonempty")
    if lam[0] > f - k or lam.length > e - k:
        raise DomainError(f"{lam} does not fit in the {e - k} x {f - k} box")
    l = durfee_rank(lam)
    lhs = q_statistic(e, adjoin_k(lam, k), l) + q_statistic(f, adjoin_k(conjugate(lam), k), l)
    _, mu, nu = square_decompose(lam)
    rhs = l * (e - k - l) - nu.size + l * (f - k - l) - mu.size
    return HookIdentity(lhs, rhs, lhs == rhs)


@dataclass(frozen=True)
class LocusCheck:
    """One Serre-dual vanishing needed for ``H^q(X, I) = 0``.

    ``H^{n,p}(S_{lam(k)}E (x) S_{lam*(k)}F (x) L^{|lam(k)|})`` with
    ``p = n - q - |lam| + 1`` must vanish; the criterion asks ``p > bound``.
    Negative ``p`` vanishes for degree reasons.
    """

    lam: Partition
    q: int
    p: int
    bound: int
    holds: bool
    closed_form_holds: bool

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam),
            "q": self.q,
            "p": self.p,
            "bound": self.bound,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class EnumerationReport:
    degrees: tuple[int, ...]
    checked: int
    violations: tuple[LocusCheck, ...]
    consistent: bool

    @property
    def first_violation(self) -> LocusCheck | None:
        return self.violations[0] if self.violations else None

    def to_json(self) -> dict:
        first = self.first_violation
        return {
            "degrees": list(self.degrees),
            "checked": self.checked,
            "violations": len(self.violations),
            "first_violation": None if first is None else first.to_json(),
            "consistent": self.consistent,
        }


@dataclass(frozen=True)
class LocusVerdict:
    theorem: str
    rho: int
    q: int
    conclusion: Conclusion
    report: EnumerationReport | None = None

    def to_json(self) -> dict:
        out = {"theorem": self.theorem, "rho": self.rho, "q": self.q, "conclusion": self.conclusion.value}
        if self.report is not None:
            out["report"] = self.report.to_json()
        return out


def _conclusion(rho: int, q: int) -> Conclusion:
    if q < 0:
        raise DomainError("q must be nonnegative")
    if q < rho:
        return Conclusion.ISOMORPHISM
    if q == rho:
        return Conclusion.INJECTIVE
    return Conclusion.NONE


def serre_dual_check(problem: LocusProblem, lam: Partition, q: int) -> LocusCheck:
    n, e, f, k = problem.n, problem.e, problem.f, problem.k
    lam = Partition(lam)
    l = durfee_rank(lam)
    p = n - q - lam.size + 1
    bound = q_statistic(e, adjoin_k(lam, k), l) + q_statistic(f, adjoin_k(conjugate(lam), k), l)
    closed_form = q <= n - (e - k) * (f - k) + (e - k - l) * (f - k - l)
    return LocusCheck(lam, q, p, bound, p < 0 or p > bound, closed_form)


def enumerate_checks(problem: LocusProblem, degrees, check_bound: int | None = None) -> EnumerationReport:
    rows, cols = problem.e - problem.k, problem.f - problem.k
    if check_bound is None:
        check_bound = rows * cols
    checked = 0
    violations = []
    consistent = True
    for lam in sorted(box_partitions(rows, cols)):
        if not lam or lam.size > check_bound:
            continue
        for q in degrees:
            check = serre_dual_check(problem, lam, q)
            checked += 1
            if check.p >= 0 and check.holds != check.closed_form_holds:
                consistent = False
            if not check.holds:
                violations.append(check)
    return EnumerationReport(tuple(degrees), checked, tuple(violations), consistent)


def theorem_e_verdict(problem: LocusProblem, q: int, check_bound: int | None = None) -> LocusVerdict:
    """Restriction ``H^q(X, O_X) -> H^q(D_k, O_{D_k})`` for a general map.

    The conclusion follows the theorem; the attached report re-derives the
    needed vanishings partition by partition.
    """
    if problem.shape is not Shape.GENERAL:
        raise DomainError("theorem E concerns general maps; use theorem_f_verdict")
    if not problem.line_twist_ok:
        raise HypothesisError("needs L^k >= det E (x) det F")
    rho = expected_dim(problem)
    conclusion = _conclusion(rho, q)
    # isomorphism at q needs H^q(I) = H^{q+1}(I) = 0, injectivity only H^q(I) = 0
    degrees = (q, q + 1) if conclusion is Conclusion.ISOMORPHISM else (q,)
    return LocusVerdict("E", rho, q, conclusion, enumerate_checks(problem, degrees, check_bound))


def theorem_f_verdict(problem: LocusProblem, q: int) -> LocusVerdict:
    if problem.shape is Shape.GENERAL:
        raise DomainError("theorem F concerns symmetric or skew maps; use theorem_e_verdict")
    if not problem.line_twist_ok:
        raise HypothesisError("needs L^k >= det E")
    rho = expected_dim(problem)
    return LocusVerdict("F", rho, q, _conclusion(rho, q))


def is_connected_guaranteed(problem: LocusProblem) -> bool:
    """Connectedness of ``D_k`` (for connected X) follows once ``rho > 0``."""
    verdict = theorem_e_verdict(problem, 0) if problem.shape is Shape.GENERAL else theorem_f_verdict(problem, 0)
    return verdict.conclusion is Conclusion.ISOMORPHISM
