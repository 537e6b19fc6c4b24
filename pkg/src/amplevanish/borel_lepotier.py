"""E1 pages of the Borel-Le Potier spectral sequence and induction traces.

Pages are symbolic: each E1 term is a list of cohomology groups on the base,
indexed by compositions of ``p - t``, with the Schur exponents given by the
relative Bott pushforward. The two induction steps that prove the vanishing
theorem are replayed as lists of obligations (groups that must vanish in a
range of degrees), each carrying the justification that discharges it.
Pushforwards and the Kodaira-Akizuki-Nakano theorem are taken as axioms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from .bundles import BundleExpression, SchurFactor, TautFactor
from .errors import DomainError, TraceClosureError
from .partitions import Partition, add_rectangle
from .schur import hook_partition, product_decompose, sym, wedge
from .vanishing import Positivity, PositivityContext, theorem_a


@dataclass(frozen=True)
class E1Summand:
    composition: tuple[int, ...]
    bundle: BundleExpression

    @property
    def hooks(self) -> tuple[Partition, ...]:
        return tuple(f.partition for f in self.bundle.factors if isinstance(f, SchurFactor))

    def to_json(self) -> dict:
        return {"composition": list(self.composition), "bundle": str(self.bundle)}


@dataclass(frozen=True)
class E1Descriptor:
    """The term ``E_1^{t, s-t}``, i.e. a direct sum of groups ``H^{t,s}(X, ...)``."""

    t: int
    s: int
    summands: tuple[E1Summand, ...]

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def to_json(self) -> dict:
        return {"t": self.t, "s": self.s, "summands": [x.to_json() for x in self.summands]}


def lemma_d_term(k: int, p: int, t: int, e: int):
    """Schur exponent of the single-bundle E1 term in column ``t``, or ``ZERO``."""
    if k <= 0:
        raise DomainError("the tautological exponent k must be positive")
    return hook_partition(k - p + t - 1, p - t + 1, e)


def weak_compositions(total: int, parts: int, caps: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` nonnegative summands, lexicographically.

    ``caps[i]``, when given, bounds the i-th summand.
    """
    if caps is None:
        caps = [total] * parts
    if total < 0 or total > sum(caps[:parts]):
        return
    if parts == 0:
        yield ()
        return
    for first in range(min(total, caps[0]) + 1):
        for rest in weak_compositions(total - first, parts - 1, caps[1:]):
            yield (first,) + rest


def lemma_dprime_page(
    ks: Sequence[int],
    p: int,
    t: int,
    s: int,
    e: int,
    extra: BundleExpression = BundleExpression(),
) -> E1Descriptor:
    """E1 term for ``O_E(k_1, ..., k_h)`` twisted by ``extra`` on the h-fold product."""
    if any(k <= 0 for k in ks):
        raise DomainError("tautological exponents must be positive")
    summands = []
    # a hook factor is nonzero exactly when p_i <= min(e-1, k_i-1)
    caps = [min(e - 1, k - 1) for k in ks]
    for comp in weak_compositions(p - t, len(ks), caps):
        hooks = [hook_partition(k - pi - 1, pi + 1, e) for k, pi in zip(ks, comp)]
        head = BundleExpression(tuple(SchurFactor(h) for h in hooks), bundle=extra.bundle)
        summands.append(E1Summand(comp, head.tensor(extra)))
    return E1Descriptor(t, s, tuple(summands))


def forced_zero_bound(ks: Sequence[int], p: int, e: int) -> int:
    """Columns ``t`` below the returned value have a zero E1 term."""
    if any(k <= 0 for k in ks):
        raise DomainError("tautological exponents must be positive")
    return p - sum(min(e - 1, k - 1) for k in ks)


class Justification(enum.Enum):
    INDUCTION_HYPOTHESIS = "INDUCTION_HYPOTHESIS"
    KAN = "KAN"
    FIRST_STEP = "FIRST_STEP"
    FORCED_ZERO = "FORCED_ZERO"


@dataclass(frozen=True)
class Obligation:
    """``H^{t,s'}(space, bundle) = 0`` is needed for every ``s' >= s``.

    ``vanishes_above`` is what the justification delivers: vanishing for all
    degrees above it, or in every degree when ``None``. ``bundle`` is ``None``
    when the E1 term itself is zero. ``valid`` records whether the
    justification's own hypotheses hold.
    """

    t: int
    s: int
    space: str
    bundle: BundleExpression | None
    justification: Justification
    vanishes_above: int | None
    valid: bool
    note: str = ""

    @property
    def covered(self) -> bool:
        return self.valid and (self.vanishes_above is None or self.vanishes_above < self.s)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "s": self.s,
            "space": self.space,
            "bundle": "0" if self.bundle is None else str(self.bundle),
            "justification": self.justification.value,
            "vanishes_above": self.vanishes_above,
            "valid": self.valid,
            "note": self.note,
        }


@dataclass(frozen=True)
class InductionTrace:
    """Replay of one induction step at codegree ``r = n - p``.

    The target is ``H^{n-r,s}(X, target)``; the trace derives vanishing for
    ``s > proven_above`` and compares with ``expected_above`` from the
    numerical criterion.
    """

    step: int
    n: int
    e: int
    r: int
    base_p: int
    target: BundleExpression
    expected_above: int
    proven_above: int
    obligations: tuple[Obligation, ...]
    first_step: "InductionTrace | None" = field(default=None, compare=False)

    @property
    def closed(self) -> bool:
        return self.first_failure() is None and self.proven_above == self.expected_above

    def first_failure(self) -> Obligation | None:
        for ob in self.obligations:
            if not ob.covered:
                return ob
        return None

    def to_json(self) -> dict:
        out = {
            "step": self.step,
            "n": self.n,
            "e": self.e,
            "r": self.r,
            "base_p": self.base_p,
            "target": str(self.target),
            "expected_above": self.expected_above,
            "proven_above": self.proven_above,
            "closed": self.closed,
            "obligations": [ob.to_json() for ob in self.obligations],
        }
        if self.first_step is not None:
            out["first_step"] = self.first_step.to_json()
        return out


def check_closure(trace: InductionTrace) -> InductionTrace:
    """Return the trace if it closes, else raise naming the first gap."""
    bad = trace.first_failure()
    if bad is not None:
        why = "hypotheses fail" if not bad.valid else f"only vanishes above {bad.vanishes_above}"
        raise TraceClosureError(
            f"obligation H^{{{bad.t},{bad.s}}}({bad.space}, {bad.bundle or 0}) "
            f"[{bad.justification.value}] not discharged: {why}",
            trace,
            bad,
        )
    if trace.proven_above != trace.expected_above:
        raise TraceClosureError(
            f"trace proves vanishing above {trace.proven_above}, criterion expects {trace.expected_above}",
            trace,
        )
    return trace


def _derive_bound(target_col: int, terminal: Obligation, others: list[Obligation]) -> int:
    # Target at degree s meets d_u from column t-u at degree s-1 and into column t+u at degree s+1.
    bound = terminal.vanishes_above
    for ob in others:
        if ob.vanishes_above is None:
            continue
        shift = 1 if ob.t > target_col else -1
        bound = max(bound, ob.vanishes_above - shift)
    return bound


def _induction_obligation(
    ctx: PositivityContext,
    r: int,
    t: int,
    s: int,
    syms: Sequence[int],
    wedges: Sequence[int],
    det_available: int,
    embedded: bool,
) -> Obligation:
    """Discharge ``H^{t,s}(S.. (x) W.. (x) det^a (x) L)`` by the vanishing theorem at lower codegree."""
    e, n = ctx.e, ctx.n
    bundle = BundleExpression(
        tuple(sym(k) for k in syms if k > 0) + tuple(wedge(j) for j in wedges), det_available, True
    )
    if t > n:
        return Obligation(t, s, "X", bundle, Justification.FORCED_ZERO, None, embedded, "no forms of degree above dim X")
    # full exterior powers are copies of det E
    ks = [k for k in syms if k > 0]
    js = [j for j in wedges if j != e]
    dets = det_available + (len(wedges) - len(js))
    verdict = theorem_a(ctx, ks, js, t, 0)
    valid = embedded and n - t < r and dets >= verdict.required_det_power
    note = f"codegree {n - t}, det {dets} >= {verdict.required_det_power}"
    return Obligation(t, s, "X", bundle, Justification.INDUCTION_HYPOTHESIS, verdict.threshold - t, valid, note)


@lru_cache(maxsize=4096)
def _embeds(hook: Partition, a: int, b: int, e: int) -> bool:
    return product_decompose([sym(a), wedge(b)], e).get(hook) >= 1


def _check_args(n: int, e: int, r: int, js: Sequence[int], k_ample_defect: int) -> None:
    if n < 1 or e < 1:
        raise DomainError("n and e must be positive")
    if not 0 <= r <= n:
        raise DomainError(f"r must lie in [0, {n}]")
    for j in js:
        if not 1 <= j <= e:
            raise DomainError(f"wedge exponent {j} outside [1, {e}]")
    if k_ample_defect < 0:
        raise DomainError("k-ample defect must be nonnegative")


def _left_zeros(ks: Sequence[int], base_p: int, col: int, s: int, e: int) -> list[Obligation]:
    out = []
    for t in range(col):
        page = lemma_dprime_page(ks, base_p, t, s, e)
        out.append(Obligation(t, s, "X", None, Justification.FORCED_ZERO, None, page.is_zero, "below forced-zero column"))
    return out


def induction_trace_step1(
    n: int,
    e: int,
    r: int,
    js: Sequence[int],
    k_ample_defect: int = 0,
    positivity: Positivity = Positivity.E_AMPLE_L_NEF,
    strict: bool = True,
) -> InductionTrace:
    """Products of exterior powers at codegree ``r`` (no symmetric factors).

    Runs the spectral sequence of ``O_E(j_1, ..., j_m) (x) det^r (x) L`` on the
    m-fold product of P(E*) at ``p_0 = n - r + sum(j - 1)``.
    """
    js = tuple(js)
    _check_args(n, e, r, js, k_ample_defect)
    ctx = PositivityContext(n, e, positivity, k_ample_defect)
    col = n - r
    base_p = col + sum(j - 1 for j in js)
    expected = theorem_a(ctx, (), js, col, 0).threshold - col
    extra = BundleExpression((), r, True)
    target = BundleExpression(tuple(wedge(j) for j in js), r, True)

    page = lemma_dprime_page(js, base_p, col, expected + 1, e, extra)
    if [s.hooks for s in page.summands] != [tuple(Partition((1,) * j) for j in js)]:
        raise RuntimeError("boundary column is not the product of exterior powers")

    obligations = _left_zeros(js, base_p, col, expected, e)
    for t in range(col + 1, base_p + 1):
        page = lemma_dprime_page(js, base_p, t, expected + 2, e, extra)
        for summand in page.summands:
            us = [j - 1 - pi for j, pi in zip(js, summand.composition)]
            embedded = all(_embeds(h, u, j - u, e) for h, u, j in zip(summand.hooks, us, js))
            obligations.append(
                _induction_obligation(ctx, r, t, expected + 2, us, [j - u for j, u in zip(js, us)], r, embedded)
            )

    dim_y = n + len(js) * (e - 1)
    ample = bool(js) or r >= 1 or positivity is Positivity.E_NEF_L_AMPLE
    line = BundleExpression((TautFactor(js),) if js else (), r, True)
    terminal = Obligation(
        base_p,
        expected + 1,
        f"Y_{len(js)}",
        line,
        Justification.KAN,
        dim_y - base_p + k_ample_defect,
        ample,
        "ample line bundle" if ample else "twist is only nef",
    )
    obligations.append(terminal)
    trace = InductionTrace(
        1, n, e, r, base_p, target, expected, _derive_bound(col, terminal, obligations[:-1]), tuple(obligations)
    )
    return check_closure(trace) if strict else trace


def induction_trace_step2(
    n: int,
    e: int,
    r: int,
    ks: Sequence[int],
    js: Sequence[int],
    k_ample_defect: int = 0,
    positivity: Positivity = Positivity.E_AMPLE_L_NEF,
    strict: bool = True,
) -> InductionTrace:
    """Symmetric powers added on top of step one, through ``O_E(k_1+e, ..., k_l+e)``."""
    ks, js = tuple(ks), tuple(js)
    _check_args(n, e, r, js, k_ample_defect)
    if not ks:
        raise DomainError("step two needs at least one symmetric exponent")
    if any(k < 0 for k in ks):
        raise DomainError("symmetric exponents must be nonnegative")
    ctx = PositivityContext(n, e, positivity, k_ample_defect)
    l = len(ks)
    col = n - r
    base_p = col + l * (e - 1)
    shifted = tuple(k + e for k in ks)
    expected = theorem_a(ctx, ks, js, col, 0).threshold - col
    extra = BundleExpression(tuple(wedge(j) for j in js), r, True)
    target = BundleExpression(tuple(sym(k) for k in ks) + tuple(wedge(j) for j in js), r + l, True)

    page = lemma_dprime_page(shifted, base_p, col, expected + 1, e, extra)
    if [s.hooks for s in page.summands] != [tuple(add_rectangle((k,), 1, e) for k in ks)]:
        raise RuntimeError("boundary column is not S^k E (x) det E")

    obligations = _left_zeros(shifted, base_p, col, expected, e)
    for t in range(col + 1, base_p + 1):
        page = lemma_dprime_page(shifted, base_p, t, expected + 2, e, extra)
        for summand in page.summands:
            vs = [e - 1 - pi for pi in summand.composition]
            embedded = all(_embeds(h, k + v, e - v, e) for h, k, v in zip(summand.hooks, ks, vs))
            syms = [k + v for k, v in zip(ks, vs)]
            wedges = [e - v for v in vs] + list(js)
            obligations.append(_induction_obligation(ctx, r, t, expected + 2, syms, wedges, r, embedded))

    lifted = induction_trace_step1(
        n + l * (e - 1), e, r, js, k_ample_defect, Positivity.E_NEF_L_AMPLE, strict=False
    )
    reached = lifted.closed
    terminal = Obligation(
        base_p,
        expected + 1,
        f"Y_{l}",
        BundleExpression((TautFactor(shifted),) + tuple(wedge(j) for j in js), r, True),
        Justification.FIRST_STEP,
        lifted.proven_above,
        reached,
        "pullback of E nef, O_E(k+e) (x) L ample",
    )
    obligations.append(terminal)
    trace = InductionTrace(
        2,
        n,
        e,
        r,
        base_p,
        target,
        expected,
        _derive_bound(col, terminal, obligations[:-1]),
        tuple(obligations),
        lifted,
    )
    return check_closure(trace) if strict else trace
