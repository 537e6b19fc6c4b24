"""Command line front end.

Every subcommand prints a short ``key: value`` report, or canonical JSON with
``--json`` (sorted keys, two-space indent, big integers as decimal strings).
Exit status is 0 on success, 2 for bad input or a domain error, 1 otherwise.

Bundle grammar (for ``bl e1 --extra``), factors joined by ``*``:
``S<k>(E)``, ``W<j>(E)``, ``Schur[3,1](E)``, ``O_E(a,b)``, ``det^<m>(E)``, ``L``, ``O``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import borel_lepotier as bl
from . import loci
from . import partitions as pc
from . import schur
from . import vanishing as vc
from .bundles import parse_bundle
from .errors import DomainError, TraceClosureError

PROG = "amplevanish"


def _partition_arg(text: str) -> pc.Partition:
    try:
        return pc.parse_partition(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated integer list, got {text!r}") from None


def _bundle_arg(text: str):
    try:
        return parse_bundle(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _flatten(lists) -> list[int]:
    return [x for chunk in lists or [] for x in chunk]


def _fmt(lam) -> str:
    return pc.format_partition(lam) if lam else "()"


def _emit(args, payload, lines: Sequence[str]) -> None:
    if args.json or args.json_top:
        sys.stdout.write(dump_json(payload))
    else:
        sys.stdout.write("".join(line + "\n" for line in lines))


def dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _kv(record: dict) -> list[str]:
    out = []
    for key, value in record.items():
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, list):
            value = ",".join(str(x) for x in value) if value else "()"
        elif value is None:
            value = "-"
        out.append(f"{key}: {value}")
    return out


def _ctx(args) -> vc.PositivityContext:
    return vc.PositivityContext(args.n, args.e, vc.Positivity(args.positivity), args.k_ample)


# partition ---------------------------------------------------------------


def cmd_conjugate(args):
    lam = pc.conjugate(args.lam)
    _emit(args, {"partition": list(args.lam), "conjugate": list(lam)}, [_fmt(lam)])


def cmd_rank(args):
    rank = pc.durfee_rank(args.lam)
    _emit(args, {"partition": list(args.lam), "rank": rank}, [str(rank)])


def cmd_hooks(args):
    if args.cell:
        i, j = args.cell
        h = pc.hook_length(args.lam, (i, j))
        _emit(args, {"partition": list(args.lam), "cell": [i, j], "hook": h}, [str(h)])
        return
    rows = pc.hook_lengths(args.lam)
    _emit(args, {"partition": list(args.lam), "hooks": rows}, [" ".join(map(str, row)) for row in rows])


def cmd_adjoin(args):
    lam = pc.adjoin_k(args.lam, args.k)
    _emit(args, {"partition": list(args.lam), "k": args.k, "result": list(lam)}, [_fmt(lam)])


def cmd_decompose(args):
    dec = pc.square_decompose(args.lam)
    _emit(args, dec.to_json(), [f"l: {dec.rank}", f"mu: {_fmt(dec.mu)}", f"nu: {_fmt(dec.nu)}"])


def cmd_add_rect(args):
    lam = pc.add_rectangle(args.lam, args.m, args.v)
    _emit(args, {"partition": list(args.lam), "m": args.m, "v": args.v, "result": list(lam)}, [_fmt(lam)])


def cmd_strip(args):
    rec = {
        "inner": list(args.inner),
        "outer": list(args.outer),
        "horizontal": pc.is_horizontal_strip(args.inner, args.outer),
        "vertical": pc.is_vertical_strip(args.inner, args.outer),
    }
    _emit(args, rec, _kv({"horizontal": rec["horizontal"], "vertical": rec["vertical"]}))


# schur -------------------------------------------------------------------


def _decomp_lines(decomp: schur.DecompositionMultiset) -> list[str]:
    return [f"{_fmt(lam)}\t{mult}" for lam, mult in decomp.items()]


def cmd_dim(args):
    d = schur.dim_schur(args.lam, args.v)
    _emit(args, {"partition": list(args.lam), "v": args.v, "dim": str(d)}, [str(d)])


def cmd_pieri(args):
    if (args.sym is None) == (args.wedge is None):
        raise DomainError("give exactly one of --sym or --wedge")
    if args.sym is not None:
        decomp, factor = schur.pieri_sym(args.lam, args.sym, args.v), f"S{args.sym}"
    else:
        decomp, factor = schur.pieri_wedge(args.lam, args.wedge, args.v), f"W{args.wedge}"
    payload = {"partition": list(args.lam), "factor": factor, "v": args.v, "decomposition": decomp.to_json()}
    _emit(args, payload, _decomp_lines(decomp))


def cmd_product(args):
    factors = [schur.sym(k) for k in _flatten(args.sym)] + [schur.wedge(j) for j in _flatten(args.wedge)]
    decomp = schur.product_decompose(factors, args.v)
    payload = {
        "factors": [str(f) for f in factors],
        "v": args.v,
        "decomposition": decomp.to_json(),
        "dim": str(decomp.total_dimension(args.v)),
    }
    _emit(args, payload, _decomp_lines(decomp))


def cmd_multiplicity(args):
    m = schur.tensor_multiplicity(args.lam)
    _emit(args, {"partition": list(args.lam), "multiplicity": str(m)}, [str(m)])


def cmd_hook(args):
    h = schur.hook_partition(args.k, args.l, args.e)
    value = None if h is schur.ZERO else list(h)
    _emit(args, {"k": args.k, "l": args.l, "e": args.e, "partition": value}, ["ZERO" if value is None else _fmt(h)])


# vanish ------------------------------------------------------------------


def _verdict_lines(verdict: vc.VanishingVerdict) -> list[str]:
    lines = _kv(verdict.to_json())
    if verdict.guaranteed:
        lines.append("verdict: vanishes")
    else:
        lines.append("verdict: not covered by this theorem")
    return lines


def _emit_verdict(args, verdict: vc.VanishingVerdict) -> None:
    _emit(args, verdict.to_json(), _verdict_lines(verdict))


def cmd_a(args):
    _emit_verdict(args, vc.theorem_a(_ctx(args), _flatten(args.sym), _flatten(args.wedge), args.p, args.q))


def cmd_aprime(args):
    _emit_verdict(args, vc.theorem_a_prime(_ctx(args), args.lam, args.l, args.p, args.q))


def cmd_corb(args):
    if args.tensor is not None:
        _emit_verdict(args, vc.corollary_b_tensor(_ctx(args), args.tensor, args.p, args.q))
    elif args.lam is None:
        raise DomainError("give --lambda or --tensor")
    else:
        _emit_verdict(args, vc.corollary_b(_ctx(args), args.lam, args.p, args.q))


def cmd_corc(args):
    _emit_verdict(args, vc.corollary_c(_ctx(args), args.lam, args.p, args.q))


def _parse_bundle_spec(n: int, text: str):
    """``e=3;lambda=2,1;l=1`` or ``e=2;sym=1;wedge=1,2`` with optional ``k-ample`` and ``positivity``."""
    fields = {}
    for item in text.split(";"):
        if not item.strip():
            continue
        key, sep, value = item.partition("=")
        if not sep:
            raise DomainError(f"bundle spec item {item!r} is not key=value")
        fields[key.strip()] = value.strip()
    unknown = set(fields) - {"e", "lambda", "l", "sym", "wedge", "k-ample", "positivity"}
    if unknown:
        raise DomainError(f"unknown bundle spec keys {sorted(unknown)}")
    if "e" not in fields:
        raise DomainError("bundle spec needs e=<rank>")
    try:
        ctx = vc.PositivityContext(
            n,
            int(fields["e"]),
            vc.Positivity(fields.get("positivity", "E_AMPLE_L_NEF")),
            int(fields.get("k-ample", 0)),
        )
        if "lambda" in fields:
            if "sym" in fields or "wedge" in fields:
                raise DomainError("a bundle term is either lambda=... or sym/wedge lists")
            lam = pc.parse_partition(fields["lambda"])
            l = int(fields.get("l", 0))
            if not 0 <= l <= ctx.e - 1:
                raise DomainError(f"l must lie in [0, {ctx.e - 1}]")
            return ctx, vc.q_statistic(ctx.e, lam, l), l
        ks = _int_list(fields.get("sym", ""))
        js = _int_list(fields.get("wedge", ""))
    except (ValueError, argparse.ArgumentTypeError) as exc:
        if isinstance(exc, DomainError):
            raise
        raise DomainError(f"bad bundle spec {text!r}: {exc}") from None
    if any(k < 0 for k in ks):
        raise DomainError("symmetric exponents must be nonnegative")
    return ctx, vc.wedge_contribution(ctx.e, js), len(ks)


def cmd_multi(args):
    if not args.bundle:
        raise DomainError("give at least one --bundle")
    specs = [_parse_bundle_spec(args.n, text) for text in args.bundle]
    contexts = [c for c, _, _ in specs]
    verdict = vc.multi_bundle_verdict(contexts, [b for _, b, _ in specs], [l for _, _, l in specs], args.p, args.q)
    _emit_verdict(args, verdict)


def cmd_witness(args):
    js, ks = vc.aprime_to_a_witness(args.lam, args.l, args.e)
    decomp = schur.product_decompose(vc.witness_factors(js, ks), args.e)
    rec = {
        "partition": list(args.lam),
        "l": args.l,
        "e": args.e,
        "wedge": list(js),
        "sym": list(ks),
        "contribution": vc.wedge_contribution(args.e, js),
        "q": vc.q_statistic(args.e, args.lam, args.l),
        "multiplicity": str(decomp.get(args.lam)),
    }
    _emit(args, rec, _kv(rec))


def cmd_dominates(args):
    ks, js = _flatten(args.sym), _flatten(args.wedge)
    ok = vc.a_bound_dominates(args.e, ks, js, args.max_size)
    rec = {"e": args.e, "sym": ks, "wedge": js, "dominates": ok}
    _emit(args, rec, _kv(rec))


# bl ----------------------------------------------------------------------


def cmd_e1(args):
    page = bl.lemma_dprime_page(args.ks, args.p, args.t, args.s, args.e, args.extra)
    lines = [f"E1 column t={page.t}, degree s={page.s}: " + ("0" if page.is_zero else f"{len(page.summands)} summands")]
    lines += [f"({','.join(map(str, x.composition))})\t{x.bundle}" for x in page.summands]
    _emit(args, page.to_json(), lines)


def cmd_zero_bound(args):
    t_min = bl.forced_zero_bound(args.ks, args.p, args.e)
    _emit(args, {"ks": args.ks, "p": args.p, "e": args.e, "t_min": t_min}, [str(t_min)])


def _trace_lines(trace: bl.InductionTrace) -> list[str]:
    lines = _kv(
        {
            "step": trace.step,
            "r": trace.r,
            "base_p": trace.base_p,
            "target": str(trace.target),
            "vanishes_for_s_above": trace.proven_above,
            "expected_above": trace.expected_above,
            "closed": trace.closed,
        }
    )
    for ob in trace.obligations:
        data = ob.to_json()
        above = "all" if ob.vanishes_above is None else f">{ob.vanishes_above}"
        lines.append(
            f"  H^{{{ob.t},s>={ob.s}}}({ob.space}, {data['bundle']})  {ob.justification.value}  "
            f"vanishes {above}  {'ok' if ob.covered else 'OPEN'}"
        )
    return lines


def _run_trace(args, build: Callable[..., bl.InductionTrace]) -> int:
    try:
        trace = build(strict=True)
        failure = None
    except TraceClosureError as exc:
        trace, failure = exc.trace, str(exc)
    payload = trace.to_json()
    if failure is not None:
        payload["failure"] = failure
    _emit(args, payload, _trace_lines(trace) + ([f"failure: {failure}"] if failure else []))
    if failure is not None:
        sys.stderr.write(f"{PROG}: trace does not close: {failure}\n")
        return 2
    return 0


def cmd_trace1(args):
    return _run_trace(
        args,
        lambda strict: bl.induction_trace_step1(
            args.n, args.e, args.r, _flatten(args.wedge), args.k_ample, vc.Positivity(args.positivity), strict
        ),
    )


def cmd_trace2(args):
    return _run_trace(
        args,
        lambda strict: bl.induction_trace_step2(
            args.n,
            args.e,
            args.r,
            _flatten(args.sym),
            _flatten(args.wedge),
            args.k_ample,
            vc.Positivity(args.positivity),
            strict,
        ),
    )


# locus -------------------------------------------------------------------


def _problem(args, shape=None) -> loci.LocusProblem:
    shape = loci.Shape(shape or args.shape)
    return loci.LocusProblem(args.n, args.e, getattr(args, "f", None), args.k, shape, not args.no_line_twist)


def cmd_rho(args):
    problem = _problem(args)
    rec = {
        "shape": problem.shape.value,
        "n": problem.n,
        "e": problem.e,
        "f": problem.f,
        "k": problem.k,
        "codim": loci.expected_codim(problem),
        "rho": loci.expected_dim(problem),
    }
    _emit(args, rec, _kv(rec))


def _term_lines(terms) -> list[str]:
    lines = []
    for term in terms:
        line = f"lambda={_fmt(term.source_lambda)}\tE: {_fmt(term.e_side)}"
        if term.f_side is not None:
            line += f"\tF: {_fmt(term.f_side)}"
        lines.append(line)
    return lines or ["0"]


def cmd_lascoux(args):
    terms = loci.lascoux_terms(args.i, args.e, args.f, args.k)
    _emit(args, {"i": args.i, "terms": [t.to_json() for t in terms]}, _term_lines(terms))


def cmd_jpw(args):
    terms = loci.jpw_terms(args.i, args.e, args.k, loci.Shape(args.shape))
    _emit(args, {"i": args.i, "shape": args.shape, "terms": [t.to_json() for t in terms]}, _term_lines(terms))


def cmd_qcheck(args):
    result = loci.q_hook_identity_check(args.e, args.f, args.k, args.lam)
    rec = {"partition": list(args.lam), "lhs": result.lhs, "rhs": result.rhs, "equal": result.equal}
    _emit(args, rec, _kv(rec))


def _locus_lines(verdict: loci.LocusVerdict) -> list[str]:
    lines = _kv({"theorem": verdict.theorem, "rho": verdict.rho, "q": verdict.q, "conclusion": verdict.conclusion.value})
    if verdict.report is not None:
        rep = verdict.report
        lines += _kv({"checked": rep.checked, "violations": len(rep.violations)})
        if rep.first_violation is not None:
            v = rep.first_violation
            lines.append(f"first_violation: lambda={_fmt(v.lam)} q={v.q} p={v.p} bound={v.bound}")
    return lines


def cmd_theorem_e(args):
    verdict = loci.theorem_e_verdict(_problem(args, "GENERAL"), args.q, args.check_bound)
    _emit(args, verdict.to_json(), _locus_lines(verdict))


def cmd_theorem_f(args):
    verdict = loci.theorem_f_verdict(_problem(args), args.q)
    _emit(args, verdict.to_json(), _locus_lines(verdict))


# parser ------------------------------------------------------------------


def _cell_arg(text: str) -> tuple[int, int]:
    parts = _int_list(text)
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("cell is row,col")
    return parts[0], parts[1]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="canonical JSON output")

    positivity = argparse.ArgumentParser(add_help=False)
    positivity.add_argument(
        "--positivity", choices=[p.value for p in vc.Positivity], default=vc.Positivity.E_AMPLE_L_NEF.value
    )
    positivity.add_argument("--k-ample", dest="k_ample", type=int, default=0, help="Sommese k-ampleness defect")

    parser = argparse.ArgumentParser(prog=PROG, description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--json", dest="json_top", action="store_true", help="canonical JSON output")
    groups = parser.add_subparsers(dest="group", required=True)

    def leaf(sub, name, func, help_text, parents=()):
        p = sub.add_parser(name, help=help_text, description=help_text, parents=[common, *parents])
        p.set_defaults(func=func)
        return p

    # partition
    g = groups.add_parser("partition", help="partitions and Ferrers diagrams").add_subparsers(dest="cmd", required=True)
    leaf(g, "conjugate", cmd_conjugate, "conjugate partition").add_argument("lam", type=_partition_arg)
    leaf(g, "rank", cmd_rank, "Durfee rank").add_argument("lam", type=_partition_arg)
    p = leaf(g, "hooks", cmd_hooks, "hook lengths of every cell, or of one cell")
    p.add_argument("lam", type=_partition_arg)
    p.add_argument("--cell", type=_cell_arg)
    p = leaf(g, "adjoin", cmd_adjoin, "lambda(k): adjoin k parts equal to the rank")
    p.add_argument("lam", type=_partition_arg)
    p.add_argument("--k", type=int, required=True)
    leaf(g, "decompose", cmd_decompose, "split as (l, mu, nu) around the Durfee square").add_argument(
        "lam", type=_partition_arg
    )
    p = leaf(g, "add-rect", cmd_add_rect, "factorization formula: add m columns of height v")
    p.add_argument("lam", type=_partition_arg)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p = leaf(g, "strip", cmd_strip, "is outer/inner a horizontal or vertical strip")
    p.add_argument("inner", type=_partition_arg)
    p.add_argument("outer", type=_partition_arg)

    # schur
    g = groups.add_parser("schur", help="Schur power dimensions and Pieri products").add_subparsers(
        dest="cmd", required=True
    )
    p = leaf(g, "dim", cmd_dim, "dimension of S_lambda V")
    p.add_argument("lam", type=_partition_arg)
    p.add_argument("--v", type=int, required=True)
    p = leaf(g, "pieri", cmd_pieri, "S_lambda tensor S^k or wedge^j (Pieri rules)")
    p.add_argument("lam", type=_partition_arg)
    p.add_argument("--sym", type=int)
    p.add_argument("--wedge", type=int)
    p.add_argument("--v", type=int, required=True)
    p = leaf(g, "product", cmd_product, "decompose a product of symmetric and wedge powers")
    p.add_argument("--sym", type=_int_list, action="append")
    p.add_argument("--wedge", type=_int_list, action="append")
    p.add_argument("--v", type=int, required=True)
    leaf(g, "multiplicity", cmd_multiplicity, "multiplicity of S_lambda in the tensor power").add_argument(
        "lam", type=_partition_arg
    )
    p = leaf(g, "hook", cmd_hook, "hook partition (k|l) with zero conventions for rank e")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--e", type=int, required=True)

    # vanish
    g = groups.add_parser("vanish", help="vanishing criteria (Theorems A, A', Corollaries B, C)").add_subparsers(
        dest="cmd", required=True
    )

    def degrees(p, with_e=True):
        p.add_argument("--n", type=int, required=True)
        if with_e:
            p.add_argument("--e", type=int, required=True)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--q", type=int, required=True)

    p = leaf(g, "a", cmd_a, "Theorem A: products of S^k and wedge^j twisted by det^{l+n-p}", [positivity])
    degrees(p)
    p.add_argument("--sym", type=_int_list, action="append")
    p.add_argument("--wedge", type=_int_list, action="append")
    p = leaf(g, "aprime", cmd_aprime, "Theorem A': S_lambda twisted by det^{l+n-p}", [positivity])
    degrees(p)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--l", type=int, required=True)
    p = leaf(g, "corb", cmd_corb, "Corollary B: twist by det^{l(lambda)+n-p}, vanishing for p+q > n", [positivity])
    degrees(p)
    p.add_argument("--lambda", dest="lam", type=_partition_arg)
    p.add_argument("--tensor", type=int, help="tensor power degree instead of a Schur power")
    p = leaf(g, "corc", cmd_corc, "Corollary C: twist by det^{n-p}", [positivity])
    degrees(p)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p = leaf(g, "multi", cmd_multi, "several bundles: n plus the sum of the contributions")
    degrees(p, with_e=False)
    p.add_argument("--bundle", action="append", help="e=<rank>;sym=..;wedge=.. or e=<rank>;lambda=..;l=..")
    p = leaf(g, "witness", cmd_witness, "symmetric and wedge powers containing S_lambda with the same bound")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p = leaf(g, "dominates", cmd_dominates, "check every component of a product against Theorem A'")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--sym", type=_int_list, action="append")
    p.add_argument("--wedge", type=_int_list, action="append")
    p.add_argument("--max-size", dest="max_size", type=int)

    # bl
    g = groups.add_parser("bl", help="Borel-Le Potier E1 pages and induction traces").add_subparsers(
        dest="cmd", required=True
    )
    p = leaf(g, "e1", cmd_e1, "E1 term of O_E(k_1..k_h) (Lemma D')")
    p.add_argument("--ks", type=_int_list, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--extra", type=_bundle_arg, default=parse_bundle("O"))
    p = leaf(g, "zero-bound", cmd_zero_bound, "first column that can be nonzero")
    p.add_argument("--ks", type=_int_list, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p = leaf(g, "trace1", cmd_trace1, "first induction step: exterior powers at codegree r", [positivity])
    for name in ("--n", "--e", "--r"):
        p.add_argument(name, type=int, required=True)
    p.add_argument("--wedge", type=_int_list, action="append")
    p = leaf(g, "trace2", cmd_trace2, "second induction step: symmetric powers on top", [positivity])
    for name in ("--n", "--e", "--r"):
        p.add_argument(name, type=int, required=True)
    p.add_argument("--sym", type=_int_list, action="append", required=True)
    p.add_argument("--wedge", type=_int_list, action="append")

    # locus
    g = groups.add_parser("locus", help="degeneracy loci (Theorems E, F)").add_subparsers(dest="cmd", required=True)
    shapes = [s.value for s in loci.Shape]
    p = leaf(g, "rho", cmd_rho, "expected dimension")
    for name in ("--n", "--e", "--k"):
        p.add_argument(name, type=int, required=True)
    p.add_argument("--f", type=int)
    p.add_argument("--shape", choices=shapes, default="GENERAL")
    p.add_argument("--no-line-twist", action="store_true", help=argparse.SUPPRESS)
    p = leaf(g, "lascoux", cmd_lascoux, "terms of Lascoux's resolution in degree i")
    for name in ("--i", "--e", "--f", "--k"):
        p.add_argument(name, type=int, required=True)
    p = leaf(g, "jpw", cmd_jpw, "terms of the symmetric or skew resolution in degree i")
    for name in ("--i", "--e", "--k"):
        p.add_argument(name, type=int, required=True)
    p.add_argument("--shape", choices=["SYMMETRIC", "SKEW"], required=True)
    p = leaf(g, "qcheck", cmd_qcheck, "statistic of lambda(k) against its closed form")
    for name in ("--e", "--f", "--k"):
        p.add_argument(name, type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p = leaf(g, "theorem-e", cmd_theorem_e, "Theorem E: restriction map for a general map E* -> F (x) L")
    for name in ("--n", "--e", "--f", "--k", "--q"):
        p.add_argument(name, type=int, required=True)
    p.add_argument("--check-bound", dest="check_bound", type=int)
    p.add_argument("--no-line-twist", action="store_true", help="declare L^k >= det E (x) det F false")
    p = leaf(g, "theorem-f", cmd_theorem_f, "Theorem F: symmetric or skew maps E* -> E (x) L")
    for name in ("--n", "--e", "--k", "--q"):
        p.add_argument(name, type=int, required=True)
    p.add_argument("--shape", choices=["SYMMETRIC", "SKEW"], required=True)
    p.add_argument("--no-line-twist", action="store_true", help="declare L^k >= det E false")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        status = args.func(args)
    except DomainError as exc:
        sys.stderr.write(f"{PROG}: error: {exc}\n")
        return 2
    except Exception as exc:  # noqa: BLE001
        sys.stderr.write(f"{PROG}: internal error: {exc!r}\n")
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
