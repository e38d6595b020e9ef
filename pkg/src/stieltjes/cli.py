"""Command-line front end (``stj``).

Exit status: 0 on success, 2 on a diagnostic (syntax or validation), 3 on an
engine error. Engine errors print their stable code, e.g. ``E_NOT_INCREASING``.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction
from typing import Callable, Optional

from . import dsl
from .engine import (
    IntegralResult,
    convergence_table,
    discrepancy,
    ds_integrate,
    is_rds_integrable,
    parts_check,
    rds_integrate,
)
from .errors import StieltjesError
from .integrator import Integrator
from .numerics import MAX_DEGREE, degree_cap, format_rational, parse_rational
from .riemann import DEFAULT_DELTAS, DEFAULT_MESHES, DEFAULT_ROUNDS, mrs_probe, rps_probe, rrs_probe

EXIT_OK, EXIT_DIAGNOSTIC, EXIT_ENGINE = 0, 2, 3


def _r(q: Fraction) -> str:
    return format_rational(q)


def _approx(q: Fraction) -> str:
    return f"~ {float(q):.15g}"


# -- query execution --------------------------------------------------------


class Runner:
    def __init__(self, program: dsl.Program, tol: Fraction, max_refine: int,
                 method: str = "auto", seed: Optional[int] = None):
        self.program = program
        self.ev = dsl.Evaluator(program)
        self.tol, self.max_refine, self.method, self.seed = tol, max_refine, method, seed

    def records(self):
        for q in self.program.queries:
            yield self.run_query(q)

    def run_query(self, q: dsl.Query) -> dict:
        a, b = q.interval.lo, q.interval.hi
        fns = [self.ev.function(n, a, b) for n in q.names]
        handler: Callable = getattr(self, f"q_{q.kind}")
        rec = {"query": dsl.print_statement(q), "command": q.kind}
        rec.update(handler(q, *fns))
        return rec

    def _integral(self, fn, f, alpha) -> dict:
        return result_record(fn(f, Integrator.coerce(alpha), self.tol, self.max_refine, self.method))

    def q_integrate(self, q, f, alpha):
        return {"rds": self._integral(rds_integrate, f, alpha)}

    def q_compare(self, q, f, alpha):
        alpha = Integrator.coerce(alpha)
        return {
            "rds": self._integral(rds_integrate, f, alpha),
            "ds": self._integral(ds_integrate, f, alpha),
            "discrepancy": _r(discrepancy(f, alpha)),
        }

    def q_parts(self, q, alpha, beta):
        pc = parts_check(Integrator.coerce(alpha), Integrator.coerce(beta))
        return {
            "lhs": _r(pc.lhs),
            "rhs": _r(pc.rhs),
            "holds": pc.holds,
            "corrections": [{"at": _r(t), "value": _r(c)} for t, c in pc.corrections],
        }

    def q_decompose(self, q, alpha):
        al = Integrator.coerce(alpha)
        pos, neg = al.jordan()
        rec = {
            "alpha_a": _r(al(al.a)),
            "continuous": str(al.continuous),
            "left": [{"at": _r(l), "weight": _r(w)} for l, w in al.left.terms],
            "right": [{"at": _r(l), "weight": _r(w)} for l, w in al.right.terms],
            "tail_bound": _r(al.tail_bound),
            "variation": _r(al.total_variation()),
            "bv_norm": _r(al.bv_norm()),
            "positive": str(pos),
            "negative": str(neg),
        }
        if self.seed is not None:
            rng = random.Random(self.seed)
            pts = [al.a + (al.b - al.a) * Fraction(rng.randint(0, 1000), 1000) for _ in range(20)]
            pts += al.jump_locations()
            ok = all(pos(x) - neg(x) + al(al.a) == al(x) for x in pts)
            ok = ok and all(alpha(x) == al(x) for x in pts)
            rec["spot_checks"] = {"seed": self.seed, "points": len(pts), "ok": ok}
        return rec

    def q_check(self, q, f, alpha):
        ok, reason = is_rds_integrable(f, Integrator.coerce(alpha))
        return {"integrable": ok, "reason": reason}

    def q_sums(self, q, f, alpha):
        if q.probe == "mrs":
            rows = mrs_probe(f, alpha, q.args or DEFAULT_MESHES)
        elif q.probe == "rrs":
            rows = rrs_probe(f, alpha, q.args or DEFAULT_DELTAS)
        else:
            rounds = int(q.args[0]) if q.args else DEFAULT_ROUNDS
            rows = rps_probe(f, alpha, None, rounds)
        return {
            "probe": q.probe,
            "rows": [
                {"target": _r(r.target), "mesh": _r(r.mesh), "gap": _r(r.gap), "lo": _r(r.lo),
                 "hi": _r(r.hi), "intervals": r.intervals}
                for r in rows
            ],
        }


def result_record(res: IntegralResult) -> dict:
    rec = {"kind": res.kind}
    if res.is_exact:
        rec["value"] = _r(res.value)
    else:
        rec["lo"], rec["hi"] = _r(res.lo), _r(res.hi)
        rec["converged"] = res.converged
    rec["tail_error"] = _r(res.tail_error)
    rec["bound"] = _r(res.bound)
    rec["refinements"] = res.refinements
    return rec


# -- text rendering ---------------------------------------------------------


def _text_result(label: str, rec: dict) -> list[str]:
    if rec["kind"] == "exact":
        lines = [f"  {label} = {rec['value']}   {_approx(Fraction(rec['value']))}"]
    else:
        lo, hi = Fraction(rec["lo"]), Fraction(rec["hi"])
        flag = "" if rec["converged"] else "   (not converged)"
        lines = [f"  {label} in [{rec['lo']}, {rec['hi']}]   {_approx(lo)} .. {float(hi):.15g}{flag}",
                 f"  {label} refinements = {rec['refinements']}"]
    if Fraction(rec["tail_error"]):
        lines.append(f"  {label} tail error <= {rec['tail_error']} * sup|f| (sup|f| <= {rec['bound']})")
    return lines


def render_text(rec: dict) -> str:
    out = [rec["query"]]
    cmd = rec["command"]
    if cmd in ("integrate", "compare"):
        out += _text_result("rds", rec["rds"])
    if cmd == "compare":
        out += _text_result("ds", rec["ds"])
        out.append(f"  discrepancy = {rec['discrepancy']}   {_approx(Fraction(rec['discrepancy']))}")
    elif cmd == "parts":
        out.append(f"  lhs = {rec['lhs']}")
        out.append(f"  rhs = {rec['rhs']}")
        for c in rec["corrections"]:
            out.append(f"  correction at {c['at']} = {c['value']}")
        out.append(f"  holds = {'yes' if rec['holds'] else 'no'}")
    elif cmd == "decompose":
        out.append(f"  alpha(a) = {rec['alpha_a']}")
        out.append(f"  continuous: {rec['continuous']}")
        for side in ("left", "right"):
            terms = ", ".join(f"{t['weight']} at {t['at']}" for t in rec[side]) or "none"
            out.append(f"  {side} jumps: {terms}")
        if Fraction(rec["tail_bound"]):
            out.append(f"  tail bound = {rec['tail_bound']}")
        out.append(f"  total variation = {rec['variation']}")
        out.append(f"  bv norm = {rec['bv_norm']}")
        out.append(f"  P: {rec['positive']}")
        out.append(f"  N: {rec['negative']}")
        if "spot_checks" in rec:
            sc = rec["spot_checks"]
            out.append(f"  spot checks (seed {sc['seed']}): {sc['points']} points, {'ok' if sc['ok'] else 'FAILED'}")
    elif cmd == "check":
        out.append(f"  integrable = {'yes' if rec['integrable'] else 'no'} ({rec['reason']})")
    elif cmd == "table":
        for r in rec["rows"]:
            out += _text_result(f"n={r['n']}", r)
    elif cmd == "sums":
        head = {"mrs": "mesh<=", "rps": "round", "rrs": "alpha-mesh<="}[rec["probe"]]
        out.append(f"  {head:>12} {'mesh':>14} {'intervals':>9}  gap")
        for r in rec["rows"]:
            out.append(f"  {r['target']:>12} {r['mesh']:>14} {r['intervals']:>9}  {r['gap']}   {_approx(Fraction(r['gap']))}")
    return "\n".join(out)


# -- argument handling ------------------------------------------------------


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=_rational_arg, default=Fraction(1, 10**6),
                        help="enclosure width target, as a rational (default 1/1000000)")
    common.add_argument("--max-refine", type=int, default=60, help="refinement rounds (default 60)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized spot checks")
    common.add_argument("--method", choices=("auto", "exact", "enclosure"), default="auto",
                        help="integration path (default auto = exact)")

    p = argparse.ArgumentParser(prog="stj", description="Exact Ross-Darboux-Stieltjes integration.")
    sub = p.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", parents=[common], help="run a .stj program ('-' for stdin)")
    run.add_argument("file")

    def inline(name, helptext, *exprs, probe=False):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        if probe:
            sp.add_argument("probe", choices=("mrs", "rps", "rrs"))
        for e in exprs:
            sp.add_argument(e, help="DSL expression")
        sp.add_argument("--on", required=True, help='closed interval, e.g. "[0,1]"')
        return sp

    inline("integrate", "RDS integral of F against A", "F", "A")
    inline("compare", "RDS vs classical DS and their discrepancy", "F", "A")
    inline("parts", "integration by parts check", "A", "B")
    inline("decompose", "saltus and Jordan decompositions", "A")
    inline("check", "RDS integrability criterion", "F", "A")
    sums = inline("sums", "Riemann-type probe tables", "F", "A", probe=True)
    sums.add_argument("--args", default=None,
                      help="comma-separated meshes (mrs), alpha-meshes (rrs) or a round count (rps)")
    table = inline("table", "integrals of a family F_n against A, n = 0..N", "F", "A")
    table.add_argument("--upto", type=int, default=10, help="largest n (default 10)")
    return p


_N = re.compile(r"\bn\b")


def run_table(ns) -> int:
    """``stj table "x^n" A``: each n is substituted into F as an integer literal."""
    if ns.upto < 0:
        print("stj: --upto must be non-negative", file=sys.stderr)
        return EXIT_DIAGNOSTIC
    texts = []
    for n in range(ns.upto + 1):
        texts.append(f"let f = {_N.sub(str(n), ns.F)};\nlet alpha = {ns.A};\nintegrate f dalpha on {ns.on};\n")
    with degree_cap(max(MAX_DEGREE, ns.upto)):
        try:
            programs = [dsl.parse(t) for t in texts]
        except dsl.Diagnostic as d:
            print(f"<command line>:{d}", file=sys.stderr)
            print("program was:\n" + texts[-1], file=sys.stderr, end="")
            return EXIT_DIAGNOSTIC
        try:
            q = programs[0].queries[0]
            a, b = q.interval.lo, q.interval.hi
            fs = [dsl.Evaluator(p).function("f", a, b) for p in programs]
            alpha = Integrator.coerce(dsl.Evaluator(programs[0]).function("alpha", a, b))
            results = convergence_table(fs, alpha, ns.tol)
        except StieltjesError as exc:
            print(f"stj: error[{exc.code}]: {exc}", file=sys.stderr)
            return EXIT_ENGINE
    rec = {"query": f"table {ns.F} d {ns.A} on {ns.on}", "command": "table",
           "rows": [dict(n=n, **result_record(r)) for n, r in enumerate(results)]}
    if ns.format == "json":
        print(json.dumps(rec, sort_keys=True))
    else:
        print(render_text(rec))
    return EXIT_OK


def synthesize(ns) -> str:
    """Program text for an inline subcommand."""
    cmd = ns.command
    if cmd == "parts":
        lets = [("alpha", ns.A), ("beta", ns.B)]
        query = "parts alpha beta"
    elif cmd == "decompose":
        lets = [("alpha", ns.A)]
        query = "decompose alpha"
    else:
        lets = [("f", ns.F), ("alpha", ns.A)]
        if cmd == "sums":
            query = f"sums {ns.probe} f dalpha" + (f" ({ns.args})" if ns.args else "")
        else:
            query = f"{cmd} f dalpha"
    lines = [f"let {n} = {e};" for n, e in lets]
    lines.append(f"{query} on {ns.on};")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    if ns.command == "table":
        return run_table(ns)
    if ns.command == "run":
        source = ns.file
        try:
            if ns.file == "-":
                text = sys.stdin.buffer.read()
            else:
                with open(ns.file, "rb") as fh:
                    text = fh.read()
        except OSError as exc:
            print(f"stj: cannot read {ns.file}: {exc.strerror}", file=sys.stderr)
            return EXIT_ENGINE
    else:
        source = "<command line>"
        text = synthesize(ns)

    try:
        program = dsl.parse(text)
    except dsl.Diagnostic as d:
        print(f"{source}:{d}", file=sys.stderr)
        if ns.command != "run":
            print("program was:\n" + text, file=sys.stderr, end="")
        return EXIT_DIAGNOSTIC

    runner = Runner(program, ns.tol, ns.max_refine, ns.method, ns.seed)
    try:
        for rec in runner.records():
            if ns.format == "json":
                print(json.dumps(rec, sort_keys=True))
            else:
                print(render_text(rec))
            sys.stdout.flush()
    except StieltjesError as exc:
        print(f"stj: error[{exc.code}]: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    except ValueError as exc:
        print(f"stj: error[E_INVALID]: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
