"""Command-line front end.  Every command prints one JSON document.

Exit codes: 0 on success, 1 for a domain error (the document then names the
error), 2 for malformed input or bad usage.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .algebra.perron import check_primitive, perron_data
from .comparison import compare_invariants, rotation_isomorphic, trace_range_equal, verify_iso_certificate
from .dimgroup import dg_from_diagram
from .entropy import (
    DEFAULT_BUDGET,
    base_entropy,
    estimate_suspension_entropy,
    suspension_entropy,
    suspension_measure,
    time_t_minimality_status,
)
from .errors import ParseError, SuspinvError
from .invariant import MINIMALITY_ASSUMPTION, suspension_invariant, trace_range
from .systems import APERIODICITY_BOUND, SFT, Substitution, to_diagram, validate_substitution

APERIODICITY_NOTE = (
    f"aperiodicity checked only through p(n) >= n + 1 for n <= {APERIODICITY_BOUND}"
)
UNIQUE_TRACE_NOTE = "primitive stationary diagram: the dimension group is simple with a unique normalised trace"
MEASURE_NOTE = "Lebesgue in the flow direction times the unique invariant measure of the base"


# commands ---------------------------------------------------------------------

def cmd_describe(args) -> dict:
    system = io.parse_system(io.load_json(args.system))
    report = {"system": io.emit_system(system)}
    if isinstance(system, SFT):
        a = system.adjacency
        primitive = check_primitive(a)
        report.update({"adjacency": a.tolist(), "primitive": primitive})
        if primitive:
            field, lam, _, _ = perron_data(a)
            report.update({"perron_field": io.emit_field(field), "perron_value": io.emit_element(lam)})
        report["assumptions"] = []
        return report
    notes = []
    if isinstance(system, Substitution):
        validate_substitution(system)
        report["aperiodicity_check"] = {"passed": True, "bound": APERIODICITY_BOUND}
        notes.append(APERIODICITY_NOTE)
    d = to_diagram(system)
    g = dg_from_diagram(d)
    report.update({
        "primitive": True,
        "incidence": d.incidence.tolist(),
        "perron_field": io.emit_field(g.field),
        "perron_value": io.emit_element(g.lam),
        "trace_vec": [io.emit_element(w) for w in g.trace_vec],
        "order_unit": io.emit_group_element(g.order_unit()),
        "unique_trace": UNIQUE_TRACE_NOTE,
        "assumptions": notes,
    })
    return report


def _invariants(*pairs):
    # parse every document before computing anything
    parsed = [(io.parse_system(io.load_json(s)), io.parse_time_arg(t)) for s, t in pairs]
    return [suspension_invariant(system, t) for system, t in parsed]


def _inv_notes(*invs) -> list:
    notes = [MINIMALITY_ASSUMPTION]
    if any(isinstance(inv.system, Substitution) for inv in invs):
        notes.append(APERIODICITY_NOTE)
    return notes


def cmd_invariant(args) -> dict:
    (inv,) = _invariants((args.system, args.t))
    doc = io.emit_invariant(inv)
    doc["assumptions"] = _inv_notes(inv)
    return doc


def cmd_trace_range(args) -> dict:
    (inv,) = _invariants((args.system, args.t))
    return {"trace_range": io.emit_trace_range(trace_range(inv)), "assumptions": _inv_notes(inv)}


def cmd_compare_ranges(args) -> dict:
    inv1, inv2 = _invariants((args.system1, args.t1), (args.system2, args.t2))
    return {"equal": trace_range_equal(trace_range(inv1), trace_range(inv2)),
            "assumptions": _inv_notes(inv1, inv2)}


def cmd_rotation_compare(args) -> dict:
    t1, t2 = io.parse_time_arg(args.t1), io.parse_time_arg(args.t2)
    return {"isomorphic": rotation_isomorphic(t1, t2), "assumptions": []}


def cmd_compare_invariants(args) -> dict:
    inv1, inv2 = _invariants((args.system1, args.t1), (args.system2, args.t2))
    doc = compare_invariants(inv1, inv2).to_dict()
    doc["assumptions"] = _inv_notes(inv1, inv2)
    return doc


def cmd_check_certificate(args) -> dict:
    cert = io.parse_certificate(io.load_json(args.certificate))
    inv1, inv2 = _invariants((args.system1, args.t1), (args.system2, args.t2))
    doc = verify_iso_certificate(inv1, inv2, cert).to_dict()
    doc["certificate"] = io.emit_certificate(cert)
    notes = _inv_notes(inv1, inv2)
    if cert.assume_measures_agree:
        notes.append("invariant measures of the flow and of its time-t map assumed to coincide")
    doc["assumptions"] = notes
    return doc


def cmd_entropy(args) -> dict:
    system = io.parse_system(io.load_json(args.system))
    t = io.parse_time_arg(args.t)
    h = suspension_entropy(base_entropy(system), t)
    doc = {"exact": io.emit_entropy(h), "approx": float(h), "assumptions": []}
    if isinstance(system, Substitution):
        doc["assumptions"].append(APERIODICITY_NOTE)
    doc["time_t_minimality"] = time_t_minimality_status(t).value
    return doc


def cmd_estimate_entropy(args) -> dict:
    system = io.parse_system(io.load_json(args.system))
    t = io.parse_rational(args.t)
    eps = io.parse_rational(args.eps)
    if args.n < 1 or args.budget < 1:
        raise ParseError("--n and --budget must be positive")
    est = estimate_suspension_entropy(system, t, args.n, eps, args.budget)
    h = suspension_entropy(base_entropy(system), t)
    return {
        "estimate": est.estimate,
        "naive_estimate": est.naive,
        "separated_count": est.count,
        "separated_count_half_horizon": est.count_half,
        "n": est.n,
        "eps": io.rational_str(est.eps),
        "t": io.rational_str(est.t),
        "exact": io.emit_entropy(h),
        "approx": float(h),
        "assumptions": [],
    }


def cmd_measure(args) -> dict:
    system = io.parse_system(io.load_json(args.system))
    if isinstance(system, SFT):
        word = [int(x) for x in args.word.split(",")] if args.word else []
    else:
        word = list(args.word)
    a, b = (io.parse_rational(x) for x in args.interval)
    m = suspension_measure(system, word, (a, b))
    return {"measure": io.emit_number(m), "approx": float(m), "assumptions": [MEASURE_NOTE]}


# parser -------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stdout.write(io.dumps({"error": "UsageError", "message": message}))
        sys.exit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="suspinv", description="Invariants of time-t maps of suspension flows.")
    parser.add_argument("-o", "--output", help="write the report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("describe", help="validate a system and show its stationary presentation")
    p.add_argument("--system", required=True)
    p.set_defaults(func=cmd_describe)

    for name, func, text in [
        ("invariant", cmd_invariant, "Elliott invariant of the time-t crossed product"),
        ("trace-range", cmd_trace_range, "image of K_0 under the unique trace"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("--system", required=True)
        p.add_argument("--t", required=True, help="shorthand such as sqrt2 or 1/3, or a number document")
        p.set_defaults(func=func)

    for name, func, text in [
        ("compare-ranges", cmd_compare_ranges, "decide equality of two trace ranges"),
        ("compare-invariants", cmd_compare_invariants, "check computable necessary conditions"),
        ("check-certificate", cmd_check_certificate, "verify an explicit isomorphism certificate"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("--system1", required=True)
        p.add_argument("--t1", required=True)
        p.add_argument("--system2", required=True)
        p.add_argument("--t2", required=True)
        if name == "check-certificate":
            p.add_argument("--certificate", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("rotation-compare", help="compare rotation algebras A_t1 and A_t2")
    p.add_argument("--t1", required=True)
    p.add_argument("--t2", required=True)
    p.set_defaults(func=cmd_rotation_compare)

    p = sub.add_parser("entropy", help="exact entropy of the time-t map")
    p.add_argument("--system", required=True)
    p.add_argument("--t", required=True)
    p.set_defaults(func=cmd_entropy)

    p = sub.add_parser("estimate-entropy", help="separated-set estimate of the time-t entropy")
    p.add_argument("--system", required=True)
    p.add_argument("--t", required=True, help="rational, e.g. 1/2")
    p.add_argument("--n", type=int, default=12)
    p.add_argument("--eps", default="1/10")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_estimate_entropy)

    p = sub.add_parser("measure", help="invariant measure of cylinder x [a, b)")
    p.add_argument("--system", required=True)
    p.add_argument("--word", default="", help="letters, or comma-separated edge indices for an sft")
    p.add_argument("--interval", nargs=2, default=["0", "1"], metavar=("A", "B"))
    p.set_defaults(func=cmd_measure)
    return parser


def run(args: argparse.Namespace) -> tuple[int, dict]:
    try:
        return 0, args.func(args)
    except ParseError as exc:
        return 2, io.error_document(exc)
    except SuspinvError as exc:
        return 1, io.error_document(exc)
    except (ValueError, TypeError) as exc:
        # malformed values that only show up once a constructor sees them
        return 2, {"error": "ParseError", "message": str(exc)}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code, doc = run(args)
    text = io.dumps(doc)
    if args.output and code == 0:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
