"""Command line front end: ``ntupled classify|solve|verify|lemmas``.

Every command prints a short human summary followed by a line
``--- report ---`` and the JSON report.  ``--report PATH`` also writes the
JSON to a file.  Reports are deterministic: keys are sorted, fractions are
written as ``"p/q"`` and nothing time-dependent is recorded.

Exit codes
----------
0 success; 1 a verified conclusion is false or the lemma suite found a
violation; 2 malformed input; 3 a solver gate failed; 4 the iteration did
not converge; 5 the oracle refused (hypotheses not verified, infinite
space, size cap); 6 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .errors import (
    BadArity,
    DimensionMismatch,
    DomainViolation,
    GateFailed,
    HypothesesNotMachineVerified,
    InfiniteSpaceUndecidable,
    OutOfRangeEntry,
    ParseError,
    SectionFailure,
    ShapeMismatch,
    SizeLimit,
    UnknownPreset,
)
from .index_algebra import build_from_matrix, is_member_U, is_permuted, preset, to_upsilon
from .instance import load_instance, parse_matrix_text, parse_partition
from .oracle import THEOREMS, certify_theorem, lemma_suite
from .solver import solve

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_PARSE = 2
EXIT_GATE = 3
EXIT_NONCONVERGENCE = 4
EXIT_REFUSED = 5
EXIT_IO = 6

REPORT_MARKER = "--- report ---"

_PARSE_ERRORS = (ParseError, OutOfRangeEntry, ShapeMismatch, DomainViolation, DimensionMismatch,
                 UnknownPreset, BadArity)


def _default(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj, key=repr)
    return str(obj)


def dumps(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2, default=_default)


def _emit(lines, report, args, out):
    for line in lines:
        print(line, file=out)
    text = dumps(report)
    print(REPORT_MARKER, file=out)
    print(text, file=out)
    if getattr(args, "report", None):
        Path(args.report).write_text(text + "\n", encoding="utf-8")


# ----------------------------------------------------------------------------
# classify

def cmd_classify(args, out) -> int:
    if args.matrix is not None or args.matrix_file is not None:
        text = args.matrix if args.matrix is not None else Path(args.matrix_file).read_text()
        rows = parse_matrix_text(text)
        n = len(rows)
        op = build_from_matrix(n, rows)
        part = parse_partition(args.partition or "odd-even", n)
        source = "matrix"
    else:
        op, part = preset(args.preset, args.n)
        n = op.n
        if args.partition:
            part = parse_partition(args.partition, n)
        source = f"preset {args.preset}"
    member = is_member_U(op, part)
    permuted, bad_row = is_permuted(op)
    sigmas = to_upsilon(op).sigmas
    lines = [f"operation ({source}), n={n}, partition A={sorted(part.A)} B={sorted(part.B)}",
             str(op)]
    if member:
        lines.append(f"in U_ι{n}")
    else:
        lines.append(f"NOT in U_ι{n}; {len(member.witnesses)} witness(es):")
        for w in member.witnesses:
            lines.append(f"  ({w.pair[0]},{w.pair[1]}) -> {w.value} breaks condition ({w.condition})")
    lines.append("permuted" if permuted else f"not permuted (row {bad_row} repeats an index)")
    for i, s in enumerate(sigmas, 1):
        lines.append(f"  sigma_{i} = {list(s)}")
    report = {
        "command": "classify",
        "n": n,
        "matrix": op.rows,
        "partition": {"A": sorted(part.A), "B": sorted(part.B)},
        "in_U": member.member,
        "witnesses": [{"pair": list(w.pair), "value": w.value, "condition": w.condition}
                      for w in member.witnesses],
        "permuted": permuted,
        "first_non_permutation_row": bad_row,
        "upsilon": [list(s) for s in sigmas],
    }
    _emit(lines, report, args, out)
    return EXIT_OK


# ----------------------------------------------------------------------------
# solve

def _write_trace(path, trace):
    with open(path, "w", encoding="utf-8") as fh:
        for rec in trace.records():
            fh.write(json.dumps(rec, sort_keys=True, default=_default) + "\n")


def cmd_solve(args, out) -> int:
    inst = load_instance(args.instance)
    try:
        result = solve(inst, tol=args.tol, max_iters=args.max_iters)
    except GateFailed as exc:
        report = {"command": "solve", "status": "gate_failed", "gate": exc.reason,
                  "hypotheses": exc.report}
        _emit([f"instance {inst.name}: gate {exc.reason} failed"], report, args, out)
        return EXIT_GATE
    except SectionFailure as exc:
        report = {"command": "solve", "status": "section_failure", "error": str(exc),
                  "steps": exc.trace.steps if exc.trace else 0}
        if args.trace and exc.trace is not None:
            _write_trace(args.trace, exc.trace)
        _emit([f"instance {inst.name}: {exc}"], report, args, out)
        return EXIT_NONCONVERGENCE
    if args.trace:
        _write_trace(args.trace, result.trace)
    trace = result.trace
    report = {"command": "solve", **result.report,
              "final_nabla_residual": trace.nabla_residuals[-1] if trace.nabla_residuals else 0}
    lines = [f"instance {inst.name}: {trace.status} after {trace.steps} step(s)"]
    if result.converged:
        lines.append(f"approximate *-coincidence point: {result.answer}")
    _emit(lines, report, args, out)
    return EXIT_OK if result.converged else EXIT_NONCONVERGENCE


# ----------------------------------------------------------------------------
# verify

def cmd_verify(args, out) -> int:
    inst = load_instance(args.instance)
    try:
        cert = certify_theorem(inst, args.theorem)
    except HypothesesNotMachineVerified as exc:
        report = {"command": "verify", "status": "hypotheses_not_verified", **(exc.report or {})}
        _emit([f"instance {inst.name}: {exc}"], report, args, out)
        return EXIT_REFUSED
    except InfiniteSpaceUndecidable:
        report = {"command": "verify", "status": "refused",
                  "error": "oracle requires finite space"}
        _emit([f"instance {inst.name}: oracle requires finite space"], report, args, out)
        return EXIT_REFUSED
    except SizeLimit as exc:
        report = {"command": "verify", "status": "refused", "error": str(exc)}
        _emit([f"instance {inst.name}: {exc}"], report, args, out)
        return EXIT_REFUSED
    report = {"command": "verify", "instance": inst.name, **cert.to_dict()}
    lines = [f"instance {inst.name}, {cert.theorem}: hypotheses machine-verified",
             f"conclusion ({cert.conclusion}): {'holds' if cert.verdict else 'FAILS'}"]
    _emit(lines, report, args, out)
    return EXIT_OK if cert.verdict else EXIT_FALSE


# ----------------------------------------------------------------------------
# lemmas

def cmd_lemmas(args, out) -> int:
    report = lemma_suite(max_size=args.max_size, max_n=args.n, trials=args.trials,
                         seed=args.seed, samples=args.samples)
    report = {"command": "lemmas", **report}
    lines = [f"{name}: {c['cases']} case(s), {c['violations']} violation(s)"
             for name, c in report["checks"].items()]
    lines += [f"warning: {w}" for w in report["warnings"]]
    lines.append("all lemma checks passed" if report["ok"]
                 else f"{report['violations']} violation(s) found")
    _emit(lines, report, args, out)
    return EXIT_OK if report["ok"] else EXIT_FALSE


# ----------------------------------------------------------------------------

def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _arity(text):
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError("must be at least 2")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ntupled", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify an index operation")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", help="named operation, e.g. forward-cyclic")
    src.add_argument("--matrix", help='rows separated by ";", e.g. "1 2;2 1"')
    src.add_argument("--matrix-file", help="file holding the matrix, one row per line")
    c.add_argument("-n", type=int, default=None, help="size for presets defined for every n")
    c.add_argument("--partition", help='"odd-even" or "prefix:p" (default: the preset\'s own)')
    c.add_argument("--report", help="also write the JSON report here")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("solve", help="check hypotheses and iterate")
    s.add_argument("instance", help="instance JSON file or bundled instance name")
    s.add_argument("--tol", type=float, default=None)
    s.add_argument("--max-iters", type=_positive_int, default=1000)
    s.add_argument("--trace", help="write one JSON record per iterate here")
    s.add_argument("--report", help="also write the JSON report here")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="certify a theorem on a finite instance")
    v.add_argument("instance")
    v.add_argument("--theorem", choices=THEOREMS, default="T1")
    v.add_argument("--report")
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("lemmas", help="run the structural lemma suite")
    m.add_argument("--n", type=_arity, default=3, help="largest arity (at least 2)")
    m.add_argument("--max-size", type=_positive_int, default=3)
    m.add_argument("--trials", type=_positive_int, default=200)
    m.add_argument("--samples", type=_positive_int, default=10_000)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--report")
    m.set_defaults(func=cmd_lemmas)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except _PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
