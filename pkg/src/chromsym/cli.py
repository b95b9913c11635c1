"""Command-line front end.

Subcommands: ``csf`` (print an expansion), ``check`` (decide a property with
a witness), ``gen`` (emit a generated graph), ``verify`` (run a reproduction
suite). Exit codes: 0 the property holds / everything passed, 1 it fails,
2 input could not be parsed, 3 a size guard refused the input, 4 other
errors. Configuration is flags-only; no environment variable is required.
"""

import argparse
import json
import sys

from .errors import (
    ChromsymError,
    CountOverflow,
    GraphTooLarge,
    InvalidSize,
    OracleTooLarge,
)
from .graphs import (
    boolean_lattice,
    claw_graph,
    complete_bipartite_graph,
    cycle_graph,
    empty_graph,
    format_edge_list,
    format_graph6,
    format_graph_json,
    incomparability_graph,
    find_claw,
    path_graph,
    read_graph,
    squid_graph,
)
from .niceness import is_nice, is_strongly_nice, witness_json
from .partitions import format_partition
from .symfunc import csf_m, is_schur_positive, m_to_s
from .verify import SUITE_NAMES, run_suite

_SIZE_GUARD_ERRORS = (GraphTooLarge, OracleTooLarge, CountOverflow, InvalidSize)


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args):
    try:
        text = _read_input(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return None
    try:
        return read_graph(text, fmt=args.input_format)
    except _SIZE_GUARD_ERRORS:
        raise
    except (ValueError, ChromsymError) as exc:
        print(f"error: cannot parse graph input: {exc}", file=sys.stderr)
        return None


def _render_expansion_text(e) -> str:
    if not e.coeffs:
        return "0"
    return "\n".join(
        f"{e.basis}[{format_partition(lam)}] = {c}" for lam, c in e.terms()
    )


def cmd_csf(args) -> int:
    g = _load_graph(args)
    if g is None:
        return 2
    e = csf_m(g)
    if args.basis == "s":
        e = m_to_s(e)
    if args.format == "json":
        print(json.dumps(e.to_json_dict()))
    else:
        print(_render_expansion_text(e))
    return 0


def cmd_check(args) -> int:
    g = _load_graph(args)
    if g is None:
        return 2
    prop = args.property
    if prop == "claw-free":
        witness = find_claw(g)
        holds = witness is None
        payload = {"property": "claw_free", "holds": holds, "witness": None}
        if witness is not None:
            payload["witness"] = {"center": witness[0], "leaves": list(witness[1])}
    elif prop == "schur-positive":
        holds, neg = is_schur_positive(csf_m(g))
        payload = {"property": "schur_positive", "holds": holds, "witness": None}
        if neg is not None:
            payload["witness"] = {"partition": list(neg)}
    else:
        checker = is_nice if prop == "nice" else is_strongly_nice
        holds, witness = checker(csf_m(g))
        payload = witness_json(prop.replace("-", "_"), holds, witness)
    print(json.dumps(payload))
    return 0 if holds else 1


def cmd_gen(args) -> int:
    family = args.family
    params = args.params
    try:
        if family == "claw":
            g = claw_graph()
        elif family == "cycle":
            g = cycle_graph(_one_int(params))
        elif family == "path":
            g = path_graph(_one_int(params))
        elif family == "empty":
            g = empty_graph(_one_int(params))
        elif family == "squid":
            g = squid_graph(_one_int(params))
        elif family == "kbipartite":
            if len(params) != 2:
                raise ValueError("kbipartite needs two sizes")
            g = complete_bipartite_graph(int(params[0]), int(params[1]))
        elif family == "inc-boolean":
            g = incomparability_graph(boolean_lattice(_one_int(params)))
        else:
            raise ValueError(f"unknown family {family!r}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "graph6":
        print(format_graph6(g))
    elif args.format == "json":
        print(json.dumps(format_graph_json(g)))
    else:
        sys.stdout.write(format_edge_list(g))
    return 0


def _one_int(params) -> int:
    if len(params) != 1:
        raise ValueError("expected exactly one size parameter")
    return int(params[0])


def _render_report_text(report) -> str:
    lines = []
    for it in report["items"]:
        status = "PASS" if it["ok"] else "FAIL"
        detail = f" -- {it['detail']}" if it["detail"] else ""
        lines.append(f"{status} [{report['suite']}] {it['name']}{detail}")
    verdict = "PASS" if report["ok"] else "FAIL"
    lines.append(f"SUITE {report['suite']}: {verdict}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    reports = run_suite(
        args.suite, max_n=args.max_n, seed=args.seed, allow_slow=args.allow_slow
    )
    if args.format == "json":
        print(json.dumps(reports))
    else:
        for rep in reports:
            print(_render_report_text(rep))
    return 0 if all(rep["ok"] for rep in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromsym",
        description="Chromatic symmetric functions, niceness checkers, and reproduction suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_csf = sub.add_parser("csf", help="print a graph's chromatic symmetric function")
    p_csf.add_argument("input", help="graph file (edge-list, graph6, or JSON) or '-' for stdin")
    p_csf.add_argument("--basis", choices=("m", "s"), default="m")
    p_csf.add_argument("--format", choices=("text", "json"), default="text")
    p_csf.add_argument(
        "--input-format", choices=("auto", "edgelist", "graph6", "json"), default="auto"
    )
    p_csf.set_defaults(func=cmd_csf)

    p_check = sub.add_parser("check", help="decide a property, printing a witness JSON")
    p_check.add_argument("input")
    p_check.add_argument(
        "--property",
        required=True,
        choices=("nice", "strongly-nice", "schur-positive", "claw-free"),
    )
    p_check.add_argument(
        "--input-format", choices=("auto", "edgelist", "graph6", "json"), default="auto"
    )
    p_check.set_defaults(func=cmd_check)

    p_gen = sub.add_parser("gen", help="emit a generated graph")
    p_gen.add_argument(
        "family",
        choices=("claw", "cycle", "path", "empty", "squid", "kbipartite", "inc-boolean"),
    )
    p_gen.add_argument("params", nargs="*", help="size parameters for the family")
    p_gen.add_argument("--format", choices=("edgelist", "graph6", "json"), default="edgelist")
    p_gen.set_defaults(func=cmd_gen)

    p_verify = sub.add_parser("verify", help="run a reproduction suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--allow-slow", action="store_true")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _SIZE_GUARD_ERRORS as exc:
        print(f"error (size guard): {exc}", file=sys.stderr)
        return 3
    except ChromsymError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def entry():
    raise SystemExit(main())
