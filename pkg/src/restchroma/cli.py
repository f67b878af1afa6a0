"""Command-line surface.

Exit codes: 0 success, 2 parse failure, 3 cap/budget exceeded, 4 theorem
violation found by a verify run.  JSON mode emits a single top-level
object with sorted keys, so identical invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .engine import coeff_n1, coeff_n2, coeff_n3, count_colourings, restrained_poly, shared_pair_overlap
from .extremal import (
    check_conjecture,
    connected_bipartite_catalog,
    find_extremal,
    load_or_compute_extremal,
    verify_a7_condition,
    verify_bipartite_max,
    verify_min_theorem,
    verify_properness,
)
from .graphs import CapError, Graph, ParseError, connected_catalog, load_graph, to_graph6
from .restraints import (
    Restraint,
    empty_restraint,
    enumerate_k_restraints,
    is_proper,
    parse_restraint,
    render_restraint,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_VIOLATION = 4


def _load_restraint(source: str | None, g: Graph) -> Restraint:
    if source is None:
        return empty_restraint(g)
    text = source
    if os.path.isfile(source):
        with open(source, "r", encoding="ascii") as fh:
            text = fh.read()
    r = parse_restraint(text)
    if len(r) != g.n:
        raise ParseError(f"restraint has {len(r)} sets for a graph on {g.n} vertices")
    return r


def _emit(args, obj: dict, human_lines: list[str]) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def cmd_poly(args) -> int:
    g = load_graph(args.graph, args.format)
    r = _load_restraint(args.restraint, g)
    p = restrained_poly(g, r)
    m = r.m_value()
    obj = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "restraint": render_restraint(r),
        "coeffs": [str(c) for c in p.coeffs],
        "polynomial": str(p),
        "valid_from": m,
    }
    lines = [
        f"graph: {to_graph6(g)} (n={g.n}, m={g.m})",
        f"restraint: {render_restraint(r)}",
        f"polynomial: {p}",
        f"coefficients: {p.vector_str()}",
    ]
    if args.x is not None:
        value = p.evaluate(args.x)
        obj["value_at"] = {"x": args.x, "value": str(value)}
        lines.append(f"value at x={args.x}: {value}")
        if args.x < m:
            note = f"note: polynomial form counts colourings only for x >= {m}; x={args.x} is below that"
            obj["note"] = note
            lines.append(note)
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_count(args) -> int:
    if args.x is None:
        raise ParseError("count requires --x")
    g = load_graph(args.graph, args.format)
    r = _load_restraint(args.restraint, g)
    value = count_colourings(g, r, args.x)
    obj = {
        "graph6": to_graph6(g),
        "restraint": render_restraint(r),
        "x": args.x,
        "count": str(value),
    }
    _emit(args, obj, [f"colourings with x={args.x}: {value}"])
    return EXIT_OK


def cmd_coeffs(args) -> int:
    g = load_graph(args.graph, args.format)
    r = _load_restraint(args.restraint, g)
    obj = {
        "graph6": to_graph6(g),
        "restraint": render_restraint(r),
        "a_n_1": coeff_n1(g, r),
        "a_n_2": coeff_n2(g, r),
    }
    lines = [
        f"a[n-1] = {obj['a_n_1']}",
        f"a[n-2] = {obj['a_n_2']}",
    ]
    if g.n >= 3:
        breakdown = coeff_n3(g, r)
        obj["a_n_3"] = breakdown.a_n_3
        obj["terms"] = {name: str(val) for name, val in breakdown.terms.items()}
        obj["pair_overlap"] = shared_pair_overlap(g, r)
        lines.append(f"a[n-3] = {breakdown.a_n_3}")
        term_text = " ".join(f"{name}={val}" for name, val in breakdown.terms.items())
        lines.append(f"terms: {term_text}")
        lines.append(f"pair overlap: {obj['pair_overlap']}")
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_classes(args) -> int:
    g = load_graph(args.graph, args.format)
    classes = enumerate_k_restraints(g, args.k)
    entries = [
        {"restraint": cls.class_id(), "proper": is_proper(g, cls.representative)}
        for cls in classes
    ]
    obj = {"graph6": to_graph6(g), "k": args.k, "count": len(classes), "classes": entries}
    lines = [f"{len(classes)} classes on {to_graph6(g)} (k={args.k})"]
    for i, entry in enumerate(entries, 1):
        tag = " proper" if entry["proper"] else ""
        lines.append(f"{i}. {entry['restraint']}{tag}")
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_extremal(args) -> int:
    g = load_graph(args.graph, args.format)
    if args.results_dir:
        report = load_or_compute_extremal(g, args.k, args.results_dir, workers=args.workers)
    else:
        report = find_extremal(g, args.k, workers=args.workers)
    obj = report.to_record()
    lines = [
        f"graph: {report.graph_id} (k={args.k}), {report.class_count} classes",
        f"max: {', '.join(c.class_id() for c in report.max_classes)}",
        f"max polynomial: {report.max_poly}",
        f"min: {', '.join(c.class_id() for c in report.min_classes)}",
        f"min polynomial: {report.min_poly}",
    ]
    _emit(args, obj, lines)
    return EXIT_OK


def _append_records(results_dir: str, name: str, records: list) -> None:
    os.makedirs(results_dir, exist_ok=True)
    path = os.path.join(results_dir, f"{name}.jsonl")
    with open(path, "a", encoding="ascii") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")


def cmd_verify(args) -> int:
    if args.theorem == "a7":
        if args.graph:
            graphs = [load_graph(args.graph, args.format)]
        else:
            graphs = connected_catalog(args.n_max)
        records = [verify_a7_condition(g, args.k, workers=args.workers) for g in graphs]
        violations = [rec for rec in records if not rec["ok"]]
        summary = f"a7: {len(records)} graphs checked, {len(violations)} violations"
    else:
        if args.theorem == "bipartite":
            catalog = connected_bipartite_catalog(args.n_max)
        else:
            catalog = connected_catalog(args.n_max)
        runner = {"min": verify_min_theorem, "proper": verify_properness, "bipartite": verify_bipartite_max}[args.theorem]
        report = runner(catalog, args.k, workers=args.workers)
        records = report.records
        violations = report.violations
        summary = report.summary()
    if args.results_dir:
        _append_records(args.results_dir, f"verify_{args.theorem}_k{args.k}", records)
    obj = {"theorem": args.theorem, "k": args.k, "records": records, "violations": len(violations)}
    lines = [summary]
    for rec in violations:
        lines.append(f"violation: {json.dumps(rec, sort_keys=True)}")
    _emit(args, obj, lines)
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_conjecture(args) -> int:
    rec = check_conjecture(args.n, workers=args.workers)
    lines = [
        f"odd cycle n={rec['n']}: {rec['class_count']} classes, winners: {', '.join(rec['winners'])}",
    ]
    if rec["pattern_total"]:
        lines.append(f"conjectured restraint: {rec['conjectured']}")
        lines.append(f"winner matches conjectured class: {rec['matches']}")
    else:
        lines.append(
            "conjectured pattern leaves positions "
            f"{rec['uncovered_indices']} unassigned for n={rec['n']}; no comparison made"
        )
    _emit(args, rec, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="restchroma",
        description="Restrained chromatic polynomials, restraint classes, and extremal search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, graph=True, restraint=False, k=False, x=False):
        if graph:
            p.add_argument("--graph", required=True,
                           help="graph: file path, short name (C7, P4, K5, K2,3, S3), graph6 or edge list")
            p.add_argument("--format", default="auto", choices=["auto", "edgelist", "graph6"])
        if restraint:
            p.add_argument("--restraint", default=None, help="restraint literal [{1},{2}] or file path")
        if k:
            p.add_argument("--k", type=int, default=1)
        if x:
            p.add_argument("--x", type=int, default=None)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--results-dir", default=None)

    p_poly = sub.add_parser("poly", help="restrained chromatic polynomial")
    add_common(p_poly, restraint=True, x=True)
    p_poly.set_defaults(func=cmd_poly)

    p_count = sub.add_parser("count", help="brute-force colouring count")
    add_common(p_count, restraint=True, x=True)
    p_count.set_defaults(func=cmd_count)

    p_coeffs = sub.add_parser("coeffs", help="closed-form top coefficients")
    add_common(p_coeffs, restraint=True)
    p_coeffs.set_defaults(func=cmd_coeffs)

    p_classes = sub.add_parser("classes", help="k-restraint classes up to equivalence")
    add_common(p_classes, k=True)
    p_classes.set_defaults(func=cmd_classes)

    p_ext = sub.add_parser("extremal", help="extremal restraint classes")
    add_common(p_ext, k=True)
    p_ext.set_defaults(func=cmd_extremal)

    p_verify = sub.add_parser("verify", help="verify a theorem over a catalog")
    p_verify.add_argument("--theorem", required=True, choices=["min", "proper", "bipartite", "a7"])
    p_verify.add_argument("--n-max", type=int, default=5)
    p_verify.add_argument("--graph", default=None, help="single graph for --theorem a7")
    p_verify.add_argument("--format", default="auto", choices=["auto", "edgelist", "graph6"])
    p_verify.add_argument("--k", type=int, default=1)
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--results-dir", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_conj = sub.add_parser("conjecture", help="odd-cycle maximizer pattern check")
    p_conj.add_argument("--n", type=int, required=True)
    p_conj.add_argument("--json", action="store_true")
    p_conj.add_argument("--workers", type=int, default=1)
    p_conj.add_argument("--results-dir", default=None)
    p_conj.set_defaults(func=cmd_conjecture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return code


if __name__ == "__main__":
    sys.exit(main())
