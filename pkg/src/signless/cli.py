"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on bad usage or
unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import extremal, recurrences, transforms
from .graph_core import (
    FamilyNotationError, GraphError, UnicyclicGraph, enumerate_unicyclic, family_graph,
    format_edge_list, read_edge_list,
)
from .spectra import coefficients, incidence_energy, tu_coefficients

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TRANSFORMS = ("contract-pendant", "contract-path2", "sigma", "cycle-reduce",
              "cycle-reduce-pendants", "collect", "redistribute")


class UsageError(Exception):
    pass


def _emit(obj, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def _load_graph(args) -> UnicyclicGraph:
    if bool(args.family) == bool(args.edges):
        raise UsageError("give exactly one of --family or --edges")
    if args.family:
        return family_graph(args.family)
    try:
        g = read_edge_list(args.edges)
    except OSError as exc:
        raise UsageError(f"cannot read {args.edges}: {exc.strerror or exc}") from None
    return UnicyclicGraph(g)


def _graph_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help='family notation, e.g. "G3(0,0;0,0;0,3)"')
    p.add_argument("--edges", help="edge-list file: first line n, then 'u v' per line")


def _class_flags(p: argparse.ArgumentParser, need_n: bool = True) -> None:
    p.add_argument("--n", type=int, required=need_n, help="number of vertices")
    p.add_argument("--m", type=int, help="matching number")
    p.add_argument("--parity", choices=("odd", "even"), help="girth parity")
    p.add_argument("--max-n", type=int, default=extremal.DEFAULT_MAX_N,
                   help=f"enumeration bound (default {extremal.DEFAULT_MAX_N}, at most {extremal.HARD_MAX_N})")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")


def cmd_coeffs(args) -> int:
    g = _load_graph(args)
    phi = coefficients(g)
    _emit({"n": g.n, "girth": g.girth, "phi": phi.to_json()}, args.json,
          f"n={g.n} girth={g.girth}\nphi = " + " ".join(map(str, phi)))
    return EXIT_OK


def cmd_tu_check(args) -> int:
    if args.family or args.edges:
        graphs = [_load_graph(args)]
    elif args.n is not None:
        graphs = list(enumerate_unicyclic(args.n, max_n=args.max_n))
    else:
        raise UsageError("give --n or a single graph")
    bad = [g for g in graphs if tuple(tu_coefficients(g)) != tuple(coefficients(g))]
    verdict = "PASS" if not bad else "FAIL"
    out = {"checked": len(graphs), "mismatches": len(bad), "verdict": verdict}
    text = f"{verdict}: {len(graphs)} graphs, {len(bad)} mismatches"
    if bad:
        out["witness"] = format_edge_list(bad[0]).splitlines()
        text += "\nfirst mismatch:\n" + format_edge_list(bad[0])
    _emit(out, args.json, text)
    return EXIT_OK if not bad else EXIT_FAIL


def cmd_ie(args) -> int:
    g = _load_graph(args)
    ie = incidence_energy(g)
    _emit({"n": g.n, "ie": ie}, args.json, f"IE = {ie:.12f}")
    return EXIT_OK


def _edge_arg(text: Optional[str]) -> tuple[int, int]:
    if text is None:
        raise UsageError("this transformation needs --uv U,V")
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad edge {text!r}; expected U,V") from None
    return a, b


def _need(value, flag: str):
    if value is None:
        raise UsageError(f"this transformation needs {flag}")
    return value


def cmd_transform(args) -> int:
    g = _load_graph(args)
    name = args.name
    if name == "contract-pendant":
        out = transforms.contract_add_pendant(g, _edge_arg(args.uv))
    elif name == "contract-path2":
        out = transforms.contract_add_path2(g, _edge_arg(args.uv), _need(args.uprime, "--uprime"))
    elif name == "sigma":
        out = transforms.sigma_transform(g, _need(args.v, "--v"), _need(args.u, "--u"))
    elif name == "cycle-reduce":
        out = transforms.cycle_reduce(g, _need(args.u, "--u"), args.v)
    elif name == "cycle-reduce-pendants":
        out = transforms.cycle_reduce_with_pendants(g, _need(args.u, "--u"), args.v)
    elif name == "collect":
        out = transforms.collect_pendants(g, args.target)
    else:
        out = transforms.redistribute_keep_pendants(g, _need(args.variant, "--variant"))
    out = out.compared()
    phi_in, phi_out = coefficients(out.source), coefficients(out.result)
    obj = {
        "transform": name,
        "result_edges": format_edge_list(out.result).splitlines(),
        "matching_before": out.matching_before,
        "matching_after": out.matching_after,
        "comparison": out.comparison.value,
        "equal_at": sorted(out.equal_at),
        "phi_before": phi_in.to_json(),
        "phi_after": phi_out.to_json(),
    }
    text = "\n".join([
        format_edge_list(out.result).rstrip("\n"),
        f"matching {out.matching_before} -> {out.matching_after}",
        f"phi before = {' '.join(map(str, phi_in))}",
        f"phi after  = {' '.join(map(str, phi_out))}",
        f"comparison {out.comparison.value}; equal at {sorted(out.equal_at)}",
    ])
    _emit(obj, args.json, text)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    recs = extremal.class_records(args.n, args.parity, args.m, args.max_n, args.jobs)
    rows = [{"code": r.code.hex(), "girth": r.girth, "matching": r.matching,
             "phi": r.phi.to_json(), "edges": r.edge_text().splitlines()} for r in recs]
    text = "\n".join(f"{r.code.hex()} g={r.girth} m={r.matching} phi={' '.join(map(str, r.phi))}"
                     for r in recs)
    _emit({"n": args.n, "count": len(rows), "graphs": rows}, args.json,
          (text + "\n" if text else "") + f"{len(rows)} classes")
    return EXIT_OK


def cmd_closed_form(args) -> int:
    if args.m is None:
        raise UsageError("closed-form needs --m")
    p = recurrences.closed_form_poly(args.tag, args.n, args.m)
    direct = coefficients(recurrences.family(args.tag).graph(args.n, args.m)).to_poly()
    k = recurrences.first_difference(p, direct)
    verdict = "PASS" if k is None else "FAIL"
    spec = recurrences.family(args.tag).family_spec(args.n, args.m)
    obj = {"tag": args.tag, "n": args.n, "m": args.m, "family": spec.format(),
           "poly": p.to_json(), "verdict": verdict}
    text = f"{args.tag} = {spec.format()}\nQ(x) = {p}\n{verdict}: closed form vs direct"
    if k is not None:
        obj["first_difference"] = k
        text += f" (first differing coefficient at x^{k}: {p[k]} vs {direct[k]})"
    _emit(obj, args.json, text)
    return EXIT_OK if k is None else EXIT_FAIL


def cmd_diff_factor(args) -> int:
    if args.m is None:
        raise UsageError("diff-factor needs --m")
    p = recurrences.difference_factor(args.label, args.n, args.m)
    direct = recurrences.difference_direct(args.label, args.n, args.m)
    ok = p == direct
    a, b = recurrences.difference_operands(args.label)
    obj = {"label": args.label, "n": args.n, "m": args.m, "minuend": a, "subtrahend": b,
           "poly": p.to_json(), "verdict": "PASS" if ok else "FAIL"}
    _emit(obj, args.json,
          f"Q({a}) - Q({b}) = {p}\n{'PASS' if ok else 'FAIL'}: factored vs closed-form difference")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    lo = args.n_min if args.n_min is not None else min(args.n, 4)
    m_range = (args.m, args.m) if args.m is not None else None
    rep = extremal.verify_theorem(args.theorem, (lo, args.n), m_range, args.max_n, args.jobs)
    if args.csv:
        sys.stdout.write(rep.to_csv())
    elif args.json:
        print(rep.dumps())
    else:
        for c in rep.clauses:
            m = "-" if c.m is None else c.m
            print(f"{'PASS' if c.passed else 'FAIL'} n={c.n} m={m} {c.clause}: {c.detail}")
            if c.witness and not c.passed:
                print("  witness:\n    " + c.witness.replace("\n", "\n    "))
        print(f"{args.theorem}: {'PASS' if rep.passed else 'FAIL'} ({len(rep.clauses)} clauses)")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_rank_ie(args) -> int:
    ranked = extremal.ie_ranking(args.n, args.m, args.parity, args.max_n, args.jobs)
    if args.top:
        ranked = ranked[:args.top]
    rows = [{"ie": r.ie, "code": r.record.code.hex(), "girth": r.record.girth,
             "matching": r.record.matching, "edges": r.record.edge_text().splitlines()}
            for r in ranked]
    text = "\n".join(f"{r.ie:.12f} {r.record.code.hex()} g={r.record.girth} m={r.record.matching}"
                     for r in ranked)
    _emit({"n": args.n, "ranking": rows}, args.json, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signless",
                                     description="Signless Laplacian coefficients of unicyclic graphs.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="coefficient vector of one graph")
    _graph_flags(p)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("tu-check", help="TU-subgraph expansion vs characteristic polynomial")
    _graph_flags(p)
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int, default=10)
    p.set_defaults(func=cmd_tu_check)

    p = sub.add_parser("ie", help="incidence energy of one graph")
    _graph_flags(p)
    p.set_defaults(func=cmd_ie)

    p = sub.add_parser("transform", help="apply one transformation")
    p.add_argument("name", choices=TRANSFORMS)
    _graph_flags(p)
    p.add_argument("--uv", help="edge as U,V")
    p.add_argument("--u", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--uprime", type=int)
    p.add_argument("--target", type=int, default=0, help="cycle position for collect")
    p.add_argument("--variant", choices=sorted(transforms._VARIANTS))
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("enumerate", help="list isomorphism classes")
    _class_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("closed-form", help="closed-form polynomial of an extremal family")
    p.add_argument("tag", choices=recurrences.CLOSED_FORM_TAGS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("diff-factor", help="factored difference of two closed forms")
    p.add_argument("label", choices=sorted(recurrences.DIFFERENCES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_diff_factor)

    p = sub.add_parser("verify", help="check a theorem's clauses exhaustively")
    p.add_argument("theorem", choices=extremal.THEOREMS)
    _class_flags(p)
    p.add_argument("--n-min", type=int, help="smallest n (default min(n, 4))")
    p.add_argument("--csv", action="store_true", help="CSV summary instead of text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("rank-ie", help="class members by incidence energy")
    _class_flags(p)
    p.add_argument("--top", type=int)
    p.set_defaults(func=cmd_rank_ie)
    return parser


def _hoist_json(argv: list[str]) -> list[str]:
    # accept --json after the subcommand too
    if "--json" in argv:
        argv = ["--json"] + [a for a in argv if a != "--json"]
    return argv


def run(argv: Optional[Sequence[str]] = None) -> int:
    argv = _hoist_json(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphError, FamilyNotationError, recurrences.RangeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
