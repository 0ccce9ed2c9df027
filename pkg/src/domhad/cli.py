"""Command-line entry point: ``domhad <subcommand> ...``.

Exit codes: 0 success, 1 negative result, 2 usage error, 3 search budget
exhausted. With ``--json`` every subcommand prints one JSON document whose
``schema`` field names its layout and version.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any

from . import __version__
from .catalog import MAIN_THEOREM_H, MANIFEST_NAMES, UnknownGraphName, catalog
from .construct import (
    build_mindeg_certificate,
    build_omega_certificate,
    omega_base,
    peel_dominating_edges,
)
from .generate import triangle_free_graphs
from .graph import Graph
from .graph6 import Graph6Error, from_graph6, to_graph6
from .hunt import HuntConfig, HuntError, HuntInterrupted, IngestError, enumerate_alpha2, run_hunt
from .invariants import ChromaticLimitError, invariant_bundle
from .minors import DEFAULT_BUDGET, MinorCertificate, hd, verify_dominating
from .pattern import find_induced
from .seagull import CapacityLimitError, PreconditionError, feasibility, max_disjoint_seagulls
from .theorems import BUDGET, FAIL, UnknownTheorem, check_theorem

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _schema(name: str) -> str:
    return f"domhad.{name}/1"


def parse_graph(text: str) -> Graph:
    """A graph6 string, or failing that a catalog name."""
    try:
        return from_graph6(text)
    except Graph6Error as g6_err:
        try:
            return catalog(text)
        except UnknownGraphName:
            raise UsageError(f"{text!r} is neither graph6 ({g6_err}) nor a catalog name") from None


def _emit(args: argparse.Namespace, doc: dict, human: str) -> None:
    if args.json:
        print(json.dumps(doc, sort_keys=True, ensure_ascii=False))
    else:
        print(human)


def _cert_json(cert: MinorCertificate) -> dict:
    return {"order": cert.order, "branch_sets": cert.as_lists(), "provenance": cert.provenance}


def _fmt_cert(cert: MinorCertificate) -> str:
    return " ".join("{" + ",".join(map(str, s)) + "}" for s in cert.as_lists())


# --- subcommands ------------------------------------------------------------------


def cmd_invariants(args) -> int:
    g = parse_graph(args.graph)
    b = invariant_bundle(g)
    doc = {"schema": _schema("invariants"), "graph6": to_graph6(g), **b.to_json()}
    human = "\n".join(f"{k:>6}: {v}" for k, v in b.to_json().items())
    _emit(args, doc, human)
    return EXIT_OK


def cmd_freeness(args) -> int:
    g = parse_graph(args.graph)
    names = [x.strip() for x in args.patterns.split(",") if x.strip()] if args.patterns else list(MAIN_THEOREM_H)
    result = {}
    for name in names:
        try:
            h = catalog(name)
        except UnknownGraphName as exc:
            raise UsageError(str(exc)) from None
        hit = find_induced(g, h)
        result[name] = {"free": hit is None, "witness": None if hit is None else [hit[u] for u in range(h.n)]}
    doc = {"schema": _schema("freeness"), "graph6": to_graph6(g), "patterns": result}
    human = "\n".join(f"{name}: {'free' if r['free'] else 'contains ' + str(r['witness'])}" for name, r in result.items())
    _emit(args, doc, human)
    return EXIT_OK


def cmd_hd(args) -> int:
    g = parse_graph(args.graph)
    res = hd(g, args.budget)
    doc = {
        "schema": _schema("hd"),
        "graph6": to_graph6(g),
        "n": g.n,
        "value": res.value,
        "complete": res.complete,
        "lower": res.lower,
        "upper": res.upper,
        "nodes": res.nodes,
        "certificate": _cert_json(res.certificate),
    }
    if res.complete:
        human = f"h_d = {res.value}\ncertificate: {_fmt_cert(res.certificate)}"
    else:
        human = f"budget exhausted: {res.lower} <= h_d <= {res.upper}\nbest certificate: {_fmt_cert(res.certificate)}"
    _emit(args, doc, human)
    return EXIT_OK if res.complete else EXIT_BUDGET


def _load_json(path: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read certificate JSON from {path}: {exc}") from None


def cmd_verify_cert(args) -> int:
    """Accepts the output of ``hd --json`` / ``construct --json``, or a bare
    ``{"graph6": ..., "branch_sets": [...]}`` document."""
    doc = _load_json(args.file)
    if not isinstance(doc, dict):
        raise UsageError("certificate document must be a JSON object")
    g6 = args.graph or doc.get("graph6")
    if g6 is None:
        raise UsageError("no graph: pass --graph or include a graph6 field")
    g = parse_graph(g6)
    sets = doc.get("branch_sets")
    if sets is None and isinstance(doc.get("certificate"), dict):
        sets = doc["certificate"].get("branch_sets")
    if not isinstance(sets, list) or not all(isinstance(s, list) and all(isinstance(v, int) for v in s) for s in sets):
        raise UsageError("branch_sets must be a list of integer lists")
    try:
        res = verify_dominating(g, sets)
    except IndexError as exc:
        res_doc = {"schema": _schema("verify"), "ok": False, "clause": "out-of-range", "message": str(exc)}
        _emit(args, res_doc, f"INVALID: {exc}")
        return EXIT_NEGATIVE
    out = {"schema": _schema("verify"), "ok": res.ok, "order": len(sets), "clause": res.clause or None,
           "message": res.message or None, "i": res.i, "j": res.j, "vertex": res.v}
    _emit(args, out, f"valid dominating K_{len(sets)} minor" if res.ok else f"INVALID ({res.clause}): {res.message}")
    return EXIT_OK if res.ok else EXIT_NEGATIVE


def cmd_seagulls(args) -> int:
    g = parse_graph(args.graph)
    try:
        rep = feasibility(g, args.ell)
    except CapacityLimitError as exc:
        raise UsageError(str(exc)) from None
    pack = max_disjoint_seagulls(g)
    doc = {
        "schema": _schema("seagulls"),
        "graph6": to_graph6(g),
        "conditions": rep.to_json(),
        "max_packing": [s.as_list() for s in pack],
        "packing_exists": len(pack) >= args.ell,
    }
    lines = [
        f"ell = {args.ell}",
        f"  n >= 3*ell           {rep.cond_size}",
        f"  ell-connected        {rep.cond_conn} (kappa = {rep.connectivity})",
        f"  min capacity >= ell  {rep.cond_capacity}"
        + ("" if rep.min_capacity is None else f" (capacity = {rep.min_capacity.capacity})"),
        f"  anti-matching >= ell {rep.cond_antimatching} (size {len(rep.antimatching)})",
        f"max disjoint seagulls: {len(pack)} {[s.as_list() for s in pack]}",
    ]
    if rep.exception_flag:
        lines.append("note: W_5 with ell = 2 is the known exception to the characterization")
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def cmd_construct(args) -> int:
    g = parse_graph(args.graph)
    try:
        if args.method == "omega":
            cert = build_omega_certificate(g, args.budget)
        elif args.method == "mindeg":
            cert = build_mindeg_certificate(g)
        else:
            cert = peel_dominating_edges(g, omega_base)
    except PreconditionError as exc:
        doc = {"schema": _schema("construct"), "graph6": to_graph6(g), "method": args.method,
               "error": "precondition", "message": str(exc)}
        _emit(args, doc, f"precondition not met: {exc}")
        return EXIT_NEGATIVE
    doc = {"schema": _schema("construct"), "graph6": to_graph6(g), "method": args.method,
           "certificate": _cert_json(cert)}
    _emit(args, doc, f"order {cert.order} via {cert.provenance}: {_fmt_cert(cert)}")
    return EXIT_OK


def cmd_check(args) -> int:
    g = parse_graph(args.graph)
    try:
        v = check_theorem(g, args.theorem, args.budget)
    except (UnknownTheorem, UnknownGraphName) as exc:
        raise UsageError(str(exc)) from None
    except ChromaticLimitError as exc:
        raise UsageError(str(exc)) from None
    doc = {"schema": _schema("verdict"), "graph6": to_graph6(g), **v.to_json()}
    lines = [f"{v.theorem_id}: {v.status.upper()}"]
    for h in v.hypotheses:
        lines.append(f"  [{'x' if h.holds else ' '}] {h.clause}")
    if v.certificate is not None:
        lines.append(f"  certificate ({v.provenance}): {_fmt_cert(v.certificate)}")
    _emit(args, doc, "\n".join(lines))
    if v.status == FAIL:
        return EXIT_NEGATIVE
    if v.status == BUDGET:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_hunt(args) -> int:
    try:
        cfg = HuntConfig.load(args.config)
    except (OSError, json.JSONDecodeError, TypeError) as exc:
        raise UsageError(f"cannot load config {args.config}: {exc}") from None
    if args.workers is not None:
        cfg.workers = args.workers
    try:
        report = run_hunt(cfg, resume=args.resume, halt_after=args.halt_after)
    except HuntInterrupted as exc:
        # simulated crash: leave only the checkpoint behind
        sys.stderr.write(f"halted after {exc.cursor} graphs\n")
        sys.stderr.flush()
        os._exit(75)
    except (HuntError, IngestError, UnknownGraphName) as exc:
        raise UsageError(str(exc)) from None
    if args.json:
        sys.stdout.write(report.dumps())
    else:
        for n, c in report.counts.items():
            print(f"n={n}: " + ", ".join(f"{k}={v}" for k, v in c.items()))
        print(f"violations: {len(report.violations)}, retries: {len(report.retries)}")
    if report.violations:
        return EXIT_NEGATIVE
    if report.retries:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_catalog(args) -> int:
    names = [args.name] if args.name else list(MANIFEST_NAMES)
    entries = []
    for name in names:
        try:
            g = catalog(name)
        except UnknownGraphName as exc:
            raise UsageError(str(exc)) from None
        entries.append({"name": name, "graph6": to_graph6(g), "n": g.n, "m": g.m,
                        "edges": [list(e) for e in g.edges()]})
    if args.name:
        doc = {"schema": _schema("catalog"), **entries[0]}
    else:
        doc = {"schema": _schema("catalog-manifest"), "graphs": entries}
    human = "\n".join(f"{e['name']:<16} {e['graph6']:<12} n={e['n']} m={e['m']}" for e in entries)
    _emit(args, doc, human)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        if args.triangle_free:
            stream = triangle_free_graphs(args.n, allow_stretch=args.allow_stretch)
        else:
            stream = enumerate_alpha2(args.n, allow_stretch=args.allow_stretch)
        if args.count:
            total = sum(1 for _ in stream)
            doc = {"schema": _schema("enumerate-count"), "n": args.n,
                   "family": "triangle-free" if args.triangle_free else "alpha<=2", "count": total}
            _emit(args, doc, str(total))
        else:
            out = sys.stdout
            for g in stream:
                out.write(to_graph6(g) + "\n")
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON document")

    p = argparse.ArgumentParser(prog="domhad", description="Dominating clique minors in small graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def graph_cmd(name: str, help_: str, fn) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_, description=help_)
        sp.add_argument("graph", help="graph6 string or catalog name")
        sp.set_defaults(fn=fn)
        return sp

    graph_cmd("invariants", "alpha, omega, chi, degrees and anti-matching size", cmd_invariants)

    sp = graph_cmd("freeness", "test for induced copies of catalog graphs", cmd_freeness)
    sp.add_argument("--patterns", help="comma-separated catalog names (default: the forbidden-graph list)")

    sp = graph_cmd("hd", "dominating Hadwiger number with certificate", cmd_hd)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")

    sp = sub.add_parser("verify-cert", parents=[common], help="check a certificate JSON ('-' for stdin)")
    sp.add_argument("file")
    sp.add_argument("--graph", help="host graph (overrides the document's graph6 field)")
    sp.set_defaults(fn=cmd_verify_cert)

    sp = graph_cmd("seagulls", "packing conditions and a maximum disjoint seagull family", cmd_seagulls)
    sp.add_argument("--ell", type=int, default=1, help="number of seagulls asked for")

    sp = graph_cmd("construct", "build a certificate by a constructive method", cmd_construct)
    sp.add_argument("--method", choices=("omega", "mindeg", "peel"), required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = graph_cmd("check", "evaluate one theorem on a graph", cmd_check)
    sp.add_argument("--theorem", required=True, help="e.g. small-n, omega, main:W_5, cor-main:C_5")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = sub.add_parser("hunt", parents=[common], help="run a campaign from a JSON config")
    sp.add_argument("--config", required=True)
    sp.add_argument("--resume", action="store_true", help="continue from the config's checkpoint")
    sp.add_argument("--workers", type=int, help="override the worker count")
    sp.add_argument("--halt-after", type=int, help=argparse.SUPPRESS)
    sp.set_defaults(fn=cmd_hunt)

    sp = sub.add_parser("catalog", parents=[common], help="named graphs (all documented names if none given)")
    sp.add_argument("name", nargs="?")
    sp.set_defaults(fn=cmd_catalog)

    sp = sub.add_parser("enumerate", parents=[common], help="alpha <= 2 graphs on n vertices as graph6 lines")
    sp.add_argument("n", type=int)
    sp.add_argument("--count", action="store_true", help="print only the number of graphs")
    sp.add_argument("--triangle-free", action="store_true", help="emit the triangle-free complements instead")
    sp.add_argument("--allow-stretch", action="store_true", help="permit n = 13 (slow)")
    sp.set_defaults(fn=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"domhad {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
