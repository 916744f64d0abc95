"""Command-line frontend.

Subcommands:

* ``analyze``  full pipeline: bipartition, blocks, h-vector,
  classification, Fill sets and the Gorenstein closure.
* ``hilbert``  h-vector only (works for non-bipartite graphs).
* ``verify``   theorem sweeps over exhaustive or seeded random families.

Exit codes: 0 success, 1 verification failure, 2 parse error,
3 non-bipartite rejection, 4 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .classify import classify, gorenstein_closure, h_vector_product, block_product_check
from .errors import (CapacityError, ContractError, EdgeRingError, GraphFileError,
                     InputError, NonBipartiteError)
from .graph import bipartition_of, blocks, is_connected
from .graphio import read_graph
from .hilbert import h1_formula, is_palindromic
from .hilbert import DEFAULT_MEMORY_BUDGET
from .matching import DEFAULT_MAX_SIDE
from .verify import run_exhaustive, run_random

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_PARSE = 2
EXIT_NON_BIPARTITE = 3
EXIT_CAPACITY = 4


def _one_based(pairs):
    return [[min(u, v) + 1, max(u, v) + 1] for u, v in sorted(pairs)]


def _h_flags(h):
    s = h.s
    return {
        "s": s,
        "h_s": h.coefficients[-1],
        "h_1": h.get(1),
        "h_s_minus_1": h.get(s - 1) if s >= 1 else None,
        "palindromic": is_palindromic(h),
    }


def _build_report(g, bip, hilbert_only, max_side, memory_budget):
    checks = []

    def run_check(name, fn):
        t0 = time.perf_counter()
        ok = fn()
        checks.append({"name": name, "status": "pass" if ok else "fail",
                       "_seconds": time.perf_counter() - t0})
        return ok

    report = {
        "version": f"edgering {__version__}",
        "input": {
            "vertex_count": g.d,
            "edge_count": g.edge_count,
            "edges": _one_based(g.edges),
        },
        "bipartition": None,
        "blocks": None,
        "hvector": None,
        "classification": None,
        "fill": None,
        "closure": None,
        "checks": checks,
    }
    if bip is not None:
        report["bipartition"] = {"X": [v + 1 for v in bip.X], "Y": [v + 1 for v in bip.Y]}

    if hilbert_only:
        h = h_vector_product(g, memory_budget)
        report["hvector"] = list(h.coefficients)
        report["classification"] = _h_flags(h)
        return report

    decomp = blocks(g)
    cl = classify(g, bip, max_side=max_side, memory_budget=memory_budget)
    report["blocks"] = [
        {
            "vertices": [v + 1 for v in rec.subgraph.labels],
            "edge_count": rec.subgraph.graph.edge_count,
            "two_connected": rec.two_connected,
            "matching_covered": rec.matching_covered,
            "hvector": list(rec.hvec.coefficients),
        }
        for rec in cl.per_block
    ]
    assert len(report["blocks"]) == len(decomp.blocks)
    report["hvector"] = list(cl.hvec.coefficients)
    report["classification"] = {
        "pseudo_gorenstein": cl.pseudo_gorenstein,
        "gorenstein_combinatorial": cl.gorenstein_combinatorial,
        "gorenstein_palindromic": cl.gorenstein_palindromic,
        "gorenstein": cl.gorenstein_combinatorial,
        **_h_flags(cl.hvec),
    }

    run_check("stanley-agreement",
              lambda: cl.gorenstein_combinatorial == cl.gorenstein_palindromic)
    if g.d >= 1 and is_connected(g):
        run_check("h1-formula", lambda: cl.hvec.get(1) == h1_formula(g, bip))
    run_check("block-product", lambda: block_product_check(g, bip, memory_budget))
    run_check("pseudo-gorenstein-trailing",
              lambda: cl.pseudo_gorenstein == (cl.hvec.coefficients[-1] == 1))

    if cl.pseudo_gorenstein:
        closure = gorenstein_closure(g, bip, max_side=max_side, memory_budget=memory_budget)
        fill_pairs = [pair for fs in closure.per_block_fill.values() for pair in fs.non_edges]
        report["fill"] = _one_based(fill_pairs)
        report["closure"] = {
            "added_edges": _one_based(closure.added_edges),
            "hvector": list(closure.closed_h.coefficients),
            "s_preserved": closure.closed_h.s == closure.original_h.s,
            "next_to_leading_preserved": (
                closure.original_h.s < 1
                or closure.closed_h.get(closure.closed_h.s - 1)
                == closure.original_h.get(closure.original_h.s - 1)),
        }
        run_check("closure-verified", lambda: True)
    return report


def _print_report(report, as_json, stream):
    if as_json:
        clean = json.loads(json.dumps(report))
        for check in clean["checks"]:
            check.pop("_seconds", None)
        print(json.dumps(clean, sort_keys=True, indent=2), file=stream)
        return
    print(f"# {report['version']}", file=stream)
    inp = report["input"]
    print(f"vertices {inp['vertex_count']}  edges {inp['edge_count']}", file=stream)
    if report["bipartition"] is not None:
        print(f"bipartition X={report['bipartition']['X']} Y={report['bipartition']['Y']}",
              file=stream)
    if report["blocks"] is not None:
        print(f"blocks ({len(report['blocks'])}):", file=stream)
        for b in report["blocks"]:
            print(f"  vertices={b['vertices']} edges={b['edge_count']} "
                  f"two_connected={b['two_connected']} "
                  f"matching_covered={b['matching_covered']} h={b['hvector']}", file=stream)
    print(f"hvector {report['hvector']}", file=stream)
    if report["classification"] is not None:
        for key, value in sorted(report["classification"].items()):
            print(f"  {key}: {value}", file=stream)
    if report["fill"] is not None:
        print(f"fill {report['fill']}", file=stream)
    if report["closure"] is not None:
        c = report["closure"]
        print(f"closure added={c['added_edges']} h={c['hvector']} "
              f"s_preserved={c['s_preserved']} "
              f"next_to_leading_preserved={c['next_to_leading_preserved']}", file=stream)
    for check in report["checks"]:
        ms = check.get("_seconds", 0.0) * 1000.0
        print(f"check {check['name']}: {check['status']} ({ms:.1f} ms)", file=stream)


def _cmd_analyze(args) -> int:
    g = read_graph(args.input)
    bip = bipartition_of(g)
    if bip is None and not args.hilbert_only:
        raise NonBipartiteError("graph contains an odd cycle; "
                                "use 'hilbert' or --hilbert-only for the h-vector alone")
    if args.hilbert_only and not is_connected(g):
        raise InputError("the h-vector pipeline requires a connected graph")
    report = _build_report(g, bip, args.hilbert_only, args.max_side, args.memory_budget)
    _print_report(report, args.json, sys.stdout)
    failed = [c for c in report["checks"] if c["status"] != "pass"]
    return EXIT_VERIFY_FAIL if failed else EXIT_OK


def _cmd_hilbert(args) -> int:
    args.hilbert_only = True
    return _cmd_analyze(args)


def _cmd_verify(args) -> int:
    if (args.exhaustive is None) == (args.random is None):
        raise InputError("choose exactly one of --exhaustive and --random")

    def progress(done, elapsed):
        print(f"  ... {done} instances in {elapsed:.1f}s", file=sys.stderr)

    if args.exhaustive is not None:
        summaries = run_exhaustive(
            args.theorem, args.exhaustive, max_side=args.max_side,
            memory_budget=args.memory_budget, jobs=args.jobs,
            progress=progress if args.progress else None)
        family = f"exhaustive nx+ny <= {args.exhaustive}"
    else:
        summaries = run_random(
            args.theorem, args.random, args.seed, args.model,
            max_vertices=args.max_vertices, max_side=args.max_side,
            memory_budget=args.memory_budget, jobs=args.jobs,
            progress=progress if args.progress else None)
        family = f"random x{args.random} model={args.model} seed={args.seed}"

    any_failed = False
    if args.json:
        payload = {
            name: {"checked": s.checked, "skipped": s.skipped, "failed": s.failed,
                   "failures": s.failures}
            for name, s in summaries.items()
        }
        print(json.dumps({"family": family, "results": payload}, sort_keys=True, indent=2))
        any_failed = any(s.failed for s in summaries.values())
    else:
        print(f"family: {family}")
        for name in sorted(summaries):
            s = summaries[name]
            print(f"  {name}: checked={s.checked} skipped={s.skipped} failed={s.failed}")
            for detail in s.failures:
                print(f"    FAIL {detail}")
            if s.failed:
                any_failed = True
    return EXIT_VERIFY_FAIL if any_failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgering",
        description="h-polynomials and Gorenstein classification of "
                    "bipartite graph edge rings")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument("--max-side", type=int, default=DEFAULT_MAX_SIDE,
                       help="subset-enumeration cap per side (default 16)")
        p.add_argument("--memory-budget", type=int, default=DEFAULT_MEMORY_BUDGET,
                       help="lattice-point memory budget in bytes (default 2 GiB)")

    p_analyze = sub.add_parser("analyze", help="full classification pipeline")
    p_analyze.add_argument("--input", required=True, help="graph file")
    p_analyze.add_argument("--hilbert-only", action="store_true",
                           help="skip classification; accept non-bipartite input")
    common(p_analyze)
    p_analyze.set_defaults(fn=_cmd_analyze)

    p_hilbert = sub.add_parser("hilbert", help="h-vector only")
    p_hilbert.add_argument("--input", required=True, help="graph file")
    common(p_hilbert)
    p_hilbert.set_defaults(fn=_cmd_hilbert)

    p_verify = sub.add_parser("verify", help="theorem sweeps over families")
    p_verify.add_argument("--theorem", default="all",
                          help="which statement to check (default all)")
    p_verify.add_argument("--exhaustive", type=int, default=None, metavar="MAX_D",
                          help="sweep all connected bipartite graphs with nx+ny <= MAX_D")
    p_verify.add_argument("--random", type=int, default=None, metavar="TRIALS",
                          help="sweep seeded random instances")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--model", default="matching-union",
                          choices=["erdos-bipartite", "matching-union"])
    p_verify.add_argument("--max-vertices", type=int, default=14,
                          help="size cap for random instances (default 14)")
    p_verify.add_argument("--jobs", type=int, default=1,
                          help="worker processes for the sweep (default 1); "
                               "results are merged in input order")
    p_verify.add_argument("--progress", action="store_true",
                          help="progress lines on stderr")
    common(p_verify)
    p_verify.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except GraphFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonBipartiteError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NON_BIPARTITE
    except CapacityError as exc:
        print(f"error: capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ContractError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    except EdgeRingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL


if __name__ == "__main__":
    sys.exit(main())
