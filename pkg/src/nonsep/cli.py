"""Command-line interface: find, scan, gen, selfcheck.

Exit codes: 0 success, 1 a run found a counterexample (hypotheses held but
no tree was found, or finder and oracle disagree), 2 usage or parse error,
3 the input violates the hypotheses.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from . import selfcheck
from .connectivity import is_biconnected_without
from .embed import STAR, TreeSpec, tree_from_json, verify_tree
from .finder import HypothesisError, SearchError, UnsupportedShapeError, check_shape, run_to_fixpoint
from .generate import gen_hypothesis_graph
from .graph import Graph, GraphFormatError, parse_edgelist, parse_graph6, serialize_graph6
from .oracle import hypotheses_hold, oracle_contains, oracle_find

RECORD_VERSION = 1

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3


def spec_from_args(args: argparse.Namespace) -> TreeSpec:
    if args.shape == "star":
        return TreeSpec.star(args.m)
    r = 1 if args.r is None else args.r
    s = args.m - 2 - r if args.s is None else args.s
    if r + s != args.m - 2 or min(r, s) < 1:
        raise ValueError(f"invalid double-star shape: r + s must equal m - 2 (m={args.m}, r={r}, s={s})")
    return TreeSpec.double_star(r, s, m=args.m)


def _run(g: Graph, spec: TreeSpec, method: str, strategy: str) -> dict:
    """One method on one graph; the partial record fields it determines."""
    hyp = hypotheses_hold(g, spec)
    out = {"hypotheses_ok": hyp, "method": method, "ok": False, "tree": None, "iterations": 0, "trace": []}
    tree = None
    if method == "finder":
        if not hyp:
            out["status"] = "hypothesis"
            return out
        try:
            state = run_to_fixpoint(g, spec, strategy=strategy)
        except (SearchError, AssertionError) as exc:
            out["status"] = "miss"
            out["error"] = f"{type(exc).__name__}: {exc}"
            return out
        tree = state.tree
        out["iterations"] = state.iteration
        out["trace"] = [
            [st.claim_tag.value, st.potential.block_size, (st.potential.component_sizes or (0,))[0]]
            for st in state.trace
        ]
    else:
        tree = oracle_find(g, spec).witness
    if tree is not None:
        out["tree"] = tree.to_json()
        out["ok"] = True
        out["status"] = "found"
    else:
        out["status"] = "miss" if hyp else "hypothesis"
    return out


def process_graph(
    index: int,
    line: str,
    spec: TreeSpec,
    method: str = "finder",
    cross_check: bool = False,
    timing: bool = False,
    strategy: str = "first",
    fmt: str = "g6",
) -> dict:
    """Build one ScanRecord (as a dict) for one input graph."""
    start = time.perf_counter()
    rec: dict = {"v": RECORD_VERSION, "index": index, "graph": line.strip() if fmt == "g6" else None}
    try:
        g = parse_graph6(line) if fmt == "g6" else parse_edgelist(line)
    except GraphFormatError as exc:
        rec.update(
            hypotheses_ok=False, method=method, ok=False, tree=None, iterations=0, trace=[],
            verified=False, status="parse-error", error=str(exc),
        )
        return rec
    if fmt != "g6":
        rec["graph"] = serialize_graph6(g)
    rec["shape"] = str(spec)
    rec.update(_run(g, spec, method, strategy))
    verified = False
    if rec["ok"]:
        tree = tree_from_json(rec["tree"])
        verified = verify_tree(g, tree, spec) and is_biconnected_without(g, tree.vertices)
        if not verified:
            rec["ok"] = False
            rec["status"] = "miss"
            rec["error"] = "returned tree failed re-verification"
    rec["verified"] = verified
    if cross_check:
        other = "oracle" if method == "finder" else "finder"
        alt = _run(g, spec, other, strategy)
        cc: dict = {"method": other, "ok": alt["ok"], "agree": None, "witness_in_oracle": None}
        if rec["hypotheses_ok"]:
            cc["agree"] = alt["ok"] == rec["ok"]
            finder_tree = rec["tree"] if method == "finder" else alt["tree"]
            if finder_tree is not None:
                cc["witness_in_oracle"] = oracle_contains(g, spec, tree_from_json(finder_tree))
                cc["agree"] = cc["agree"] and cc["witness_in_oracle"]
        rec["cross_check"] = cc
    if timing:
        rec["millis"] = round((time.perf_counter() - start) * 1000, 3)
    return rec


def _process_job(job: tuple) -> dict:
    return process_graph(*job)


def record_exit_code(rec: dict) -> int:
    cc = rec.get("cross_check")
    if rec["status"] == "miss" or (cc is not None and cc["agree"] is False):
        return EXIT_VIOLATION
    if rec["status"] == "parse-error":
        return EXIT_USAGE
    if rec["status"] == "found":
        return EXIT_OK
    return EXIT_HYPOTHESIS


def _dumps(rec: dict) -> str:
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _describe(rec: dict) -> str:
    shape = rec.get("shape", "?")
    if rec["status"] == "parse-error":
        return f"parse error: {rec['error']}"
    if rec["ok"]:
        t = rec["tree"]
        if t["kind"] == STAR:
            where = f"root {t['root']} leaves {t['leaves']}"
        else:
            where = f"centre edge {t['u']}-{t['v']} leaves {t['u_leaves']} / {t['v_leaves']}"
        how = f"after {rec['iterations']} improving moves" if rec["method"] == "finder" else "by exhaustive search"
        return f"{shape}: found {where} {how} (verified={rec['verified']})"
    if rec["status"] == "hypothesis":
        return f"{shape}: hypotheses violated (needs 2-connected and minimum degree >= m + 2)"
    return f"{shape}: NOT FOUND although hypotheses hold: {rec.get('error', '')}"


# -- commands ------------------------------------------------------------------


def cmd_find(args: argparse.Namespace) -> int:
    spec = spec_from_args(args)
    if args.method == "finder":
        check_shape(spec)
    text = _read_input(args.input)
    if args.format == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise GraphFormatError("no graph in input")
        payload = lines[0]
    else:
        payload = text
    rec = process_graph(0, payload, spec, args.method, args.cross_check, args.timing, args.strategy, args.format)
    print(_dumps(rec) if args.json else _describe(rec))
    return record_exit_code(rec)


def cmd_scan(args: argparse.Namespace) -> int:
    spec = spec_from_args(args)
    if args.method == "finder" or args.cross_check:
        check_shape(spec)
    lines = [ln for ln in _read_input(args.input).splitlines() if ln.strip()]
    jobs = [(i, ln, spec, args.method, args.cross_check, args.timing, args.strategy) for i, ln in enumerate(lines)]
    workers = max(1, args.jobs)
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records: Iterable[dict] = list(pool.map(_process_job, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        records = [_process_job(j) for j in jobs]

    totals = {"records": 0, "found": 0, "hypothesis": 0, "miss": 0, "parse_error": 0, "disagreements": 0}
    max_iter = 0
    out = open(args.report, "w", encoding="ascii") if args.report else sys.stdout
    try:
        for rec in records:
            out.write(_dumps(rec) + "\n")
            totals["records"] += 1
            totals[rec["status"].replace("-", "_")] += 1
            if rec.get("cross_check", {}).get("agree") is False:
                totals["disagreements"] += 1
            max_iter = max(max_iter, rec["iterations"])
    finally:
        if out is not sys.stdout:
            out.close()
    summary = " ".join(f"{k}={v}" for k, v in totals.items())
    print(f"summary: {summary} max_iterations={max_iter}", file=sys.stderr)
    return EXIT_VIOLATION if totals["miss"] or totals["disagreements"] else EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    lines = [serialize_graph6(gen_hypothesis_graph(args.n, args.min_degree, args.seed + i)) for i in range(args.count)]
    text = "".join(ln + "\n" for ln in lines)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_selfcheck(args: argparse.Namespace) -> int:
    return EXIT_OK if selfcheck.run_all() else EXIT_VIOLATION


def _shape_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--shape", choices=["star", "dstar"], required=True)
    p.add_argument("--m", type=int, required=True, help="order of the tree")
    p.add_argument("--r", type=int, help="leaves at one centre of a double-star (default 1)")
    p.add_argument("--s", type=int, help="leaves at the other centre (default m - 2 - r)")
    p.add_argument("--input", default="-", help="input file, or - for stdin")
    p.add_argument("--method", choices=["finder", "oracle"], default="finder")
    p.add_argument("--strategy", choices=["first", "best"], default="first", help="finder move acceptance rule")
    p.add_argument("--cross-check", action="store_true", help="also run the other method and compare")
    p.add_argument("--timing", action="store_true", help="add wall-clock 'millis' to records")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nonsep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("find", help="find a non-separating tree in one graph")
    _shape_args(p)
    p.add_argument("--format", choices=["g6", "edgelist"], default="g6")
    p.add_argument("--json", action="store_true", help="print the JSON record")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("scan", help="run over a graph6 corpus, one JSON record per line")
    _shape_args(p)
    p.add_argument("--jobs", type=int, default=int(os.environ.get("NONSEP_JOBS", "1")))
    p.add_argument("--report", help="write records here instead of stdout")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("gen", help="generate graphs meeting the hypotheses (graph6 lines)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-degree", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selfcheck", help="run the built-in invariant suites")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UnsupportedShapeError, GraphFormatError, ValueError, OSError) as exc:
        if isinstance(exc, HypothesisError):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_HYPOTHESIS
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
