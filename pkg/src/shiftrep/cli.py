"""Command-line interface: ``shiftrep <subcommand> ...``.

Exit codes: 0 success, 1 claim or verification failure, 2 usage error,
3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import codecs, families
from .decide import UNKNOWN, VertexLimitError, decide_word_representable, decision_json
from .experiments import DEFAULT_SEED, SUITES, jsonable, run_suite
from .graph import LabeledGraph, SizeLimitError
from .orientation import Orientation, find_shortcut_fast, is_acyclic, orient_m_shift
from .words import DEFAULT_BUDGET, BudgetExhausted, find_uniform_word, parse_word, represents

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

FAMILIES = ("shift", "mshift", "debruijn", "spread-debruijn", "complete", "tournament",
            "linegraph-of", "linedigraph-of")


class UsageError(Exception):
    pass


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for family {args.family!r}")


def _build_family(args):
    """Return a LabeledGraph or Digraph for ``generate``."""
    fam = args.family
    if fam == "shift":
        _need(args, "n", "k")
        return families.shift_graph(args.n, args.k)
    if fam == "mshift":
        _need(args, "n", "k", "m")
        return families.m_shift_graph(args.n, args.k, args.m)
    if fam == "debruijn":
        _need(args, "n", "k")
        return families.simplified_de_bruijn(args.n, args.k)
    if fam == "spread-debruijn":
        _need(args, "n", "k", "m")
        return families.spread_de_bruijn(args.n, args.k, args.m)
    if fam == "complete":
        _need(args, "n")
        return families.complete_graph(args.n)
    if fam == "tournament":
        _need(args, "n")
        return families.transitive_tournament(args.n)
    if fam == "linegraph-of":
        base = _read_graph(args.input, args.labels) if args.input else None
        if base is None:
            _need(args, "n")
            base = families.complete_graph(args.n)
        return families.line_graph(base)
    if fam == "linedigraph-of":
        _need(args, "n")
        return families.line_digraph(families.transitive_tournament(args.n))
    raise UsageError(f"unknown family {fam!r}")


def _read_graph(path: str, labels_path: str | None = None) -> LabeledGraph:
    g = codecs.graph6_decode(Path(path).read_bytes().splitlines()[0])
    if labels_path is None:
        default = Path(path + ".labels.json")
        labels_path = str(default) if default.exists() else None
    if labels_path:
        g = codecs.relabel(g, codecs.sidecar_labels(Path(labels_path).read_text()))
    return g


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    obj = _build_family(args)
    if args.format == "dot":
        _emit(codecs.dot_encode(obj), args.out)
        return EXIT_OK
    if not isinstance(obj, LabeledGraph):
        obj = families.underlying_graph(obj)
    _emit(codecs.graph6_encode(obj).decode("ascii") + "\n", args.out)
    sidecar = args.labels_out or (args.out + ".labels.json" if args.out else None)
    if sidecar:
        Path(sidecar).write_text(codecs.sidecar_json(obj) + "\n")
    return EXIT_OK


def cmd_orient(args) -> int:
    o = orient_m_shift(args.n, args.k, args.m)
    payload = codecs.arcs_json(o.sorted_arcs())
    status = EXIT_OK
    if args.verify:
        witness = find_shortcut_fast(o) if is_acyclic(o) else None
        verified = is_acyclic(o) and witness is None
        payload["verified"] = verified
        if witness is not None:
            payload["shortcut"] = witness.as_json(codecs.label_to_json)
        if not verified:
            status = EXIT_FAIL
    if args.format == "dot":
        _emit(codecs.dot_encode(o.as_digraph()), args.out)
        if args.verify:
            print(json.dumps({"verified": payload["verified"]}), file=sys.stderr)
    else:
        _emit(json.dumps(payload) + "\n", args.out)
    if status != EXIT_OK:
        print("orientation FAILED semi-transitivity verification", file=sys.stderr)
    return status


def cmd_check(args) -> int:
    g = _read_graph(args.graph, args.labels)
    arcs = codecs.arcs_from_json(json.loads(Path(args.orientation).read_text()))
    o = Orientation(g, arcs)
    result = {"acyclic": is_acyclic(o)}
    if result["acyclic"]:
        witness = find_shortcut_fast(o)
        result["semi_transitive"] = witness is None
        if witness is not None:
            result["shortcut"] = witness.as_json(codecs.label_to_json)
    else:
        result["semi_transitive"] = False
    print(json.dumps(result))
    return EXIT_OK if result["semi_transitive"] else EXIT_FAIL


def cmd_decide(args) -> int:
    g = _read_graph(args.input, args.labels)
    d = decide_word_representable(
        g, max_seconds=args.max_seconds, max_nodes=args.max_nodes,
        allow_large=args.allow_large, workers=args.workers,
    )
    print(json.dumps(decision_json(d, codecs.label_to_json)))
    return EXIT_BUDGET if d.verdict == UNKNOWN else EXIT_OK


def cmd_word(args) -> int:
    g = _read_graph(args.input, args.labels)
    if args.word_cmd == "find":
        try:
            w = find_uniform_word(g, args.k, budget=args.budget)
        except BudgetExhausted as exc:
            print(json.dumps({"k": args.k, "word": None, "status": "budget-exhausted"}))
            print(str(exc), file=sys.stderr)
            return EXIT_BUDGET
        text = None if w is None else ",".join(codecs.label_text(x) for x in w)
        print(json.dumps({"k": args.k, "word": text, "status": "found" if w else "none"}))
        return EXIT_OK
    by_text = {codecs.label_text(v): v for v in g.vertices}
    letters = []
    for tok in parse_word(args.word):
        if tok not in by_text:
            raise UsageError(f"letter {tok!r} is not a vertex of the graph")
        letters.append(by_text[tok])
    ok = represents(letters, g)
    print(json.dumps({"represents": ok}))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_experiments(args) -> int:
    def progress(entry):
        print(f"[{entry['verdict']:>7}] {entry['claim_id']} ({entry['elapsed_ms']:.0f} ms)", file=sys.stderr)

    report = run_suite(args.suite, skip=args.skip, seed=args.seed, progress=progress)
    text = json.dumps(jsonable(report), indent=2) + "\n"
    _emit(text, args.out)
    failed = [c["claim_id"] for c in report["claims"] if c["verdict"] == "fail"]
    if failed:
        print("failing claims: " + ", ".join(failed), file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shiftrep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a graph family as graph6 or DOT")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--input", help="graph6 base graph for linegraph-of")
    g.add_argument("--labels", help="label sidecar for --input")
    g.add_argument("--format", choices=("graph6", "dot"), default="graph6")
    g.add_argument("--out")
    g.add_argument("--labels-out", help="label sidecar path (default: OUT.labels.json)")
    g.set_defaults(func=cmd_generate)

    o = sub.add_parser("orient", help="emit the explicit orientation of G_m(n,k)")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--m", type=int, default=1)
    o.add_argument("--verify", action="store_true")
    o.add_argument("--format", choices=("json", "dot"), default="json")
    o.add_argument("--out")
    o.set_defaults(func=cmd_orient)

    c = sub.add_parser("check", help="check an orientation JSON against a graph6 graph")
    c.add_argument("--graph", required=True)
    c.add_argument("--orientation", required=True)
    c.add_argument("--labels")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("decide", help="decide word-representability exhaustively")
    d.add_argument("--input", required=True)
    d.add_argument("--labels")
    d.add_argument("--max-seconds", type=float)
    d.add_argument("--max-nodes", type=int)
    d.add_argument("--allow-large", action="store_true")
    d.add_argument("--workers", type=int, default=1)
    d.set_defaults(func=cmd_decide)

    w = sub.add_parser("word", help="find or verify representing words")
    wsub = w.add_subparsers(dest="word_cmd", required=True)
    wf = wsub.add_parser("find")
    wf.add_argument("--input", required=True)
    wf.add_argument("--labels")
    wf.add_argument("--k", type=int, default=2)
    wf.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    wf.set_defaults(func=cmd_word)
    wv = wsub.add_parser("verify")
    wv.add_argument("--input", required=True)
    wv.add_argument("--labels")
    wv.add_argument("--word", required=True, help="comma-separated letters")
    wv.set_defaults(func=cmd_word)

    e = sub.add_parser("experiments", help="run the paper-claim suite")
    e.add_argument("--suite", required=True, choices=sorted(SUITES))
    e.add_argument("--out")
    e.add_argument("--skip", action="append", default=[], help="claim id or tag (e.g. slow); repeatable")
    e.add_argument("--seed", type=int, default=DEFAULT_SEED)
    e.set_defaults(func=cmd_experiments)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, VertexLimitError, SizeLimitError, codecs.Graph6Error) as exc:
        print(f"shiftrep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, OSError) as exc:
        print(f"shiftrep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
