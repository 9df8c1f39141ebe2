"""The built-in ``paper`` experiment suite.

Each claim is a function ``(ctx) -> (passed, artifact)``; ``run_suite``
times them, honours skips and assembles the versioned JSON report.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from datetime import datetime, timezone
from itertools import combinations, product
from typing import Callable, Iterable, Iterator

from .codecs import graph6_decode, graph6_encode, label_to_json
from .decide import NON_REPRESENTABLE, REPRESENTABLE, decide_word_representable, orientation_from_ordering
from .families import (
    complete_graph,
    line_digraph,
    line_graph,
    m_shift_graph,
    shift_graph,
    simplified_de_bruijn,
    spread_de_bruijn,
    transitive_tournament,
    underlying_graph,
)
from .graph import LabeledGraph, chromatic_number, is_triangle_free, odd_girth
from .orientation import (
    Orientation,
    find_shortcut_fast,
    find_shortcut_naive,
    is_acyclic,
    is_semi_transitive,
    orient_m_shift,
)
from .words import find_uniform_word, represents

SCHEMA = "shiftrep-report/1"
DEFAULT_SEED = 20240601


def sweep_params() -> list:
    """(n, k, m) with 2 <= k < n <= 9 and 1 <= m < k, plus three larger cases."""
    params = [(n, k, m) for n in range(3, 10) for k in range(2, n) for m in range(1, k)]
    params += [(12, 2, 1), (10, 3, 1), (10, 3, 2)]
    return params


def labeled_graphs(n: int) -> Iterator[LabeledGraph]:
    """All 2^C(n,2) labeled graphs on vertices 1..n."""
    verts = list(range(1, n + 1))
    pairs = list(combinations(verts, 2))
    for mask in range(1 << len(pairs)):
        yield LabeledGraph(verts, (p for i, p in enumerate(pairs) if mask >> i & 1))


def acyclic_orientations(g: LabeledGraph) -> Iterator[Orientation]:
    edges = g.sorted_edges()
    for flips in product((False, True), repeat=len(edges)):
        o = Orientation(g, ((v, u) if f else (u, v) for (u, v), f in zip(edges, flips)))
        if is_acyclic(o):
            yield o


def random_acyclic_orientations(count: int, n: int, seed: int) -> Iterator[Orientation]:
    rng = random.Random(seed)
    verts = list(range(1, n + 1))
    for _ in range(count):
        g = LabeledGraph(verts, (p for p in combinations(verts, 2) if rng.random() < 0.5))
        order = verts[:]
        rng.shuffle(order)
        yield orientation_from_ordering(g, order)


@dataclass
class Context:
    seed: int = DEFAULT_SEED
    instances: list = field(default_factory=list)  # graphs generated along the way, for the codec claim

    def keep(self, g: LabeledGraph) -> LabeledGraph:
        self.instances.append(g)
        return g


# --- claims -------------------------------------------------------------------

def claim_orientation_sweep(ctx: Context):
    failures = []
    for n, k, m in sweep_params():
        o = orient_m_shift(n, k, m)
        ctx.keep(o.base)
        if not is_semi_transitive(o):
            failures.append([n, k, m])
    return not failures, {"instances": len(sweep_params()), "failures": failures}


def claim_counts(ctx: Context):
    bad = []
    for n, k, m in sweep_params():
        g = ctx.keep(m_shift_graph(n, k, m))
        if g.order != math.comb(n, k) or g.size != math.comb(n, k + m):
            bad.append({"nkm": [n, k, m], "V": g.order, "E": g.size})
    return not bad, {"instances": len(sweep_params()), "mismatches": bad}


def claim_m1_coincidence(ctx: Context):
    pairs = sorted({(n, k) for n, k, _ in sweep_params()})
    bad = [[n, k] for n, k in pairs if m_shift_graph(n, k, 1) != ctx.keep(shift_graph(n, k))]
    return not bad, {"instances": len(pairs), "mismatches": bad}


def claim_line_digraph_tournament(ctx: Context):
    bad = []
    for n in range(3, 11):
        h = ctx.keep(underlying_graph(line_digraph(transitive_tournament(n))))
        if h != shift_graph(n, 2):
            bad.append(n)
    return not bad, {"n_range": [3, 10], "mismatches": bad}


def claim_line_graph_contrast(ctx: Context):
    lk5 = ctx.keep(line_graph(complete_graph(5)))
    k5 = ctx.keep(complete_graph(5))
    d_line = decide_word_representable(lk5)
    d_k5 = decide_word_representable(k5)
    ok = d_line.verdict == NON_REPRESENTABLE and d_line.stats.exhausted and d_k5.verdict == REPRESENTABLE
    return ok, {
        "L(K5)": {
            "verdict": d_line.verdict,
            "prunes": d_line.stats.prunes,
            "pruned_orderings": d_line.stats.pruned_orderings,
            "total_orderings": d_line.stats.total_orderings,
        },
        "K5": {"verdict": d_k5.verdict, "witness_order": list(d_k5.witness_order or ())},
    }


def claim_de_bruijn(ctx: Context):
    cases = [
        ("S(3,2)", simplified_de_bruijn(3, 2), NON_REPRESENTABLE),
        ("S(2,2)", simplified_de_bruijn(2, 2), REPRESENTABLE),
        ("S(2,3)", simplified_de_bruijn(2, 3), REPRESENTABLE),
        ("S_1(3,2)", spread_de_bruijn(3, 2, 1), REPRESENTABLE),
    ]
    out, ok = {}, True
    for name, g, expected in cases:
        ctx.keep(g)
        d = decide_word_representable(g)
        out[name] = {"verdict": d.verdict, "expected": expected}
        if d.witness_order:
            out[name]["witness_order"] = list(d.witness_order)
        ok = ok and d.verdict == expected
    return ok, out


def claim_checker_oracle(ctx: Context):
    checked, disagreements = 0, []
    for n in range(1, 6):
        for g in labeled_graphs(n):
            ctx.keep(g)
            for o in acyclic_orientations(g):
                checked += 1
                if (find_shortcut_naive(o) is None) != (find_shortcut_fast(o) is None):
                    disagreements.append([list(a) for a in o.sorted_arcs()])
    random_checked = 0
    for o in random_acyclic_orientations(1000, 8, ctx.seed):
        random_checked += 1
        ctx.keep(o.base)
        if (find_shortcut_naive(o) is None) != (find_shortcut_fast(o) is None):
            disagreements.append([list(a) for a in o.sorted_arcs()])
    return not disagreements, {
        "exhaustive_orientations": checked,
        "random_orientations": random_checked,
        "seed": ctx.seed,
        "disagreements": disagreements[:5],
    }


def claim_small_graph_completeness(ctx: Context):
    failures, max_k = [], 0
    for g in labeled_graphs(5):
        ctx.keep(g)
        d = decide_word_representable(g)
        word = None
        for k in (1, 2, 3):
            word = find_uniform_word(g, k)
            if word is not None:
                max_k = max(max_k, k)
                break
        if d.verdict != REPRESENTABLE or word is None or not represents(word, g):
            failures.append([list(e) for e in g.sorted_edges()])
    return not failures, {"graphs": 1024, "max_uniformity_needed": max_k, "failures": failures[:5]}


def claim_structure(ctx: Context):
    triangle_free = {n: is_triangle_free(ctx.keep(shift_graph(n, 2))) for n in range(3, 13)}
    girth = odd_girth(shift_graph(5, 2))
    # n = 2 lies outside n > k; its vertex set is the single tuple (1,2)
    chi = {2: chromatic_number(LabeledGraph([(1, 2)]))}
    for n in range(3, 9):
        chi[n] = chromatic_number(shift_graph(n, 2), max_vertices=30)
    chi_ok = all(chi[n] == math.ceil(math.log2(n)) for n in chi)
    ok = all(triangle_free.values()) and girth == 5 and chi_ok
    return ok, {
        "triangle_free_n3_12": all(triangle_free.values()),
        "odd_girth_G52": girth,
        "chromatic_numbers": {str(n): c for n, c in chi.items()},
    }


def claim_graph6_roundtrip(ctx: Context):
    seen, checked, too_large, bad = set(), 0, 0, []
    for g in ctx.instances:
        key = (g.vertices, g.edges)
        if key in seen:
            continue
        seen.add(key)
        if g.order >= 63:
            too_large += 1
            continue
        checked += 1
        h = graph6_decode(graph6_encode(g))
        idx = g.index
        back = {(idx[u] + 1, idx[v] + 1) for u, v in g.edges}
        if h.order != g.order or h.edges != back:
            bad.append({"V": g.order, "E": g.size})
    return not bad and checked > 0, {
        "distinct_instances": checked,
        "outside_small_format": too_large,
        "failures": bad[:5],
    }


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    parameters: dict
    run: Callable
    tags: tuple = ()


CLAIMS = (
    Claim("orientation-sweep", "orient_m_shift is semi-transitive over the (n,k,m) sweep",
          {"n": "3..9 plus (12,2,1),(10,3,1),(10,3,2)"}, claim_orientation_sweep),
    Claim("structural-counts", "|V(G_m(n,k))| = C(n,k) and |E(G_m(n,k))| = C(n,k+m)",
          {"n": "sweep"}, claim_counts),
    Claim("m1-coincidence", "G_1(n,k) is label-identical to G(n,k)",
          {"n": "sweep"}, claim_m1_coincidence),
    Claim("line-digraph-tournament", "underlying line digraph of the transitive tournament equals G(n,2)",
          {"n": "3..10"}, claim_line_digraph_tournament),
    Claim("line-graph-contrast", "L(K5) is non-representable while K5 is representable",
          {"n": 5}, claim_line_graph_contrast, ("slow",)),
    Claim("de-bruijn-small", "S(3,2) non-representable; S(2,2), S(2,3), S_1(3,2) representable",
          {"graphs": ["S(3,2)", "S(2,2)", "S(2,3)", "S_1(3,2)"]}, claim_de_bruijn),
    Claim("de-bruijn-s-n-3", "S(n,3) non-representable for n >= 3 (27+ vertices, not certified)",
          {"n": ">=3"}, None, ("uncertified",)),
    Claim("checker-oracle", "fast and naive shortcut checkers agree",
          {"exhaustive_max_n": 5, "random": 1000, "random_n": 8}, claim_checker_oracle),
    Claim("small-graph-completeness", "all 1024 labeled 5-vertex graphs are representable with k <= 3 words",
          {"n": 5, "k_max": 3}, claim_small_graph_completeness),
    Claim("shift-structure", "G(n,2): triangle-free, odd girth 5 at n=5, chromatic number ceil(log2 n)",
          {"triangle_free_n": "3..12", "chi_n": "2..8"}, claim_structure),
    Claim("graph6-roundtrip", "graph6 decode(encode(g)) = g on every generated instance with n < 63",
          {}, claim_graph6_roundtrip),
)

SUITES = {"paper": CLAIMS}


def run_claim(claim: Claim, ctx: Context) -> dict:
    t0 = time.perf_counter()
    try:
        ok, artifact = claim.run(ctx)
        verdict = "pass" if ok else "fail"
    except Exception as exc:  # a crashing claim is a failed claim
        verdict, artifact = "fail", {"error": f"{type(exc).__name__}: {exc}"}
    return {
        "claim_id": claim.claim_id,
        "description": claim.description,
        "parameters": claim.parameters,
        "verdict": verdict,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
        "artifact": artifact,
    }


def run_suite(suite: str = "paper", skip: Iterable[str] = (), seed: int = DEFAULT_SEED,
              progress: Callable[[dict], None] = None) -> dict:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; available: {sorted(SUITES)}")
    skip = set(skip)
    ctx = Context(seed=seed)
    claims = []
    for claim in SUITES[suite]:
        if claim.run is None or claim.claim_id in skip or skip & set(claim.tags):
            reason = "not certifiable at desk scale" if claim.run is None else "skipped on request"
            entry = {
                "claim_id": claim.claim_id,
                "description": claim.description,
                "parameters": claim.parameters,
                "verdict": "skipped",
                "elapsed_ms": 0.0,
                "artifact": {"reason": reason},
            }
        else:
            entry = run_claim(claim, ctx)
        claims.append(entry)
        if progress is not None:
            progress(entry)
    return {
        "schema": SCHEMA,
        "suite": suite,
        "seed": seed,
        "generated_at": datetime.now(timezone.utc).isoformat(),
        "claims": claims,
    }


def jsonable(obj):
    """Convert tuples (labels) to lists recursively for json.dumps."""
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return label_to_json(obj)
