"""Certified word-representability decisions for small graphs.

Every acyclic orientation is induced by some linear order of the vertices,
so a graph is word-representable iff some vertex ordering induces a
semi-transitive orientation.  Orderings are built one vertex at a time; the
new vertex is a sink of the prefix orientation, so only shortcuts ending at
it need checking, and a prefix with a shortcut is pruned together with its
whole subtree.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .graph import Digraph, Label, LabeledGraph
from .orientation import Orientation, is_semi_transitive

DEFAULT_MAX_VERTICES = 11

REPRESENTABLE = "representable"
NON_REPRESENTABLE = "non-representable"
UNKNOWN = "unknown"


class VertexLimitError(ValueError):
    pass


@dataclass
class SearchStats:
    orderings_examined: int = 0  # complete orderings reached
    prunes: int = 0
    pruned_orderings: int = 0  # complete orderings covered by pruned subtrees
    nodes: int = 0
    total_orderings: int = 0
    exhausted: bool = False
    elapsed_ms: float = 0.0
    workers: int = 1

    @property
    def covered(self) -> int:
        return self.orderings_examined + self.pruned_orderings

    def merge(self, other: "SearchStats") -> None:
        self.orderings_examined += other.orderings_examined
        self.prunes += other.prunes
        self.pruned_orderings += other.pruned_orderings
        self.nodes += other.nodes


@dataclass
class Decision:
    verdict: str
    witness: Optional[Orientation] = None
    witness_order: Optional[tuple] = None
    witness_canonical: bool = True
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def representable(self) -> bool:
        return self.verdict == REPRESENTABLE


def orientation_from_ordering(g: LabeledGraph, order: Sequence[Label]) -> Orientation:
    order = list(order)
    if len(order) != g.order or set(order) != set(g.vertices):
        raise ValueError("order must be a permutation of the graph's vertices")
    pos = {v: i for i, v in enumerate(order)}
    return Orientation(g, ((u, v) if pos[u] < pos[v] else (v, u) for u, v in g.edges))


class _Budget(Exception):
    pass


def _search(
    adj: tuple,
    first: Optional[int],
    prune: bool,
    max_seconds: Optional[float],
    max_nodes: Optional[int],
) -> tuple:
    """Depth-first ordering search; returns (order or None, stats, completed)."""
    n = len(adj)
    stats = SearchStats()
    anc = [0] * n  # ancestors inside the current prefix
    desc = [0] * n  # descendants inside the current prefix
    order: list = []
    deadline = None if max_seconds is None else time.monotonic() + max_seconds
    fact = [math.factorial(i) for i in range(n + 1)]

    def shortcut_free(v: int, placed: int) -> bool:
        ins = adj[v] & placed
        a = 0
        m = ins
        while m:
            low = m & -m
            a |= low | anc[low.bit_length() - 1]
            m ^= low
        anc[v] = a
        if not prune:
            return True
        m = ins
        while m:
            low = m & -m
            u = low.bit_length() - 1
            between = desc[u] & a
            # every vertex strictly between u and v must see both ends
            if between & ~(adj[v] & adj[u]):
                return False
            m ^= low
        return True

    def dfs(placed: int) -> bool:
        depth = len(order)
        if depth == n:
            stats.orderings_examined += 1
            return prune or _leaf_ok(adj, order)
        free = ((1 << n) - 1) & ~placed
        if depth == 0 and first is not None:
            free = 1 << first
        while free:
            low = free & -free
            v = low.bit_length() - 1
            free ^= low
            stats.nodes += 1
            if max_nodes is not None and stats.nodes > max_nodes:
                raise _Budget
            if deadline is not None and stats.nodes & 1023 == 0 and time.monotonic() > deadline:
                raise _Budget
            if not shortcut_free(v, placed):
                stats.prunes += 1
                stats.pruned_orderings += fact[n - depth - 1]
                continue
            a = anc[v]
            m = a
            while m:
                lw = m & -m
                desc[lw.bit_length() - 1] |= 1 << v
                m ^= lw
            order.append(v)
            if dfs(placed | (1 << v)):
                return True
            order.pop()
            m = a
            while m:
                lw = m & -m
                desc[lw.bit_length() - 1] &= ~(1 << v)
                m ^= lw
        return False

    try:
        found = dfs(0)
    except _Budget:
        return None, stats, False
    return (tuple(order) if found else None), stats, True


def _leaf_ok(adj: tuple, order: list) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    arcs = [
        (u, v) for u in range(len(adj)) for v in range(len(adj))
        if (adj[u] >> v) & 1 and pos[u] < pos[v]
    ]
    return is_semi_transitive(Digraph(range(len(adj)), arcs))


def _worker(args):
    adj, first, prune, max_seconds, max_nodes = args
    return _search(adj, first, prune, max_seconds, max_nodes)


def decide_word_representable(
    g: LabeledGraph,
    *,
    max_seconds: Optional[float] = None,
    max_nodes: Optional[int] = None,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    allow_large: bool = False,
    workers: int = 1,
    prune: bool = True,
) -> Decision:
    """Decide word-representability by exhaustive search over vertex orderings.

    ``non-representable`` is only returned after the ordering tree has been
    fully covered; hitting a time or node budget yields ``unknown``.  With
    several workers the tree is split by first vertex and the witness from
    the smallest first vertex is reported, so the result matches the
    single-worker run.
    """
    n = g.order
    if n > max_vertices and not allow_large:
        raise VertexLimitError(
            f"{n} vertices exceeds the exhaustive-search limit of {max_vertices}; "
            "pass allow_large (--allow-large) to search anyway"
        )
    t0 = time.perf_counter()
    adj = g.adjacency_masks
    total = SearchStats(total_orderings=math.factorial(n), workers=max(1, workers))

    if workers <= 1 or n <= 1:
        order, stats, completed = _search(adj, None, prune, max_seconds, max_nodes)
        total.merge(stats)
        results = [(order, completed)]
    else:
        jobs = [(adj, v, prune, max_seconds, max_nodes) for v in range(n)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outs = list(pool.map(_worker, jobs))
        results = []
        for order, stats, completed in outs:
            total.merge(stats)
            results.append((order, completed))

    total.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    canonical = True
    for order, completed in results:
        if order is not None:
            labels = tuple(g.vertices[i] for i in order)
            witness = orientation_from_ordering(g, labels)
            if not is_semi_transitive(witness):
                raise AssertionError("search produced a witness that is not semi-transitive")
            return Decision(REPRESENTABLE, witness, labels, canonical, total)
        # an unfinished earlier partition might hold a lexicographically smaller witness
        canonical = canonical and completed
    if all(completed for _, completed in results):
        total.exhausted = True
        if total.covered != total.total_orderings:
            raise AssertionError(
                f"coverage mismatch: {total.covered} orderings accounted for, expected {total.total_orderings}"
            )
        return Decision(NON_REPRESENTABLE, stats=total)
    return Decision(UNKNOWN, stats=total)


def decision_json(d: Decision, encode=lambda x: x) -> dict:
    stats = asdict(d.stats)
    return {
        "verdict": d.verdict,
        "witness_arcs": None if d.witness is None else [[encode(u), encode(v)] for u, v in d.witness.sorted_arcs()],
        "witness_order": None if d.witness_order is None else [encode(v) for v in d.witness_order],
        "witness_canonical": d.witness_canonical,
        "orderings_examined": d.stats.orderings_examined,
        "prunes": d.stats.prunes,
        "pruned_orderings": d.stats.pruned_orderings,
        "total_orderings": d.stats.total_orderings,
        "exhausted": d.stats.exhausted,
        "elapsed_ms": round(stats["elapsed_ms"], 3),
        "workers": d.stats.workers,
    }
