"""Labeled simple graphs and digraphs plus a few structural utilities.

Vertices carry structured labels: integers, strings, or tuples.  All labels
in one graph share a kind, and vertices are always stored in canonical
(sorted) order so that codecs and generators are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator

Label = Hashable


def label_kind(label: Label) -> str:
    if isinstance(label, bool):
        raise TypeError(f"boolean is not a valid vertex label: {label!r}")
    if isinstance(label, int):
        return "int"
    if isinstance(label, str):
        return "str"
    if isinstance(label, tuple):
        return "tuple"
    raise TypeError(f"unsupported vertex label type: {type(label).__name__}")


def _canonical_vertices(vertices: Iterable[Label]) -> tuple:
    verts = list(vertices)
    if len(set(verts)) != len(verts):
        seen = set()
        dup = next(v for v in verts if v in seen or seen.add(v))
        raise ValueError(f"duplicate vertex label {dup!r}")
    kinds = {label_kind(v) for v in verts}
    if len(kinds) > 1:
        raise ValueError(f"mixed vertex label kinds in one graph: {sorted(kinds)}")
    return tuple(sorted(verts))


@dataclass(frozen=True)
class LabeledGraph:
    """Finite simple undirected graph.

    Edges are stored as pairs ``(u, v)`` with ``u < v`` in label order.
    """

    vertices: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __init__(self, vertices: Iterable[Label], edges: Iterable[Iterable[Label]] = ()):
        verts = _canonical_vertices(vertices)
        vset = set(verts)
        canon = set()
        for e in edges:
            u, v = tuple(e)
            if u == v:
                raise ValueError(f"loop at vertex {u!r}")
            for x in (u, v):
                if x not in vset:
                    raise ValueError(f"edge endpoint {x!r} is not a vertex")
            canon.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(canon))

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    @cached_property
    def adjacency_masks(self) -> tuple:
        """Neighbourhoods as integer bitsets over vertex indices."""
        idx = self.index
        masks = [0] * len(self.vertices)
        for u, v in self.edges:
            masks[idx[u]] |= 1 << idx[v]
            masks[idx[v]] |= 1 << idx[u]
        return tuple(masks)

    def neighbors(self, v: Label) -> frozenset:
        return self.adjacency[v]

    def has_edge(self, u: Label, v: Label) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def sorted_edges(self) -> list:
        idx = self.index
        return sorted(self.edges, key=lambda e: (idx[e[0]], idx[e[1]]))

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator:
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"LabeledGraph(|V|={self.order}, |E|={self.size})"


@dataclass(frozen=True)
class Digraph:
    """Finite digraph without self-arcs; at most one arc per ordered pair."""

    vertices: tuple
    arcs: frozenset = field(default_factory=frozenset)

    def __init__(self, vertices: Iterable[Label], arcs: Iterable[Iterable[Label]] = ()):
        verts = _canonical_vertices(vertices)
        vset = set(verts)
        canon = set()
        for a in arcs:
            u, v = tuple(a)
            if u == v:
                raise ValueError(f"self-arc at vertex {u!r}")
            for x in (u, v):
                if x not in vset:
                    raise ValueError(f"arc endpoint {x!r} is not a vertex")
            canon.add((u, v))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arcs", frozenset(canon))

    @cached_property
    def index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def sorted_arcs(self) -> list:
        idx = self.index
        return sorted(self.arcs, key=lambda a: (idx[a[0]], idx[a[1]]))

    def __repr__(self) -> str:
        return f"Digraph(|V|={len(self.vertices)}, |A|={len(self.arcs)})"


def induced_subgraph(g: LabeledGraph, keep: Iterable[Label]) -> LabeledGraph:
    keep = set(keep)
    for v in keep:
        if v not in g.index:
            raise KeyError(f"label {v!r} is not a vertex of the graph")
    return LabeledGraph(keep, (e for e in g.edges if e[0] in keep and e[1] in keep))


def is_triangle_free(g: LabeledGraph) -> bool:
    masks = g.adjacency_masks
    for i, mi in enumerate(masks):
        # only look at neighbours j > i so each triangle is seen once
        higher = mi >> (i + 1)
        j = i + 1
        while higher:
            if higher & 1 and masks[j] & mi:
                return False
            higher >>= 1
            j += 1
    return True


def odd_girth(g: LabeledGraph) -> int | None:
    """Length of a shortest odd cycle, or ``None`` when ``g`` is bipartite.

    BFS over (vertex, parity) states from every source: the shortest odd
    closed walk through ``s`` contains an odd cycle no longer than itself,
    so the minimum over all sources is the odd girth.
    """
    best = None
    adj = g.adjacency
    for s in g.vertices:
        dist = {(s, 0): 0}
        queue = deque([(s, 0)])
        while queue:
            v, p = queue.popleft()
            d = dist[(v, p)]
            if best is not None and d + 1 >= best:
                break
            for w in adj[v]:
                state = (w, 1 - p)
                if state not in dist:
                    dist[state] = d + 1
                    queue.append(state)
            if (s, 1) in dist:
                break
        d = dist.get((s, 1))
        if d is not None and (best is None or d < best):
            best = d
    return best


class SizeLimitError(ValueError):
    pass


def chromatic_number(g: LabeledGraph, max_vertices: int = 20) -> int:
    """Exact chromatic number by backtracking over k = 1, 2, ...

    Raises SizeLimitError above ``max_vertices``; pass a larger
    ``max_vertices`` (CLI: ``--max-vertices``) to force the search.
    """
    n = g.order
    if n > max_vertices:
        raise SizeLimitError(
            f"chromatic_number: {n} vertices exceeds the limit of {max_vertices}; "
            "raise max_vertices (--max-vertices) to override"
        )
    if n == 0:
        return 0
    masks = g.adjacency_masks
    # colour high-degree vertices first; it only affects speed
    order = sorted(range(n), key=lambda i: -bin(masks[i]).count("1"))
    for k in range(1, n + 1):
        if _colorable(masks, order, k):
            return k
    return n  # unreachable: n colours always suffice


def _colorable(masks: tuple, order: list, k: int) -> bool:
    colors = [-1] * len(masks)

    def place(pos: int, used: int) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        taken = set()
        m = masks[v]
        while m:
            low = m & -m
            c = colors[low.bit_length() - 1]
            if c >= 0:
                taken.add(c)
            m ^= low
        # a fresh colour is interchangeable with any other unused one
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colors[v] = c
            if place(pos + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return place(0, 0)
