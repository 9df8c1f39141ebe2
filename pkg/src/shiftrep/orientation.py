"""Semi-transitivity checking and the explicit orientations of m-shift graphs.

An acyclic orientation has a *shortcut* when some directed path
u1 -> ... -> ut (t >= 3) has the arc u1 -> ut although the path's vertices do
not induce a transitive tournament.  A semi-transitive orientation is an
acyclic one without shortcuts.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Union

from .families import m_shift_graph, shifted_by
from .graph import Digraph, LabeledGraph

NAIVE_MAX_VERTICES = 12


class Orientation:
    """A direction for every edge of ``base``."""

    def __init__(self, base: LabeledGraph, arcs: Iterable[tuple]):
        arcs = frozenset(tuple(a) for a in arcs)
        seen = set()
        for u, v in arcs:
            if not base.has_edge(u, v):
                raise ValueError(f"arc {u!r} -> {v!r} is not an edge of the base graph")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"edge {e!r} is oriented both ways")
            seen.add(e)
        if len(seen) != base.size:
            missing = sorted(base.edges - seen)[0]
            raise ValueError(f"edge {missing!r} has no direction")
        self.base = base
        self.arcs = arcs

    @property
    def vertices(self) -> tuple:
        return self.base.vertices

    @cached_property
    def index(self) -> dict:
        return self.base.index

    def sorted_arcs(self) -> list:
        idx = self.index
        return sorted(self.arcs, key=lambda a: (idx[a[0]], idx[a[1]]))

    def as_digraph(self) -> Digraph:
        return Digraph(self.base.vertices, self.arcs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Orientation) and self.base == other.base and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.base, self.arcs))

    def __repr__(self) -> str:
        return f"Orientation(|V|={len(self.vertices)}, |A|={len(self.arcs)})"


DirectedLike = Union[Orientation, Digraph]


@dataclass(frozen=True)
class ShortcutWitness:
    path: tuple
    chord: tuple
    violation: tuple
    reason: str  # "non-adjacent" or "backward"

    def as_json(self, encode=lambda x: x) -> dict:
        return {
            "path": [encode(v) for v in self.path],
            "chord": [encode(v) for v in self.chord],
            "violation": [encode(v) for v in self.violation],
            "reason": self.reason,
        }


def reverse_orientation(o: Orientation) -> Orientation:
    return Orientation(o.base, ((v, u) for u, v in o.arcs))


def orient_m_shift(n: int, k: int, m: int) -> Orientation:
    """Orientation of G_m(n, k) with u -> v whenever v_i = u_{i+m} for all i.

    Every arc points from the lexicographically smaller tuple to the larger.
    Raises if an edge satisfies both or neither shift condition.
    """
    g = m_shift_graph(n, k, m)
    arcs = []
    for u, v in g.sorted_edges():
        fwd, back = shifted_by(u, v, m), shifted_by(v, u, m)
        if fwd == back:
            raise AssertionError(f"edge {u}-{v}: shift conditions hold {'both' if fwd else 'neither'}")
        arcs.append((u, v) if fwd else (v, u))
    return Orientation(g, arcs)


# --- bitset view of a digraph ----------------------------------------------

class _Bits:
    """Index-based bitsets for successor/adjacency/reachability."""

    def __init__(self, d: DirectedLike):
        self.labels = d.vertices
        idx = d.index
        n = len(self.labels)
        self.n = n
        self.succ = [0] * n
        self.pred = [0] * n
        for u, v in d.arcs:
            self.succ[idx[u]] |= 1 << idx[v]
            self.pred[idx[v]] |= 1 << idx[u]
        self.adj = [s | p for s, p in zip(self.succ, self.pred)]
        self.topo = self._topological_order()

    def _topological_order(self) -> Optional[list]:
        indeg = [bin(p).count("1") for p in self.pred]
        ready = deque(i for i in range(self.n) if indeg[i] == 0)
        out = []
        while ready:
            i = ready.popleft()
            out.append(i)
            for j in _bits(self.succ[i]):
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
        return out if len(out) == self.n else None

    @cached_property
    def desc(self) -> list:
        desc = [0] * self.n
        for i in reversed(self.topo):
            acc = 0
            for j in _bits(self.succ[i]):
                acc |= (1 << j) | desc[j]
            desc[i] = acc
        return desc

    @cached_property
    def anc(self) -> list:
        anc = [0] * self.n
        for i in self.topo:
            acc = 0
            for j in _bits(self.pred[i]):
                acc |= (1 << j) | anc[j]
            anc[i] = acc
        return anc

    def path(self, a: int, b: int) -> list:
        """Shortest directed path a ~> b; neighbours scanned in index order."""
        parent = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y in _bits(self.succ[x]):
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        out = [b]
        while parent[out[-1]] is not None:
            out.append(parent[out[-1]])
        return out[::-1]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_acyclic(d: DirectedLike) -> bool:
    """Kahn's algorithm: acyclic iff repeatedly stripping sources empties the graph."""
    return _Bits(d).topo is not None


def _require_acyclic(bits: _Bits) -> None:
    if bits.topo is None:
        raise ValueError("orientation contains a directed cycle")


def find_shortcut_naive(o: DirectedLike, max_vertices: int = NAIVE_MAX_VERTICES) -> Optional[ShortcutWitness]:
    """Enumerate every directed path with >= 3 vertices and test it directly."""
    if len(o.vertices) > max_vertices:
        raise ValueError(
            f"naive shortcut search is limited to {max_vertices} vertices, got {len(o.vertices)}"
        )
    b = _Bits(o)
    _require_acyclic(b)
    lab = b.labels

    def check(path: list) -> Optional[ShortcutWitness]:
        first, last = path[0], path[-1]
        if not (b.succ[first] >> last) & 1:
            return None
        for i in range(len(path)):
            for j in range(i + 1, len(path)):
                x, y = path[i], path[j]
                if not (b.succ[x] >> y) & 1:
                    reason = "backward" if (b.adj[x] >> y) & 1 else "non-adjacent"
                    return ShortcutWitness(
                        tuple(lab[p] for p in path), (lab[first], lab[last]),
                        (lab[x], lab[y]), reason,
                    )
        return None

    def extend(path: list) -> Optional[ShortcutWitness]:
        if len(path) >= 3:
            w = check(path)
            if w is not None:
                return w
        for y in _bits(b.succ[path[-1]]):
            path.append(y)
            w = extend(path)
            path.pop()
            if w is not None:
                return w
        return None

    for s in range(b.n):
        w = extend([s])
        if w is not None:
            return w
    return None


def find_shortcut_fast(o: DirectedLike) -> Optional[ShortcutWitness]:
    """Polynomial shortcut search via reachability bitsets.

    For an arc u -> v let S be the vertices strictly between them (reached from
    u, reaching v).  There is a shortcut through u -> v iff some w in S misses
    the arc u -> w or w -> v, or two comparable members of S are not joined.
    """
    b = _Bits(o)
    _require_acyclic(b)
    lab, succ, desc, anc = b.labels, b.succ, b.desc, b.anc

    for u in range(b.n):
        for v in _bits(succ[u]):
            between = desc[u] & anc[v]
            if not between:
                continue
            for w in _bits(between & ~succ[u]):
                return _witness(b, [u, w, v], (u, w))
            for w in _bits(between):
                if not (succ[w] >> v) & 1:
                    return _witness(b, [u, w, v], (w, v))
            for w1 in _bits(between):
                missing = desc[w1] & between & ~succ[w1]
                if missing:
                    w2 = (missing & -missing).bit_length() - 1
                    return _witness(b, [u, w1, w2, v], (w1, w2))
    return None


def _witness(b: _Bits, waypoints: list, pair: tuple) -> ShortcutWitness:
    # concatenated shortest paths in a DAG never revisit a vertex
    path = [waypoints[0]]
    for a, c in zip(waypoints, waypoints[1:]):
        path.extend(b.path(a, c)[1:])
    x, y = pair
    reason = "backward" if (b.adj[x] >> y) & 1 else "non-adjacent"
    lab = b.labels
    return ShortcutWitness(
        tuple(lab[p] for p in path), (lab[path[0]], lab[path[-1]]), (lab[x], lab[y]), reason,
    )


def is_semi_transitive(o: DirectedLike) -> bool:
    return is_acyclic(o) and find_shortcut_fast(o) is None
