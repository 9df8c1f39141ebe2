"""graph6, DOT and JSON serialisation.

Only the small graph6 format (n < 63) is supported.  graph6 always uses the
graph's canonical vertex order; structured labels travel separately in a JSON
sidecar (an array whose i-th entry is the label of vertex i+1).
"""

from __future__ import annotations

import json
from typing import Iterable, Union

from .graph import Digraph, Label, LabeledGraph

GRAPH6_HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


def graph6_encode(g: LabeledGraph) -> bytes:
    n = g.order
    if n >= 63:
        raise ValueError(f"graph6 small format supports n < 63, got n = {n}")
    masks = g.adjacency_masks
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append((masks[i] >> j) & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = bytearray([63 + n])
    for p in range(0, len(bits), 6):
        group = 0
        for b in bits[p:p + 6]:
            group = (group << 1) | b
        out.append(63 + group)
    return bytes(out)


def graph6_decode(data: Union[bytes, str]) -> LabeledGraph:
    """Decode one small-format graph6 record; vertices become 1..n."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    start = 0
    if data.startswith(GRAPH6_HEADER):
        start = len(GRAPH6_HEADER)
    if len(data) <= start:
        raise Graph6Error("empty graph6 record", start)
    n = data[start] - 63
    if not 0 <= n <= 62:
        raise Graph6Error(f"byte {data[start]} is not a small-format vertex count", start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[start + 1:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} adjacency bytes for n = {n}, found {len(body)}",
            start + 1 + min(len(body), need),
        )
    bits = []
    for off, byte in enumerate(body):
        val = byte - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"byte {byte} out of graph6 range 63..126", start + 1 + off)
        bits.extend((val >> s) & 1 for s in range(5, -1, -1))
    edges = []
    p = 0
    for j in range(1, n):
        for i in range(j):
            if bits[p]:
                edges.append((i + 1, j + 1))
            p += 1
    return LabeledGraph(range(1, n + 1), edges)


def relabel(g: LabeledGraph, labels: Iterable[Label]) -> LabeledGraph:
    """Map index labels 1..n of a decoded graph onto ``labels`` (sidecar order)."""
    labels = list(labels)
    if len(labels) != g.order:
        raise ValueError(f"sidecar has {len(labels)} labels for {g.order} vertices")
    old = list(g.vertices)
    mapping = dict(zip(old, labels))
    h = LabeledGraph(labels, ((mapping[u], mapping[v]) for u, v in g.edges))
    if list(h.vertices) != labels:
        raise ValueError("sidecar labels are not in canonical order")
    return h


# --- labels as text / JSON -------------------------------------------------

def label_text(label: Label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(label_text(x) for x in label) + ")"
    return str(label)


def label_to_json(label: Label):
    if isinstance(label, tuple):
        return [label_to_json(x) for x in label]
    return label


def label_from_json(obj) -> Label:
    if isinstance(obj, list):
        return tuple(label_from_json(x) for x in obj)
    return obj


def sidecar_json(g: LabeledGraph) -> str:
    return json.dumps([label_to_json(v) for v in g.vertices])


def sidecar_labels(text: str) -> list:
    return [label_from_json(x) for x in json.loads(text)]


def arcs_json(arcs: Iterable[tuple]) -> dict:
    return {"arcs": [[label_to_json(u), label_to_json(v)] for u, v in arcs]}


def arcs_from_json(obj: dict) -> list:
    return [(label_from_json(u), label_from_json(v)) for u, v in obj["arcs"]]


# --- DOT --------------------------------------------------------------------

def _dot_id(label: Label) -> str:
    return json.dumps(label_text(label))


def dot_encode(g: Union[LabeledGraph, Digraph], name: str = "G") -> str:
    if isinstance(g, Digraph):
        head, conn, links = "digraph", "->", g.sorted_arcs()
    else:
        head, conn, links = "graph", "--", g.sorted_edges()
    lines = [f"{head} {name} {{"]
    lines.extend(f"  {_dot_id(v)};" for v in g.vertices)
    lines.extend(f"  {_dot_id(u)} {conn} {_dot_id(v)};" for u, v in links)
    lines.append("}")
    return "\n".join(lines) + "\n"
