"""Generators for shift graphs, m-shift graphs, simplified de Bruijn graphs,
complete graphs, transitive tournaments, line graphs and line digraphs."""

from __future__ import annotations

from itertools import combinations, product

from .graph import Digraph, LabeledGraph


def _check_shift_params(n: int, k: int, m: int = 1) -> None:
    if not (isinstance(n, int) and isinstance(k, int) and n > k >= 2):
        raise ValueError(f"shift graph parameters must satisfy n > k >= 2 (got n={n}, k={k})")
    if not (isinstance(m, int) and 1 <= m < k):
        raise ValueError(f"shift amount must satisfy 1 <= m < k (got m={m}, k={k})")


def increasing_tuples(n: int, k: int) -> list:
    return list(combinations(range(1, n + 1), k))


def shifted_by(u: tuple, v: tuple, m: int) -> bool:
    """True when ``v`` starts with the last ``len(u) - m`` entries of ``u``."""
    return u[m:] == v[:len(u) - m]


def complete_graph(n: int) -> LabeledGraph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return LabeledGraph(range(1, n + 1), combinations(range(1, n + 1), 2))


def transitive_tournament(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"transitive tournament needs n >= 1, got {n}")
    return Digraph(range(1, n + 1), combinations(range(1, n + 1), 2))


def m_shift_graph(n: int, k: int, m: int) -> LabeledGraph:
    _check_shift_params(n, k, m)
    verts = increasing_tuples(n, k)
    edges = [
        (u, v)
        for u, v in combinations(verts, 2)
        if shifted_by(u, v, m) or shifted_by(v, u, m)
    ]
    return LabeledGraph(verts, edges)


def shift_graph(n: int, k: int) -> LabeledGraph:
    _check_shift_params(n, k)
    return m_shift_graph(n, k, 1)


def word_label(symbols, n: int) -> str:
    """String label of a de Bruijn vertex; comma-separated once n > 9."""
    sep = "," if n > 9 else ""
    return sep.join(str(s) for s in symbols)


def parse_word_label(label: str) -> tuple:
    if "," in label:
        return tuple(int(s) for s in label.split(","))
    return tuple(int(c) for c in label)


def _check_de_bruijn_params(n: int, k: int) -> None:
    if n < 2 or k < 2:
        raise ValueError(f"de Bruijn parameters must satisfy n >= 2 and k >= 2 (got n={n}, k={k})")


def _de_bruijn_on(words: list, n: int) -> LabeledGraph:
    by_prefix: dict = {}
    for w in words:
        by_prefix.setdefault(w[:-1], []).append(w)
    edges = set()
    for u in words:
        for v in by_prefix.get(u[1:], ()):
            if u != v:
                edges.add((u, v) if u < v else (v, u))
    return LabeledGraph(
        (word_label(w, n) for w in words),
        ((word_label(u, n), word_label(v, n)) for u, v in edges),
    )


def simplified_de_bruijn(n: int, k: int) -> LabeledGraph:
    """S(n, k): overlap graph on all length-k words, loops and multi-edges dropped."""
    _check_de_bruijn_params(n, k)
    return _de_bruijn_on(list(product(range(1, n + 1), repeat=k)), n)


def spread_de_bruijn(n: int, k: int, m: int) -> LabeledGraph:
    """S_m(n, k): S(n, k) induced on words whose symbols pairwise differ by >= m."""
    _check_de_bruijn_params(n, k)
    if m < 1:
        raise ValueError(f"spread must satisfy m >= 1, got {m}")
    words = [
        w for w in product(range(1, n + 1), repeat=k)
        if all(abs(a - b) >= m for a, b in combinations(w, 2))
    ]
    return _de_bruijn_on(words, n)


def line_graph(g: LabeledGraph) -> LabeledGraph:
    verts = g.sorted_edges()
    at = {v: [] for v in g.vertices}
    for e in verts:
        at[e[0]].append(e)
        at[e[1]].append(e)
    edges = set()
    for incident in at.values():
        edges.update(combinations(incident, 2))
    return LabeledGraph(verts, edges)


def line_digraph(d: Digraph) -> Digraph:
    arcs = d.sorted_arcs()
    leaving = {v: [] for v in d.vertices}
    for a in arcs:
        leaving[a[0]].append(a)
    return Digraph(arcs, ((a, b) for a in arcs for b in leaving[a[1]]))


def underlying_graph(d: Digraph) -> LabeledGraph:
    return LabeledGraph(d.vertices, d.arcs)
