import random
from itertools import combinations, permutations, product

import pytest

from conftest import random_graph
from shiftrep.decide import orientation_from_ordering
from shiftrep.families import complete_graph, m_shift_graph, transitive_tournament
from shiftrep.graph import Digraph, LabeledGraph
from shiftrep.orientation import (
    Orientation,
    find_shortcut_fast,
    find_shortcut_naive,
    is_acyclic,
    is_semi_transitive,
    orient_m_shift,
    reverse_orientation,
)

SHORTCUT = Orientation(
    LabeledGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")]),
    [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")],
)
CYCLE3 = Digraph([1, 2, 3], [(1, 2), (2, 3), (3, 1)])


def tournament_orientation(n):
    return Orientation(complete_graph(n), transitive_tournament(n).arcs)


class TestOrientationType:
    def test_missing_direction(self):
        with pytest.raises(ValueError, match="no direction"):
            Orientation(complete_graph(3), [(1, 2), (2, 3)])

    def test_both_directions(self):
        with pytest.raises(ValueError, match="both ways"):
            Orientation(complete_graph(2), [(1, 2), (2, 1)])

    def test_non_edge(self):
        with pytest.raises(ValueError, match="not an edge"):
            Orientation(LabeledGraph([1, 2, 3], [(1, 2)]), [(1, 2), (1, 3)])


class TestOrientMShift:
    def test_3_2_1(self):
        assert orient_m_shift(3, 2, 1).arcs == {((1, 2), (2, 3))}

    def test_4_2_1(self):
        o = orient_m_shift(4, 2, 1)
        assert o.arcs == {((1, 2), (2, 3)), ((1, 2), (2, 4)), ((1, 3), (3, 4)), ((2, 3), (3, 4))}
        assert is_semi_transitive(o)

    def test_5_3_2(self):
        assert orient_m_shift(5, 3, 2).arcs == {((1, 2, 3), (3, 4, 5))}

    def test_bad_params(self):
        with pytest.raises(ValueError):
            orient_m_shift(3, 3, 1)

    @pytest.mark.parametrize("n,k,m", [(n, k, m) for n in range(3, 10) for k in range(2, n) for m in range(1, k)])
    def test_semi_transitive_and_lex_upward(self, n, k, m):
        o = orient_m_shift(n, k, m)
        assert all(u < v for u, v in o.arcs)
        assert o == orientation_from_ordering(o.base, o.base.vertices)
        assert is_semi_transitive(o)
        assert is_semi_transitive(reverse_orientation(o))

    @pytest.mark.parametrize("n,k,m", [(5, 2, 1), (5, 3, 1), (5, 3, 2), (5, 4, 1), (5, 4, 3), (6, 5, 2)])
    def test_naive_agrees_on_paper_orientation(self, n, k, m):
        assert find_shortcut_naive(orient_m_shift(n, k, m)) is None


class TestAcyclic:
    def test_single_arc(self):
        assert is_acyclic(Digraph([1, 2], [(1, 2)]))

    def test_three_cycle(self):
        assert not is_acyclic(CYCLE3)

    def test_paper_6_2(self):
        assert is_acyclic(orient_m_shift(6, 2, 1))


class TestShortcutCheckers:
    def test_naive_textbook_shortcut(self):
        w = find_shortcut_naive(SHORTCUT)
        assert w.path == ("a", "b", "c", "d")
        assert w.chord == ("a", "d")
        assert w.violation == ("a", "c")
        assert w.reason == "non-adjacent"

    def test_fast_textbook_shortcut(self):
        w = find_shortcut_fast(SHORTCUT)
        assert w.violation == ("a", "c")
        assert w.chord == ("a", "d")
        assert w.path[0] == "a" and w.path[-1] == "d"

    def test_witness_is_a_real_path(self):
        w = find_shortcut_fast(SHORTCUT)
        assert all(step in SHORTCUT.arcs for step in zip(w.path, w.path[1:]))
        assert w.chord in SHORTCUT.arcs
        assert set(w.violation) <= set(w.path)

    def test_tournament_clean(self):
        assert find_shortcut_naive(tournament_orientation(4)) is None
        assert find_shortcut_fast(tournament_orientation(6)) is None

    def test_naive_size_cap(self):
        with pytest.raises(ValueError, match="12"):
            find_shortcut_naive(tournament_orientation(13))

    def test_cyclic_input_rejected(self):
        with pytest.raises(ValueError, match="cycle"):
            find_shortcut_fast(CYCLE3)
        with pytest.raises(ValueError, match="cycle"):
            find_shortcut_naive(CYCLE3)

    def test_naive_path_5_2_1(self):
        assert find_shortcut_naive(orient_m_shift(5, 2, 1)) is None

    def test_agreement_on_random_eight_vertex(self):
        rng = random.Random(7)
        hits = 0
        for _ in range(300):
            g = random_graph(rng, 8)
            order = list(g.vertices)
            rng.shuffle(order)
            o = orientation_from_ordering(g, order)
            naive, fast = find_shortcut_naive(o), find_shortcut_fast(o)
            assert (naive is None) == (fast is None)
            if fast is not None:
                hits += 1
                assert all(step in o.arcs for step in zip(fast.path, fast.path[1:]))
                assert fast.chord in o.arcs
        assert 0 < hits < 300

    def test_agreement_on_all_four_vertex_orientations(self):
        verts = [1, 2, 3, 4]
        pairs = list(combinations(verts, 2))
        for mask in range(1 << len(pairs)):
            g = LabeledGraph(verts, [p for i, p in enumerate(pairs) if mask >> i & 1])
            edges = g.sorted_edges()
            for flips in product((0, 1), repeat=len(edges)):
                o = Orientation(g, [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)])
                if is_acyclic(o):
                    assert (find_shortcut_naive(o) is None) == (find_shortcut_fast(o) is None)


class TestSemiTransitive:
    def test_cycle(self):
        assert not is_semi_transitive(CYCLE3)

    def test_shortcut(self):
        assert not is_semi_transitive(SHORTCUT)

    def test_complete_graph_iff_transitive(self):
        g = complete_graph(4)
        for perm in permutations(g.vertices):
            assert is_semi_transitive(orientation_from_ordering(g, perm))
        edges = g.sorted_edges()
        for flips in product((0, 1), repeat=len(edges)):
            o = Orientation(g, [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)])
            # acyclic orientations of K_n are exactly the transitive tournaments
            assert is_semi_transitive(o) == is_acyclic(o)


class TestReverse:
    def test_involution(self):
        o = orient_m_shift(6, 3, 1)
        assert reverse_orientation(reverse_orientation(o)) == o

    def test_tournament(self):
        assert is_semi_transitive(reverse_orientation(tournament_orientation(5)))

    def test_reversed_shortcut(self):
        r = reverse_orientation(SHORTCUT)
        w = find_shortcut_naive(r)
        assert w.path == ("d", "c", "b", "a")
        assert w.chord == ("d", "a")
        assert w.violation == ("d", "b")
        assert find_shortcut_fast(r).violation == ("d", "b")

    def test_reverse_preserves_verdict(self, rng):
        for _ in range(200):
            g = random_graph(rng, 7)
            order = list(g.vertices)
            rng.shuffle(order)
            o = orientation_from_ordering(g, order)
            assert is_semi_transitive(o) == is_semi_transitive(reverse_orientation(o))
