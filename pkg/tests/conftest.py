import random
from itertools import combinations, permutations

import pytest

from shiftrep.graph import LabeledGraph


def brute_force_cycles(g, max_len):
    """Lengths of all simple cycles up to max_len, by explicit enumeration."""
    adj = g.adjacency
    verts = list(g.vertices)
    lengths = set()
    for size in range(3, max_len + 1):
        for subset in combinations(verts, size):
            first, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                cyc = (first,) + perm
                if all(cyc[(i + 1) % size] in adj[cyc[i]] for i in range(size)):
                    lengths.add(size)
                    break
            if size in lengths:
                break
    return lengths


def random_graph(rng, n, p=0.5):
    verts = list(range(1, n + 1))
    return LabeledGraph(verts, [e for e in combinations(verts, 2) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
