"""Shift graphs, semi-transitive orientations and word-representability."""

from .codecs import dot_encode, graph6_decode, graph6_encode
from .decide import Decision, decide_word_representable, orientation_from_ordering
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
from .graph import Digraph, LabeledGraph, chromatic_number, induced_subgraph, is_triangle_free, odd_girth
from .orientation import (
    Orientation,
    ShortcutWitness,
    find_shortcut_fast,
    find_shortcut_naive,
    is_acyclic,
    is_semi_transitive,
    orient_m_shift,
    reverse_orientation,
)
from .words import alternates, find_uniform_word, graph_of_word, represents

__version__ = "0.1.0"
