"""Alternation in words and search for uniform representing words."""

from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

from .graph import Label, LabeledGraph

DEFAULT_BUDGET = 10**8


class BudgetExhausted(RuntimeError):
    """The word search hit its prefix budget before deciding."""

    def __init__(self, budget: int):
        super().__init__(f"word search budget of {budget} prefixes exhausted")
        self.budget = budget


def alphabet(w: Sequence[Label]) -> set:
    return set(w)


def alternates(w: Sequence[Label], x: Label, y: Label) -> bool:
    if x == y:
        raise ValueError("alternation needs two distinct letters")
    present = set(w)
    for letter in (x, y):
        if letter not in present:
            raise KeyError(f"letter {letter!r} does not occur in the word")
    last = None
    for c in w:
        if c == x or c == y:
            if c == last:
                return False
            last = c
    return True


def graph_of_word(w: Sequence[Label]) -> LabeledGraph:
    letters = sorted(set(w))
    # a pair stops alternating the moment one letter repeats without the other in between
    last_seen = {}
    broken = set()
    for pos, c in enumerate(w):
        if c in last_seen:
            prev = last_seen[c]
            for d in letters:
                if d != c and last_seen.get(d, -1) < prev:
                    broken.add((c, d) if c < d else (d, c))
        last_seen[c] = pos
    return LabeledGraph(letters, (p for p in combinations(letters, 2) if p not in broken))


def represents(w: Sequence[Label], g: LabeledGraph) -> bool:
    if set(w) != set(g.vertices):
        return False
    return graph_of_word(w) == g


def find_uniform_word(g: LabeledGraph, k: int, budget: int = DEFAULT_BUDGET) -> Optional[tuple]:
    """First k-uniform word (lexicographic in vertex order) representing ``g``.

    Returns ``None`` when no k-uniform word exists and raises BudgetExhausted
    once more than ``budget`` prefixes have been extended.
    """
    n = g.order
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    if k < 1:
        raise ValueError(f"uniformity must be >= 1, got {k}")
    adj = g.adjacency_masks
    full = (1 << n) - 1
    remaining = [k] * n
    last_pos = [-1] * n
    broken = [0] * n
    word: list = []
    nodes = 0

    def can_still_break(x: int, y: int) -> bool:
        # pair (x, y) alternates so far; can a repeated letter still appear?
        px, py = last_pos[x], last_pos[y]
        rx, ry = remaining[x], remaining[y]
        if px < 0 and py < 0:
            return k >= 2
        if px > py:
            return rx >= 1 or ry >= 2
        return ry >= 1 or rx >= 2

    def place(x: int) -> Optional[list]:
        """Place letter x; return the undo record, or None when the prefix fails."""
        newly = 0
        prev = last_pos[x]
        if prev >= 0:
            for y in range(n):
                if y != x and last_pos[y] < prev and not (broken[x] >> y) & 1:
                    newly |= 1 << y
        if newly & adj[x]:
            return None
        record = (x, prev, newly)
        broken[x] |= newly
        for y in range(n):
            if (newly >> y) & 1:
                broken[y] |= 1 << x
        last_pos[x] = len(word)
        remaining[x] -= 1
        word.append(x)
        need_break = full & ~adj[x] & ~broken[x] & ~(1 << x)
        for y in range(n):
            if (need_break >> y) & 1 and not can_still_break(x, y):
                undo(record)
                return None
        return record

    def undo(record) -> None:
        x, prev, newly = record
        word.pop()
        remaining[x] += 1
        last_pos[x] = prev
        broken[x] &= ~newly
        for y in range(n):
            if (newly >> y) & 1:
                broken[y] &= ~(1 << x)

    def search() -> bool:
        nonlocal nodes
        if len(word) == n * k:
            return True
        for x in range(n):
            if not remaining[x]:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(budget)
            record = place(x)
            if record is None:
                continue
            if search():
                return True
            undo(record)
        return False

    if not search():
        return None
    labels = g.vertices
    return tuple(labels[i] for i in word)


def parse_word(text: str) -> list:
    """Split a comma-separated word, keeping parenthesised tuple labels intact."""
    tokens, depth, cur = [], 0, []
    for ch in text.strip():
        if ch == "," and depth == 0:
            tokens.append("".join(cur).strip())
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    if cur:
        tokens.append("".join(cur).strip())
    return [t for t in tokens if t]
