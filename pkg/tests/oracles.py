"""Independent brute-force oracles the test suite checks the library against.

Everything here goes through definitions directly (subset enumeration,
permutation search, full partition enumeration) and stays independent of the
implementation paths it validates.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from mvdcolor.graph import Graph, default_labels


def components(g: Graph, removed: set[int]) -> list[set[int]]:
    """Connected components of g minus a vertex set, by plain flood fill."""
    remaining = [v for v in range(g.order) if v not in removed]
    seen: set[int] = set()
    out = []
    for start in remaining:
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        while frontier:
            v = frontier.pop()
            for w in g.neighbors[v]:
                if w not in removed and w not in comp:
                    comp.add(w)
                    frontier.append(w)
        seen |= comp
        out.append(comp)
    return out


def oracle_separates(g: Graph, cut: set[int], x: int, y: int) -> bool:
    for comp in components(g, cut):
        if x in comp:
            return y not in comp
    return False


def oracle_monochromatic_cut_colors(g: Graph, coloring: dict[int, int], x: int, y: int) -> set[int]:
    """Colors of every monochromatic vertex cut separating x and y.

    Enumerates all nonempty subsets of V minus the pair, keeping those that
    are single-colored and separate the pair.
    """
    rest = [v for v in range(g.order) if v not in (x, y)]
    found: set[int] = set()
    for size in range(1, len(rest) + 1):
        for subset in itertools.combinations(rest, size):
            colors = {coloring[v] for v in subset}
            if len(colors) != 1:
                continue
            if oracle_separates(g, set(subset), x, y):
                found |= colors
    return found


def oracle_is_mvd(g: Graph, coloring: dict[int, int]) -> bool:
    for x in range(g.order):
        for y in range(x + 1, g.order):
            if g.has_edge(x, y):
                continue
            if not oracle_monochromatic_cut_colors(g, coloring, x, y):
                return False
    return True


def all_set_partitions(n: int) -> Iterator[list[list[int]]]:
    """Every partition of {0..n-1}, built by placing each element in turn."""
    def extend(i: int, parts: list[list[int]]) -> Iterator[list[list[int]]]:
        if i == n:
            yield [list(p) for p in parts]
            return
        for p in parts:
            p.append(i)
            yield from extend(i + 1, parts)
            p.pop()
        parts.append([i])
        yield from extend(i + 1, parts)
        parts.pop()

    yield from extend(0, [])


def oracle_mvd(g: Graph) -> int:
    """Maximum class count over all partitions passing the subset oracle."""
    best = 0
    for parts in all_set_partitions(g.order):
        if len(parts) <= best:
            continue
        coloring = {v: i + 1 for i, part in enumerate(parts) for v in part}
        if oracle_is_mvd(g, coloring):
            best = len(parts)
    return best


def brute_force_isomorphism(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    if g.order != h.order:
        return None
    n = g.order
    for perm in itertools.permutations(range(n)):
        if all(g.has_edge(u, v) == h.has_edge(perm[u], perm[v])
               for u in range(n) for v in range(u + 1, n)):
            return {v: perm[v] for v in range(n)}
    return None


def graphs_of_order(n: int) -> Iterator[Graph]:
    """All labeled graphs on n vertices, one per edge subset."""
    pairs = list(itertools.combinations(range(n), 2))
    labels = default_labels(n)
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(labels, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])
