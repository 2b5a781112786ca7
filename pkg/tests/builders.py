"""Seeded random constructions shared across the test suite."""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from mvdcolor.graph import Graph, default_labels, is_connected


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    labels = default_labels(n)
    pairs = list(itertools.combinations(range(n), 2))
    while True:
        p = rng.choice((0.25, 0.35, 0.5))
        edges = [e for e in pairs if rng.random() < p]
        g = Graph.from_edges(labels, edges)
        if is_connected(g) and g.order >= 2:
            return g


def random_tree(rng: random.Random, n: int) -> Graph:
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    return Graph.from_edges(default_labels(n), edges)


def attach_blocks(rng: random.Random, block_templates: Sequence[Graph], count: int) -> Graph:
    """Glue blocks into a random tree-of-blocks, identifying one vertex each time.

    Every template's vertex 0 is merged with a random existing vertex; the
    result's blocks are exactly the chosen templates.
    """
    chosen = [rng.choice(block_templates) for _ in range(count)]
    edges: list[tuple[int, int]] = []
    total = 1
    for tpl in chosen:
        anchor = rng.randrange(total)
        remap = {0: anchor}
        for v in range(1, tpl.order):
            remap[v] = total
            total += 1
        for u, v in tpl.edges():
            edges.append((remap[u], remap[v]))
    return Graph.from_edges(default_labels(total), edges)


def random_cactus(rng: random.Random, blocks: int, even_only: bool = True) -> Graph:
    """Cactus built from bridges and cycle blocks."""
    from mvdcolor.graph import cycle_graph

    cycle_sizes = (4, 6, 8) if even_only else (3, 4, 5, 6, 7)
    bridge = Graph.from_edges(["a", "b"], [(0, 1)])
    templates = [bridge] + [cycle_graph(k) for k in cycle_sizes]
    return attach_blocks(rng, templates, blocks)


def with_pendants(core: Graph, pendants: int) -> Graph:
    """Core plus pendant vertices hung off core vertices round-robin."""
    n = core.order
    labels = default_labels(n + pendants)
    edges = list(core.edges())
    for i in range(pendants):
        edges.append((i % n, n + i))
    return Graph.from_edges(labels, edges)
