"""Block decomposition of connected graphs by iterative low-link DFS.

The search explores from vertex 0 with neighbors in ascending index order, so
blocks and cut vertices come out deterministically.  Blocks are emitted with
vertices in stack pop order followed by the articulation parent; the search
uses an explicit stack and survives long paths that would overflow recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, induced_subgraph, is_connected, remove_vertices


@dataclass(frozen=True)
class DfsRecord:
    """Discovery number (>= 1), low-link value, and tree parent of one vertex."""

    dfs_number: int
    low: int
    parent: Optional[int]


@dataclass(frozen=True)
class Block:
    """One block: vertex indices into the parent graph plus its induced subgraph."""

    vertices: tuple[int, ...]
    graph: Graph

    @property
    def trivial(self) -> bool:
        return self.graph.order == 2

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def t(self) -> int:
        return sum(1 for b in self.blocks if b.trivial)

    def blocks_containing(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertex_set()]


def _dfs_engine(g: Graph, root: int) -> tuple[list[int], list[int], list[Optional[int]], list[list[int]], set[int]]:
    n = g.order
    dfs = [0] * n
    low = [0] * n
    parent: list[Optional[int]] = [None] * n
    ptr = [0] * n
    explored: set[tuple[int, int]] = set()
    stack = [root]
    blocks: list[list[int]] = []
    cuts: set[int] = set()

    def next_unexplored(v: int) -> Optional[int]:
        nbrs = g.neighbors[v]
        while ptr[v] < len(nbrs):
            w = nbrs[ptr[v]]
            if (min(v, w), max(v, w)) in explored:
                ptr[v] += 1
                continue
            return w
        return None

    dfs[root] = 1
    low[root] = 1
    counter = 1
    v = root
    while True:
        w = next_unexplored(v)
        if w is not None:
            explored.add((min(v, w), max(v, w)))
            if dfs[w] == 0:
                stack.append(w)
                parent[w] = v
                counter += 1
                dfs[w] = counter
                low[w] = counter
                v = w
            else:
                # edge to an already discovered vertex: an ancestor of v
                low[v] = min(low[v], dfs[w])
        else:
            p = parent[v]
            if p is None:
                break
            if low[v] >= dfs[p]:
                if p != root or next_unexplored(p) is not None:
                    cuts.add(p)
                popped = []
                while True:
                    u = stack.pop()
                    popped.append(u)
                    if u == v:
                        break
                popped.append(p)
                blocks.append(popped)
            else:
                low[p] = min(low[p], low[v])
            v = p
    return dfs, low, parent, blocks, cuts


def decompose(g: Graph) -> BlockDecomposition:
    """All blocks and cut vertices of a connected graph of order >= 2."""
    if g.order < 2:
        raise ValueError("block decomposition needs at least 2 vertices")
    if not is_connected(g):
        raise ValueError("block decomposition needs a connected graph")
    _, _, _, raw_blocks, cuts = _dfs_engine(g, root=0)
    blocks = tuple(Block(tuple(vs), induced_subgraph(g, vs)) for vs in raw_blocks)
    return BlockDecomposition(blocks, frozenset(cuts))


def dfs_records(g: Graph, root: int = 0) -> list[DfsRecord]:
    """Final DFS table (discovery numbers, low links, parents) from the root."""
    if g.order < 1:
        raise ValueError("empty graph has no DFS records")
    if not is_connected(g):
        raise ValueError("DFS table requires a connected graph")
    dfs, low, parent, _, _ = _dfs_engine(g, root)
    return [DfsRecord(dfs[v], low[v], parent[v]) for v in range(g.order)]


def is_cut_vertex_by_lowlink(records: Sequence[DfsRecord], v: int) -> bool:
    """Low-link cut-vertex criterion applied to a completed DFS table.

    The root is a cut vertex iff it has two or more tree children; any other
    vertex is one iff some tree child's low value reaches its own discovery
    number.
    """
    children = [w for w, rec in enumerate(records) if rec.parent == v]
    if records[v].dfs_number == 1:
        return len(children) >= 2
    return any(records[w].low >= records[v].dfs_number for w in children)


def naive_cut_vertices(g: Graph) -> frozenset[int]:
    """Definition-based oracle: v is a cut vertex iff g - v is disconnected."""
    if g.order < 3 or not is_connected(g):
        raise ValueError("cut-vertex oracle needs a connected graph of order >= 3")
    return frozenset(v for v in range(g.order) if not is_connected(remove_vertices(g, [v])))
