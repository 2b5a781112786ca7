"""Immutable labeled simple graphs, file formats, and connectivity primitives.

Vertices are 0-based indices; labels are presentation-only and unique within
a graph.  All operations are pure and graphs may be shared freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class GraphFormatError(ValueError):
    """Malformed graph/coloring input.  Carries 1-based line and token column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc = f" ({loc})"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class GuardError(RuntimeError):
    """A size guard or solver limit was exceeded."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: unique text labels plus symmetric adjacency.

    ``neighbors[v]`` is the sorted tuple of vertices adjacent to v.  Derived
    bitmask adjacency is cached for fast set operations; it does not take
    part in equality.
    """

    labels: tuple[str, ...]
    neighbors: tuple[tuple[int, ...], ...]
    adj_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    label_index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.labels)
        if len(self.neighbors) != n:
            raise ValueError("labels and adjacency disagree on order")
        index: dict[str, int] = {}
        for i, lab in enumerate(self.labels):
            if not lab:
                raise ValueError(f"empty label at vertex {i}")
            if lab in index:
                raise ValueError(f"duplicate label {lab!r}")
            index[lab] = i
        masks = []
        for v, nbrs in enumerate(self.neighbors):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbor list of {self.labels[v]!r} must be sorted and duplicate-free")
            m = 0
            for w in nbrs:
                if w == v:
                    raise ValueError(f"self-loop at vertex {self.labels[v]!r}")
                if not 0 <= w < n:
                    raise ValueError(f"neighbor index {w} out of range")
                m |= 1 << w
            masks.append(m)
        for v in range(n):
            for w in self.neighbors[v]:
                if not (masks[w] >> v) & 1:
                    raise ValueError(
                        f"asymmetric adjacency between {self.labels[v]!r} and {self.labels[w]!r}"
                    )
        object.__setattr__(self, "adj_masks", tuple(masks))
        object.__setattr__(self, "label_index", index)

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> "Graph":
        n = len(labels)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex index {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(labels), tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def from_label_edges(cls, labels: Sequence[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        idx = {lab: i for i, lab in enumerate(labels)}
        return cls.from_edges(labels, [(idx[a], idx[b]) for a, b in edges])

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def size(self) -> int:
        return sum(len(nb) for nb in self.neighbors) // 2

    def index_of(self, label: str) -> int:
        return self.label_index[label]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj_masks[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in self.neighbors[u] if u < v]

    def full_mask(self) -> int:
        return (1 << self.order) - 1


def _reach_mask(g: Graph, start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from start inside the allowed set."""
    if not (allowed >> start) & 1:
        return 0
    seen = 1 << start
    frontier = [start]
    masks = g.adj_masks
    while frontier:
        nxt = 0
        for v in frontier:
            nxt |= masks[v]
        nxt &= allowed & ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = [v for v in range(g.order) if (nxt >> v) & 1]
    return seen


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0 (empty graph: True)."""
    if g.order == 0:
        return True
    return _reach_mask(g, 0, g.full_mask()) == g.full_mask()


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph induced by the given vertices, in the given order, labels kept."""
    if len(vertices) == 0:
        raise ValueError("induced subgraph of the empty vertex set")
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate vertices in selection")
    for v in vertices:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex index {v} not in graph")
    pos = {v: i for i, v in enumerate(vertices)}
    edges = [
        (pos[u], pos[v])
        for u in vertices
        for v in g.neighbors[u]
        if v in pos and pos[u] < pos[v]
    ]
    return Graph.from_edges([g.labels[v] for v in vertices], edges)


def remove_vertices(g: Graph, drop: Iterable[int]) -> Graph:
    """Induced subgraph on the complement of ``drop`` (index order preserved)."""
    dropped = set(drop)
    keep = [v for v in range(g.order) if v not in dropped]
    if not keep:
        raise ValueError("cannot remove every vertex")
    return induced_subgraph(g, keep)


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"no edge between {g.labels[u]!r} and {g.labels[v]!r}")
    return Graph.from_edges(g.labels, [e for e in g.edges() if e != (min(u, v), max(u, v))])


def separates(g: Graph, cut: Iterable[int], x: int, y: int) -> bool:
    """True iff x and y lie in different components of g minus the cut set."""
    cut_mask = 0
    for v in cut:
        cut_mask |= 1 << v
    if x == y:
        raise ValueError("separation of a vertex from itself is undefined")
    if (cut_mask >> x) & 1 or (cut_mask >> y) & 1:
        raise ValueError("cut set must avoid the pair")
    allowed = g.full_mask() & ~cut_mask
    return not (_reach_mask(g, x, allowed) >> y) & 1


def is_k_connected(g: Graph, k: int) -> bool:
    """Exhaustive-separator k-connectivity test (meant for desk-scale graphs).

    True iff the order exceeds k and no vertex set of fewer than k vertices
    disconnects the graph; complete graphs come out (n-1)-connected.
    """
    if k < 1:
        raise ValueError("k must be positive")
    n = g.order
    if n <= k:
        return False
    if not is_connected(g):
        return False
    for size in range(1, k):
        for subset in itertools.combinations(range(n), size):
            if not is_connected(remove_vertices(g, subset)):
                return False
    return True


def is_tree(g: Graph) -> bool:
    return g.order >= 1 and g.size == g.order - 1 and is_connected(g)


def is_complete(g: Graph) -> bool:
    n = g.order
    return g.size == n * (n - 1) // 2


def cycle_order(g: Graph) -> Optional[list[int]]:
    """Vertices of g in cyclic order if g is a cycle of order >= 3, else None."""
    n = g.order
    if n < 3 or g.size != n or any(g.degree(v) != 2 for v in range(n)):
        return None
    if not is_connected(g):
        return None
    walk = [0, g.neighbors[0][0]]
    while len(walk) < n:
        a, b = g.neighbors[walk[-1]]
        walk.append(a if a != walk[-2] else b)
    return walk


# ---------------------------------------------------------------------------
# File formats


def _split_tokens(line: str) -> list[str]:
    return [tok.strip() for tok in line.split(",")]


def parse_matrix(text: str) -> tuple[Graph, Optional[dict[int, int]]]:
    """Parse the adjacency-matrix format.

    Line 1 holds comma-separated labels, each optionally ``label:color`` with a
    positive integer color.  Lines 2..n+1 hold comma-separated 0/1 entries of a
    symmetric, zero-diagonal n x n matrix.  Returns the graph plus the coloring
    when every label carries one.
    """
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or not lines[0].strip():
        if any(ln.strip() for ln in lines):
            raise GraphFormatError("missing label line", line=1)
        return Graph((), ()), None

    labels: list[str] = []
    colors: list[Optional[int]] = []
    for col, tok in enumerate(_split_tokens(lines[0]), start=1):
        if not tok:
            raise GraphFormatError("empty label token", line=1, column=col)
        if ":" in tok:
            name, _, raw = tok.partition(":")
            name = name.strip()
            raw = raw.strip()
            if not name:
                raise GraphFormatError("empty label before ':'", line=1, column=col)
            try:
                color = int(raw)
            except ValueError:
                raise GraphFormatError(f"bad color {raw!r}", line=1, column=col) from None
            if color < 1:
                raise GraphFormatError(f"color must be positive, got {color}", line=1, column=col)
            labels.append(name)
            colors.append(color)
        else:
            labels.append(tok)
            colors.append(None)
    n = len(labels)
    seen: dict[str, int] = {}
    for col, lab in enumerate(labels, start=1):
        if lab in seen:
            raise GraphFormatError(f"duplicate label {lab!r}", line=1, column=col)
        seen[lab] = col

    if len(lines) - 1 != n:
        raise GraphFormatError(f"expected {n} matrix rows, found {len(lines) - 1}", line=len(lines))
    rows: list[list[int]] = []
    for i, raw in enumerate(lines[1:], start=2):
        row: list[int] = []
        toks = _split_tokens(raw)
        if len(toks) != n:
            raise GraphFormatError(f"expected {n} entries, found {len(toks)}", line=i)
        for col, tok in enumerate(toks, start=1):
            if tok not in ("0", "1"):
                raise GraphFormatError(f"matrix entry must be 0 or 1, got {tok!r}", line=i, column=col)
            row.append(int(tok))
        rows.append(row)
    for i in range(n):
        if rows[i][i] != 0:
            raise GraphFormatError("nonzero diagonal entry", line=2 + i, column=i + 1)
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise GraphFormatError(
                    f"asymmetric entries for {labels[i]!r},{labels[j]!r}", line=2 + j, column=i + 1
                )
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rows[i][j]]
    g = Graph.from_edges(labels, edges)
    if all(c is not None for c in colors) and n > 0:
        return g, {v: colors[v] for v in range(n)}  # type: ignore[misc]
    return g, None


def format_matrix(g: Graph, coloring: Optional[dict[int, int]] = None) -> str:
    """Serialize to the adjacency-matrix format (inverse of parse_matrix)."""
    if coloring is not None:
        head = ", ".join(f"{g.labels[v]}:{coloring[v]}" for v in range(g.order))
    else:
        head = ", ".join(g.labels)
    out = [head]
    for u in range(g.order):
        out.append(", ".join("1" if g.has_edge(u, v) else "0" for v in range(g.order)))
    return "\n".join(out) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: ``n <count>``, then ``labelU labelV`` lines.

    Isolated vertices are declared with ``v <label>`` lines.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty edge-list file", line=1)
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise GraphFormatError("first line must be 'n <count>'", line=1)
    try:
        n = int(head[1])
    except ValueError:
        raise GraphFormatError(f"bad vertex count {head[1]!r}", line=1) from None
    labels: list[str] = []
    index: dict[str, int] = {}

    def intern(lab: str, lineno: int) -> int:
        if lab not in index:
            index[lab] = len(labels)
            labels.append(lab)
        return index[lab]

    edges: list[tuple[int, int]] = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if parts[0] == "v" and len(parts) == 2:
            intern(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise GraphFormatError("expected 'labelU labelV' or 'v <label>'", line=lineno)
        u = intern(parts[0], lineno)
        v = intern(parts[1], lineno)
        if u == v:
            raise GraphFormatError("self-loop", line=lineno)
        edges.append((u, v))
    if len(labels) != n:
        raise GraphFormatError(f"declared {n} vertices, found {len(labels)}", line=1)
    return Graph.from_edges(labels, set((min(u, v), max(u, v)) for u, v in edges))


def format_edge_list(g: Graph) -> str:
    out = [f"n {g.order}"]
    covered = set()
    for u, v in g.edges():
        out.append(f"{g.labels[u]} {g.labels[v]}")
        covered.add(u)
        covered.add(v)
    for v in range(g.order):
        if v not in covered:
            out.append(f"v {g.labels[v]}")
    return "\n".join(out) + "\n"


def parse_coloring(text: str, g: Graph) -> dict[int, int]:
    """Parse ``label:color`` tokens (one per line or comma-separated)."""
    coloring: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        for col, tok in enumerate(_split_tokens(raw), start=1):
            if not tok:
                continue
            name, sep, value = tok.partition(":")
            if not sep:
                raise GraphFormatError(f"expected label:color, got {tok!r}", line=lineno, column=col)
            name = name.strip()
            if name not in g.label_index:
                raise GraphFormatError(f"unknown label {name!r}", line=lineno, column=col)
            try:
                color = int(value.strip())
            except ValueError:
                raise GraphFormatError(f"bad color {value.strip()!r}", line=lineno, column=col) from None
            if color < 1:
                raise GraphFormatError(f"color must be positive, got {color}", line=lineno, column=col)
            v = g.index_of(name)
            if v in coloring:
                raise GraphFormatError(f"label {name!r} colored twice", line=lineno, column=col)
            coloring[v] = color
    return coloring


def load_graph(path: str) -> tuple[Graph, Optional[dict[int, int]]]:
    """Read a graph file, sniffing matrix vs edge-list format."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    first = text.lstrip().split("\n", 1)[0]
    if first.startswith("n ") or first.startswith("n\t"):
        return parse_edge_list(text), None
    return parse_matrix(text)


def simplify(multi_adjacency: Sequence[Sequence[int]], labels: Optional[Sequence[str]] = None) -> Graph:
    """Underlying simple graph of a loop-free multigraph given as multiplicities."""
    n = len(multi_adjacency)
    for i, row in enumerate(multi_adjacency):
        if len(row) != n:
            raise ValueError("multiplicity matrix must be square")
        if row[i] != 0:
            raise ValueError(f"nonzero diagonal at index {i}")
        for j in range(n):
            if row[j] < 0:
                raise ValueError("multiplicities must be nonnegative")
            if multi_adjacency[j][i] != row[j]:
                raise ValueError("multiplicity matrix must be symmetric")
    if labels is None:
        labels = default_labels(n)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if multi_adjacency[i][j] >= 1]
    return Graph.from_edges(labels, edges)


# ---------------------------------------------------------------------------
# DOT export

_PALETTE = (
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4",
    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080", "#e6beff",
)


def to_dot(g: Graph, coloring: Optional[dict[int, int]] = None) -> str:
    """Graphviz text; colored vertices are filled from a fixed palette."""
    out = ["graph G {"]
    for v in range(g.order):
        lab = g.labels[v]
        if coloring is not None:
            fill = _PALETTE[(coloring[v] - 1) % len(_PALETTE)]
            out.append(f'  "{lab}" [label="{lab}", style=filled, fillcolor="{fill}", colorid={coloring[v]}];')
        else:
            out.append(f'  "{lab}" [label="{lab}"];')
    for u, v in g.edges():
        out.append(f'  "{g.labels[u]}" -- "{g.labels[v]}";')
    out.append("}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Small families used throughout

_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def default_labels(n: int) -> list[str]:
    if n <= len(_ALPHABET):
        return list(_ALPHABET[:n])
    return [f"v{i + 1}" for i in range(n)]


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(default_labels(n), [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("paths need at least 1 vertex")
    return Graph.from_edges(default_labels(n), [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(default_labels(n), itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(default_labels(leaves + 1), [(0, i) for i in range(1, leaves + 1)])
