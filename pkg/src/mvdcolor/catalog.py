"""The type set: generalized theta graphs, census of minimal blocks, storage.

Minimal blocks (minimally 2-connected graphs) of order 3..10 are generated
by seeding with cycles and closing under ear additions that carry at least
one internal vertex, filtering for minimality at every order and
deduplicating by canonical form.  Every minimal block that is not a cycle
admits an ear decomposition whose ears all keep a degree-2 vertex, so
single-ear extensions of smaller minimal blocks reach the whole class.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence, Union

from .graph import (
    Graph,
    default_labels,
    format_matrix,
    is_k_connected,
    parse_matrix,
    remove_edge,
)
from .iso import canonical_form
from .verify import color_count, is_mvd_coloring

GENERATION_MIN_ORDER = 3
GENERATION_MAX_ORDER = 10


class CatalogError(ValueError):
    """Corrupt or inconsistent catalog content."""


ThetaSpec = Union[str, Sequence[int]]


def parse_theta_spec(text: str) -> tuple[int, ...]:
    """Expand a path-length list such as ``P(3, 2*1)`` or ``3,2*1`` to (3,1,1)."""
    body = text.strip()
    m = re.fullmatch(r"[Pp]\s*\((.*)\)", body)
    if m:
        body = m.group(1)
    out: list[int] = []
    for tok in body.split(","):
        tok = tok.strip()
        if not tok:
            raise ValueError(f"empty path token in {text!r}")
        if "*" in tok:
            raw_count, _, raw_m = tok.partition("*")
            count = int(raw_count.strip())
            value = int(raw_m.strip())
            if count < 1:
                raise ValueError(f"repetition count must be positive in {tok!r}")
            out.extend([value] * count)
        else:
            out.append(int(tok))
    return tuple(out)


def theta_graph(spec: ThetaSpec) -> Graph:
    """Two hubs joined by internally disjoint paths with the given internal counts.

    At most one path may have zero internal vertices (that path is a bare
    hub-hub edge; two of them would be a parallel edge), and a single path
    must have at least one.
    """
    ms = parse_theta_spec(spec) if isinstance(spec, str) else tuple(spec)
    if len(ms) < 1:
        raise ValueError("need at least one path")
    if any(m < 0 for m in ms):
        raise ValueError("internal vertex counts must be nonnegative")
    zeros = sum(1 for m in ms if m == 0)
    if len(ms) == 1 and ms[0] == 0:
        raise ValueError("P(0) is a bare edge, not 2-connected")
    if zeros > 1:
        raise ValueError("at most one path may be a bare hub-hub edge")
    n = 2 + sum(ms)
    labels = default_labels(n)
    edges: list[tuple[int, int]] = []
    nxt = 2
    for m in ms:
        prev = 0
        for _ in range(m):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(labels, edges)


def is_minimally_two_connected(g: Graph) -> bool:
    """2-connected, and every single edge removal destroys 2-connectivity."""
    if not is_k_connected(g, 2):
        return False
    return all(not is_k_connected(remove_edge(g, u, v), 2) for u, v in g.edges())


def triangle_free(g: Graph) -> bool:
    for u, v in g.edges():
        if g.adj_masks[u] & g.adj_masks[v]:
            return False
    return True


def _ear_extensions(g: Graph, internal: int) -> Iterable[Graph]:
    """All graphs from attaching one ear with the given internal vertex count.

    Ear endpoints are distinct existing vertices (equal endpoints would create
    a cut vertex).
    """
    n = g.order
    labels = default_labels(n + internal)
    base = [(u, v) for u, v in g.edges()]
    for a, b in itertools.combinations(range(n), 2):
        edges = list(base)
        prev = a
        for j in range(internal):
            edges.append((prev, n + j))
            prev = n + j
        edges.append((prev, b))
        yield Graph.from_edges(labels, edges)


def _cycle(n: int) -> Graph:
    return Graph.from_edges(default_labels(n), [(i, (i + 1) % n) for i in range(n)])


def generate_minimal_blocks_up_to(max_order: int) -> dict[int, list[Graph]]:
    """Minimal blocks of every order 3..max_order, canonical-key sorted."""
    if not GENERATION_MIN_ORDER <= max_order <= GENERATION_MAX_ORDER:
        raise ValueError(
            f"generation supports orders {GENERATION_MIN_ORDER}..{GENERATION_MAX_ORDER}, got {max_order}"
        )
    levels: dict[int, dict[str, Graph]] = {
        n: {} for n in range(GENERATION_MIN_ORDER, max_order + 1)
    }
    for n in range(GENERATION_MIN_ORDER, max_order + 1):
        cyc = _cycle(n)
        levels[n][canonical_form(cyc)] = cyc
    for n in range(GENERATION_MIN_ORDER, max_order + 1):
        for smaller in range(GENERATION_MIN_ORDER, n):
            for g in levels[smaller].values():
                for candidate in _ear_extensions(g, n - smaller):
                    if not is_minimally_two_connected(candidate):
                        continue
                    key = canonical_form(candidate)
                    levels[n].setdefault(key, candidate)
    return {
        n: [levels[n][key] for key in sorted(levels[n])]
        for n in range(GENERATION_MIN_ORDER, max_order + 1)
    }


def generate_minimal_blocks(n: int) -> list[Graph]:
    """All minimally 2-connected graphs of order n, up to isomorphism."""
    return generate_minimal_blocks_up_to(n)[n]


@dataclass(frozen=True)
class CatalogEntry:
    """A graph with a known value and a certified coloring."""

    id: str
    graph: Graph
    mvd_value: int
    coloring: dict[int, int]
    minimal: bool

    @property
    def order(self) -> int:
        return self.graph.order

    @property
    def extra(self) -> bool:
        return not self.minimal


@dataclass
class Catalog:
    """Entries indexed by canonical form; no two entries are isomorphic."""

    entries: list[CatalogEntry] = field(default_factory=list)
    _by_canon: dict[str, CatalogEntry] = field(default_factory=dict, repr=False)

    def add(self, entry: CatalogEntry) -> None:
        key = canonical_form(entry.graph)
        if key in self._by_canon:
            raise CatalogError(
                f"entry {entry.id!r} is isomorphic to existing entry {self._by_canon[key].id!r}"
            )
        self._by_canon[key] = entry
        self.entries.append(entry)

    def lookup(self, g: Graph) -> Optional[CatalogEntry]:
        return self._by_canon.get(canonical_form(g))

    def entries_of_order(self, n: int) -> list[CatalogEntry]:
        return [e for e in self.entries if e.order == n]

    def __len__(self) -> int:
        return len(self.entries)


def _check_entry(entry: CatalogEntry, source: str) -> None:
    verdict = is_mvd_coloring(entry.graph, entry.coloring)
    if not verdict.ok:
        x, y = verdict.witness  # type: ignore[misc]
        raise CatalogError(
            f"{source}: stored coloring fails verification "
            f"(no monochromatic cut for {entry.graph.labels[x]!r},{entry.graph.labels[y]!r})"
        )
    used = color_count(entry.coloring)
    if used != entry.mvd_value:
        raise CatalogError(f"{source}: coloring uses {used} colors, recorded value is {entry.mvd_value}")


def build_catalog(max_order: int, solver: Callable[[Graph], Any]) -> Catalog:
    """Generate the census up to max_order and solve every entry.

    The solver must return an object with ``value`` and ``coloring``
    attributes (an exact solver result).  Values are checked against the
    floor(n/2) bound, which holds from order 4 up.
    """
    if not GENERATION_MIN_ORDER <= max_order <= GENERATION_MAX_ORDER:
        raise ValueError(
            f"catalog orders run {GENERATION_MIN_ORDER}..{GENERATION_MAX_ORDER}, got {max_order}"
        )
    cat = Catalog()
    generated = generate_minimal_blocks_up_to(max_order)
    for n in range(GENERATION_MIN_ORDER, max_order + 1):
        for i, g in enumerate(generated[n], start=1):
            result = solver(g)
            value: int = result.value
            coloring: dict[int, int] = result.coloring
            if n >= 4 and value > n // 2:
                raise CatalogError(
                    f"solver value {value} for an order-{n} minimal block exceeds floor(n/2)"
                )
            entry = CatalogEntry(f"graph_{n}Vertex-{i}", g, value, coloring, minimal=True)
            _check_entry(entry, entry.id)
            cat.add(entry)
    return cat


def save_catalog(cat: Catalog, directory: str) -> list[str]:
    """One matrix-with-colors file per entry, named after the entry id."""
    os.makedirs(directory, exist_ok=True)
    written = []
    for entry in cat.entries:
        path = os.path.join(directory, f"{entry.id}.txt")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(format_matrix(entry.graph, entry.coloring))
        written.append(path)
    return written


def load_catalog(directory: str) -> Catalog:
    """Read every entry file, re-verify, and index; errors name the file.

    An entry's value is the number of colors its stored coloring uses.
    Non-minimal graphs load fine and are flagged as extra entries.
    """
    cat = Catalog()
    names = sorted(
        f for f in os.listdir(directory) if f.endswith(".txt") and f != "census.txt"
    )
    if not names:
        raise CatalogError(f"no catalog files in {directory!r}")
    for name in names:
        path = os.path.join(directory, name)
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        try:
            g, coloring = parse_matrix(text)
        except ValueError as exc:
            raise CatalogError(f"{name}: {exc}") from exc
        if coloring is None:
            raise CatalogError(f"{name}: entry carries no coloring")
        entry = CatalogEntry(
            id=name[: -len(".txt")],
            graph=g,
            mvd_value=color_count(coloring),
            coloring=coloring,
            minimal=is_minimally_two_connected(g),
        )
        try:
            _check_entry(entry, name)
            cat.add(entry)
        except CatalogError:
            raise
        except ValueError as exc:
            raise CatalogError(f"{name}: {exc}") from exc
    return cat


def census_text(cat: Catalog) -> str:
    """Per-order table: count plus each entry's id and value."""
    orders = sorted({e.order for e in cat.entries})
    out = []
    for n in orders:
        entries = cat.entries_of_order(n)
        out.append(f"order {n}: {len(entries)} graphs")
        for e in entries:
            out.append(f"  {e.id} mvd={e.mvd_value}")
    return "\n".join(out) + "\n"
