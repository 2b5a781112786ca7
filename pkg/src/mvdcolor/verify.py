"""The coloring contract made executable: monochromatic cuts and verdicts.

A coloring passes when every nonadjacent pair has a single-colored vertex cut
separating it.  Pair checks reduce to one connectivity test per color class:
a monochromatic x-y cut exists iff some full color class minus {x, y}
separates x and y (any monochromatic cut sits inside the class of its color,
and a separating class contains a minimal cut, which is single-colored).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .graph import Graph, is_connected, separates


@dataclass(frozen=True)
class MvdVerdict:
    """Outcome of verifying one coloring.

    ``witness`` is the least nonadjacent pair (by label) with no monochromatic
    cut; ``certificate`` maps every nonadjacent pair to a color whose class
    separates it and is present exactly when the verdict is ok.
    """

    ok: bool
    witness: Optional[tuple[int, int]]
    certificate: Optional[Mapping[tuple[int, int], int]]


def _require_total(g: Graph, coloring: Mapping[int, int]) -> None:
    missing = [g.labels[v] for v in range(g.order) if v not in coloring]
    if missing:
        raise ValueError(f"coloring misses vertices: {', '.join(sorted(missing))}")
    for v, c in coloring.items():
        if not (0 <= v < g.order):
            raise ValueError(f"coloring mentions unknown vertex index {v}")
        if c < 1:
            raise ValueError(f"colors must be positive, got {c}")


def nonadjacent_pairs(g: Graph) -> list[tuple[int, int]]:
    """All nonadjacent pairs, sorted by label so reports are deterministic."""
    pairs = []
    for x in range(g.order):
        for y in range(x + 1, g.order):
            if not g.has_edge(x, y):
                a, b = sorted((x, y), key=lambda v: g.labels[v])
                pairs.append((a, b))
    pairs.sort(key=lambda p: (g.labels[p[0]], g.labels[p[1]]))
    return pairs


def monochromatic_cut_exists(
    g: Graph, coloring: Mapping[int, int], x: int, y: int
) -> Optional[int]:
    """Least color whose class minus {x, y} separates x from y, else None.

    None is definitive: if no class works, no monochromatic cut exists.
    """
    if x == y:
        raise ValueError("need two distinct vertices")
    if g.has_edge(x, y):
        raise ValueError(
            f"{g.labels[x]!r} and {g.labels[y]!r} are adjacent; no vertex cut can separate them"
        )
    if not is_connected(g):
        raise ValueError("monochromatic cuts are defined on connected graphs")
    _require_total(g, coloring)
    classes: dict[int, list[int]] = {}
    for v in range(g.order):
        classes.setdefault(coloring[v], []).append(v)
    for color in sorted(classes):
        cut = [v for v in classes[color] if v != x and v != y]
        if separates(g, cut, x, y):
            return color
    return None


def is_mvd_coloring(g: Graph, coloring: Mapping[int, int]) -> MvdVerdict:
    """Check every nonadjacent pair; complete graphs pass vacuously.

    The witness, when present, is the least failing pair in label order no
    matter how the per-pair checks are scheduled.
    """
    if g.order < 2:
        raise ValueError("verification needs at least 2 vertices")
    if not is_connected(g):
        raise ValueError("verification needs a connected graph")
    _require_total(g, coloring)
    certificate: dict[tuple[int, int], int] = {}
    for x, y in nonadjacent_pairs(g):
        color = monochromatic_cut_exists(g, coloring, x, y)
        if color is None:
            return MvdVerdict(ok=False, witness=(x, y), certificate=None)
        certificate[(x, y)] = color
    return MvdVerdict(ok=True, witness=None, certificate=certificate)


def restrict(coloring: Mapping[int, int], vertices: Iterable[int]) -> dict[int, int]:
    """Restriction to a vertex subset; colors keep their identities."""
    return {v: coloring[v] for v in vertices}


def color_count(coloring: Mapping[int, int]) -> int:
    return len(set(coloring.values()))
