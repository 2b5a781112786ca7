"""Upper bounds and the large-value classification of gated graphs.

A graph is *gated* when every nontrivial block is minimally 2-connected and
triangle-free.  For gated graphs the classification names the structural
family behind each large value regime; the regime itself always comes from
the solver, and structural recognition is a cross-check, never the source of
truth.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional

from .blocks import BlockDecomposition, decompose
from .catalog import Catalog, is_minimally_two_connected, theta_graph, triangle_free
from .graph import Graph, GuardError, cycle_graph, induced_subgraph, is_connected
from .iso import canonical_form
from .solve import mvd_via_blocks


class GateError(ValueError):
    """A nontrivial block falls outside the gated class."""

    def __init__(self, message: str, block_labels: tuple[str, ...]):
        super().__init__(message)
        self.block_labels = block_labels


@dataclass(frozen=True)
class BoundReport:
    kind: str  # "half-order" | "block-formula"
    applicable: bool
    reason: str
    value: Optional[int]


@dataclass(frozen=True)
class ClassificationResult:
    gate: bool
    order: int
    mvd: int
    regime: str  # "n", "n-2", ..., "n-5", or "other"
    family: str  # tree | unicyclic-C4 | class-A | class-B | class-C | unclassified
    core: Optional[Graph]
    core_key: Optional[str]


def bound_half_order(g: Graph) -> BoundReport:
    """floor(n/2) upper bound; applies to minimally 2-connected graphs, n >= 4."""
    n = g.order
    if n < 4:
        return BoundReport("half-order", False, f"order {n} < 4", None)
    if not is_minimally_two_connected(g):
        return BoundReport("half-order", False, "not minimally 2-connected", None)
    return BoundReport("half-order", True, "minimally 2-connected, order >= 4", n // 2)


def _gate(dec: BlockDecomposition) -> Optional[tuple[str, ...]]:
    """Labels of the first nontrivial block outside the gated class, or None."""
    for block in dec.blocks:
        if block.trivial:
            continue
        if not is_minimally_two_connected(block.graph) or not triangle_free(block.graph):
            return tuple(sorted(block.graph.labels))
    return None


def bound_blocks(g: Graph) -> BoundReport:
    """floor((n + 2t - r + 1)/2) bound from the block counts r and t."""
    if not is_connected(g) or g.order < 2:
        return BoundReport("block-formula", False, "needs a connected graph of order >= 2", None)
    dec = decompose(g)
    offending = _gate(dec)
    if offending is not None:
        return BoundReport(
            "block-formula",
            False,
            f"nontrivial block {{{', '.join(offending)}}} is not a minimal triangle-free block",
            None,
        )
    value = (g.order + 2 * dec.t - dec.r + 1) // 2
    return BoundReport("block-formula", True, f"r={dec.r}, t={dec.t}", value)


@functools.lru_cache(maxsize=1)
def _family_keys() -> tuple[dict[str, str], dict[str, str]]:
    """Canonical keys of the text-recoverable cores for the n-3 and n-4 families."""
    class_a = {
        canonical_form(cycle_graph(5)): "C5",
        canonical_form(theta_graph([1, 1, 1])): "K2,3",
        canonical_form(cycle_graph(6)): "C6",
    }
    class_b = {
        canonical_form(cycle_graph(7)): "C7",
        canonical_form(theta_graph([3, 1, 1])): "P(3,1,1)",
        canonical_form(theta_graph([2, 1, 1])): "P(2,1,1)",
        canonical_form(theta_graph([1, 1, 1, 1])): "P(1,1,1,1)",
        canonical_form(cycle_graph(8)): "C8",
    }
    return class_a, class_b


def nontrivial_core(g: Graph, dec: Optional[BlockDecomposition] = None) -> Optional[Graph]:
    """Subgraph induced by the union of all nontrivial blocks, None for trees."""
    if dec is None:
        dec = decompose(g)
    vertices = sorted({v for b in dec.blocks if not b.trivial for v in b.vertices})
    if not vertices:
        return None
    return induced_subgraph(g, vertices)


def _structural_family(dec: BlockDecomposition) -> Optional[str]:
    nontrivial = [b for b in dec.blocks if not b.trivial]
    if not nontrivial:
        return "tree"
    class_a, class_b = _family_keys()
    c4_key = canonical_form(cycle_graph(4))
    if len(nontrivial) == 1:
        key = canonical_form(nontrivial[0].graph)
        if key == c4_key:
            return "unicyclic-C4"
        if key in class_a:
            return "class-A"
        if key in class_b:
            return "class-B"
        return None
    if len(nontrivial) == 2 and all(canonical_form(b.graph) == c4_key for b in nontrivial):
        return "class-B"
    return None


_REGIME_OF_FAMILY = {
    "tree": "n",
    "unicyclic-C4": "n-2",
    "class-A": "n-3",
    "class-B": "n-4",
}


def classify(g: Graph, catalog: Optional[Catalog] = None) -> ClassificationResult:
    """Regime (n - mvd when small) and family of a gated graph.

    Refuses ungated inputs.  The n-1 regime is impossible for gated graphs
    and is asserted never to appear.  Families for the n-5 regime have no
    text-recoverable member list, so that regime reports family class-C with
    the computed core.
    """
    if g.order < 2 or not is_connected(g):
        raise ValueError("classification needs a connected graph of order >= 2")
    dec = decompose(g)
    offending = _gate(dec)
    if offending is not None:
        raise GateError(
            f"nontrivial block {{{', '.join(offending)}}} is not a minimal triangle-free block",
            offending,
        )
    n = g.order
    value = mvd_via_blocks(g, catalog).value
    code = n - value
    if code == 1:
        raise AssertionError("gated graph with value n-1: contradicts the classification theorem")
    regime = "n" if code == 0 else (f"n-{code}" if code <= 5 else "other")
    family = _structural_family(dec)
    if family is not None:
        expected = _REGIME_OF_FAMILY[family]
        if regime != expected:
            raise AssertionError(
                f"structural family {family} implies regime {expected}, solver says {regime}"
            )
    elif regime == "n-5":
        family = "class-C"
    else:
        family = "unclassified"
    core = nontrivial_core(g, dec)
    core_key: Optional[str] = None
    if core is not None:
        try:
            core_key = canonical_form(core)
        except GuardError:
            core_key = None
    return ClassificationResult(True, n, value, regime, family, core, core_key)


def triangle_blocks_value(g: Graph) -> Optional[int]:
    """n when every nontrivial block is a triangle (vacuously for trees)."""
    if g.order < 2 or not is_connected(g):
        raise ValueError("needs a connected graph of order >= 2")
    dec = decompose(g)
    for block in dec.blocks:
        if block.trivial:
            continue
        bg = block.graph
        if not (bg.order == 3 and bg.size == 3):
            return None
    return g.order
