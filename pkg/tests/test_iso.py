from __future__ import annotations

import random

import pytest

from mvdcolor.catalog import theta_graph
from mvdcolor.graph import (
    GuardError,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    load_graph,
    path_graph,
    star_graph,
)
from mvdcolor.iso import canonical_form, find_isomorphism, transfer_coloring
from mvdcolor.verify import is_mvd_coloring
from builders import random_connected_graph
from oracles import brute_force_isomorphism


def shuffled_copy(g, rng):
    perm = list(range(g.order))
    rng.shuffle(perm)
    return induced_subgraph(g, perm)


def test_degree_sequence_mismatch():
    assert find_isomorphism(cycle_graph(4), star_graph(3)) is None


def test_example_block_matches_resource_graph(data_dir):
    g, _ = load_graph(str(data_dir / "example17.txt"))
    resource, _ = load_graph(str(data_dir / "typeset9" / "graph_9Vertex-9.txt"))
    block = induced_subgraph(g, [g.index_of(lab) for lab in "KPJNHGFEA"])
    mapping = find_isomorphism(block, resource)
    assert mapping is not None
    for u in range(block.order):
        for v in range(u + 1, block.order):
            assert block.has_edge(u, v) == resource.has_edge(mapping[u], mapping[v])


def test_relabeled_cycle_matches():
    rng = random.Random(1)
    c5 = cycle_graph(5)
    other = shuffled_copy(c5, rng)
    mapping = find_isomorphism(c5, other)
    assert mapping is not None
    assert sorted(mapping.values()) == list(range(5))


def test_matcher_agrees_with_permutation_brute_force():
    rng = random.Random(314)
    checked = 0
    while checked < 1000:
        n = rng.randint(2, 6)
        g = random_connected_graph(rng, n)
        if rng.random() < 0.5:
            h = shuffled_copy(g, rng)
        else:
            h = random_connected_graph(rng, n)
        got = find_isomorphism(g, h)
        want = brute_force_isomorphism(g, h)
        assert (got is None) == (want is None)
        if got is not None:
            for u in range(n):
                for v in range(u + 1, n):
                    assert g.has_edge(u, v) == h.has_edge(got[u], got[v])
        checked += 1


def test_canonical_form_examples():
    rng = random.Random(9)
    c4 = cycle_graph(4)
    assert canonical_form(c4) == canonical_form(shuffled_copy(c4, rng))
    assert canonical_form(c4) != canonical_form(path_graph(4))
    # non-isomorphic thetas of equal order, confirmed by the matcher
    a, b = theta_graph([2, 1, 1]), theta_graph([1, 1, 1, 1])
    assert find_isomorphism(a, b) is None
    assert canonical_form(a) != canonical_form(b)


def test_canonical_form_invariant_under_relabeling():
    rng = random.Random(27)
    for trial in range(8):
        g = random_connected_graph(rng, rng.randint(2, 8))
        key = canonical_form(g)
        for _ in range(50):
            assert canonical_form(shuffled_copy(g, rng)) == key


def test_canonical_form_guard():
    with pytest.raises(GuardError):
        canonical_form(path_graph(13))


def test_canonical_form_separates_nonisomorphic_small_graphs():
    rng = random.Random(300)
    for trial in range(200):
        n = rng.randint(2, 6)
        g = random_connected_graph(rng, n)
        h = random_connected_graph(rng, n)
        same_key = canonical_form(g) == canonical_form(h)
        assert same_key == (brute_force_isomorphism(g, h) is not None)


def test_canonical_form_handles_heavy_twin_symmetry():
    # complete bipartite hubs: factorial many equal orderings without twin pruning
    g = theta_graph([1] * 8)  # K_{2,8}
    key = canonical_form(g)
    rng = random.Random(5)
    assert canonical_form(shuffled_copy(g, rng)) == key
    assert canonical_form(complete_graph(10)) == canonical_form(complete_graph(10))


def test_transfer_coloring():
    identity = {v: v for v in range(4)}
    source = {0: 1, 1: 2, 2: 1, 3: 2}
    assert transfer_coloring(identity, source) == source

    rng = random.Random(77)
    c6 = cycle_graph(6)
    relabeled = shuffled_copy(c6, rng)
    mapping = find_isomorphism(c6, relabeled)
    colors = {v: (v % 3) + 1 for v in range(6)}
    moved = transfer_coloring(mapping, colors)
    sizes = sorted(list(moved.values()).count(c) for c in set(moved.values()))
    assert sizes == sorted(list(colors.values()).count(c) for c in set(colors.values()))


def test_transferred_catalog_coloring_verifies_on_block(data_dir):
    g, _ = load_graph(str(data_dir / "example17.txt"))
    resource, coloring = load_graph(str(data_dir / "typeset9" / "graph_9Vertex-11.txt"))
    block = induced_subgraph(g, [g.index_of(lab) for lab in "IMDOCLQBH"])
    mapping = find_isomorphism(block, resource)
    assert mapping is not None
    moved = transfer_coloring(mapping, coloring)
    assert is_mvd_coloring(block, moved).ok


def test_transfer_commutes_with_restriction():
    rng = random.Random(88)
    g = random_connected_graph(rng, 6)
    h = shuffled_copy(g, rng)
    mapping = find_isomorphism(g, h)
    source = {v: rng.randint(1, 3) for v in range(6)}
    moved = transfer_coloring(mapping, source)
    subset = [0, 2, 4]
    a = {v: moved[v] for v in subset}
    b = {v: source[mapping[v]] for v in subset}
    assert a == b
