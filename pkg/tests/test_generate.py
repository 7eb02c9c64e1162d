"""Deterministic generators and exhaustive enumerators.

Enumeration counts are frozen against the published counting sequences for
connected graphs, trees, and unicyclic graphs by size; the rooted-tree
count was derived once with an independent script and pinned.
"""

from collections import Counter

import pytest

from liec import (
    GenSpec,
    SplitMix64,
    bowtie_graph,
    canonical_key,
    classify,
    enumerate_connected_graphs,
    enumerate_shrubs,
    enumerate_trees,
    enumerate_unicyclic,
    generate,
    random_cactus_vdc,
    random_tree,
    random_unicyclic,
    spidey_graph,
    t_family_graph,
)
from liec import cycle_graph as cycle
from liec import path_graph as path
from liec import star_graph as star
from liec.errors import InvalidSpec, TooLarge
from liec.graph import is_tree


def test_splitmix_reference_value():
    # first output of the reference stream for seed 0
    assert SplitMix64(0).next64() == 16294208416658607535


def test_splitmix_determinism_and_bounds():
    a = SplitMix64(42)
    b = SplitMix64(42)
    assert [a.next64() for _ in range(5)] == [b.next64() for _ in range(5)]
    r = SplitMix64(7)
    draws = [r.below(6) for _ in range(200)]
    assert set(draws) <= set(range(6))
    assert len(set(draws)) == 6


def test_spidey_shape():
    g = spidey_graph(2, 3)
    assert g.degree(0) == 5
    assert len(g.edges) == 2 + 2 * 3
    assert is_tree(g)
    with pytest.raises(InvalidSpec):
        spidey_graph(1, 1)


def test_bowtie_shape():
    b = bowtie_graph()
    assert len(b.vertices) == 10
    assert len(b.edges) == 13
    degs = sorted(b.degree(v) for v in b.vertices)
    assert degs == [2] * 8 + [5, 5]
    c = classify(b)
    assert c.tag == "Cactus"
    assert c.girth == 3
    assert c.cycle_count == 4


def test_t_family_deterministic():
    assert t_family_graph(3, 5) == t_family_graph(3, 5)
    assert len(t_family_graph(0, 0).edges) == 3


def test_random_tree_shape():
    for seed in range(10):
        g = random_tree(seed, 9)
        assert len(g.vertices) == 9
        assert is_tree(g)
    assert random_tree(4, 12) == random_tree(4, 12)


def test_random_unicyclic_shape():
    for seed in range(10):
        g = random_unicyclic(seed, 8)
        assert len(g.vertices) == 8
        assert len(g.edges) == 8
        assert classify(g).cycle_count == 1


def test_random_cactus_shape():
    for seed in range(20):
        c = 2 + seed % 3
        g = random_cactus_vdc(seed, c)
        cls = classify(g)
        assert cls.tag == "CactusVertexDisjointCycles"
        assert cls.cycle_count == c
        assert len(g.edges) <= 22
    with pytest.raises(InvalidSpec):
        random_cactus_vdc(0, 1)
    with pytest.raises(InvalidSpec):
        random_cactus_vdc(0, 5)


def test_genspec_dispatch():
    assert generate(GenSpec("BowtieB", [])) == bowtie_graph()
    assert generate(GenSpec("Cycle", [6])) == cycle(6)
    assert generate(GenSpec("Path", [4])) == path(4)
    assert generate(GenSpec("Star", [3])) == star(3)
    assert generate(GenSpec("RandomTree", [1, 7])) == random_tree(1, 7)


def test_genspec_rejects_bad_input():
    with pytest.raises(InvalidSpec):
        generate(GenSpec("Cycle", [6, 6]))
    with pytest.raises(InvalidSpec):
        generate(GenSpec("Nonsense", []))


def test_canonical_key_ignores_labeling():
    g = cycle(5)
    relabeled = parse_relabel(g, {0: 4, 1: 2, 2: 0, 3: 3, 4: 1})
    assert canonical_key(g) == canonical_key(relabeled)
    assert canonical_key(cycle(4)) != canonical_key(path(4))


def parse_relabel(g, mapping):
    from liec import Graph, edge

    return Graph(
        {mapping[v] for v in g.vertices},
        {edge(mapping[u], mapping[v]) for u, v in g.edges},
    )


def test_connected_graph_counts(small_connected):
    by_edges = Counter(len(g.edges) for g in small_connected)
    assert [by_edges[m] for m in range(1, 8)] == [1, 1, 3, 5, 12, 30, 79]
    # no duplicates under the canonical key
    keys = {canonical_key(g) for g in small_connected}
    assert len(keys) == len(small_connected)
    with pytest.raises(TooLarge):
        list(enumerate_connected_graphs(9))


def test_tree_counts():
    trees = list(enumerate_trees(11))
    by_n = Counter(len(t.vertices) for t in trees)
    assert [by_n[n] for n in range(1, 12)] == [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235]
    assert all(is_tree(t) for t in trees)


def test_shrub_count():
    shrubs = list(enumerate_shrubs(10))
    assert len(shrubs) == 486
    for s in shrubs[:50]:
        assert s.tree.degree(s.root) == 1


def test_unicyclic_counts():
    graphs = list(enumerate_unicyclic(9))
    by_n = Counter(len(g.vertices) for g in graphs)
    assert [by_n[n] for n in range(3, 10)] == [1, 2, 5, 13, 33, 89, 240]
    assert all(classify(g).cycle_count == 1 for g in graphs)
