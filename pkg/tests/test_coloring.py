"""Edge colorings, the local irregularity check, and shrub status."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liec import (
    EdgeColoring,
    Graph,
    aliec_status,
    color_degree,
    color_sequence,
    combine,
    invert,
    rooted_shrub,
    verify_liec,
)
from liec import cycle_graph as cycle
from liec import path_graph as path
from liec import star_graph as star
from liec.errors import OverlappingEdges, PartialColoring


def test_palette_defaults_to_max_plus_one():
    c = EdgeColoring({(0, 1): 0, (1, 2): 2})
    assert c.palette_size == 3
    assert EdgeColoring({}).palette_size == 1


def test_palette_must_cover_colors():
    with pytest.raises(ValueError):
        EdgeColoring({(0, 1): 3}, palette_size=2)


def test_lookup_normalizes_edge_order():
    c = EdgeColoring({(0, 1): 1})
    assert c[(1, 0)] == 1
    assert (1, 0) in c
    assert len(c) == 1


def test_used_colors_and_restricted():
    c = EdgeColoring({(0, 1): 0, (1, 2): 1, (2, 3): 0})
    assert c.used_colors() == {0, 1}
    r = c.restricted([(0, 1), (2, 3)])
    assert r.used_colors() == {0}
    assert len(r) == 2
    # palette is recomputed from the surviving colors
    assert r.palette_size == 1


def test_without_edges_and_with_color():
    c = EdgeColoring({(0, 1): 0, (1, 2): 1})
    assert len(c.without_edges([(1, 0)])) == 1
    d = c.with_color((1, 2), 0)
    assert d[(1, 2)] == 0
    assert c[(1, 2)] == 1


def test_renamed_swaps_colors():
    c = EdgeColoring({(0, 1): 0, (1, 2): 2}, palette_size=3)
    d = c.renamed({0: 2, 2: 0})
    assert d[(0, 1)] == 2
    assert d[(1, 2)] == 0
    assert d.palette_size == 3


def test_invert_is_renamed_on_two_colors():
    c = EdgeColoring({(0, 1): 0, (1, 2): 1, (2, 3): 0})
    d = invert(c, 0, 1)
    assert [d[e] for e in [(0, 1), (1, 2), (2, 3)]] == [1, 0, 1]


@given(st.lists(st.integers(min_value=0, max_value=1), min_size=1, max_size=10))
def test_double_invert_is_identity(colors):
    assignment = {(i, i + 1): c for i, c in enumerate(colors)}
    c = EdgeColoring(assignment, palette_size=2)
    assert invert(invert(c, 0, 1), 0, 1) == c


def test_color_degree_and_sequence():
    g = star(3)
    c = EdgeColoring({(0, 1): 0, (0, 2): 0, (0, 3): 1})
    assert color_degree(g, c, 0, 0) == 2
    assert color_degree(g, c, 0, 1) == 1
    assert color_degree(g, c, 1, 0) == 1
    assert color_sequence(g, c, 0, 0) == (1, 1)
    assert color_sequence(g, c, 0, 1) == (1,)


def test_verify_liec_requires_total_coloring():
    with pytest.raises(PartialColoring):
        verify_liec(path(2), EdgeColoring({(0, 1): 0}))


def test_verify_liec_on_monochromatic_paths():
    # P2 under one color is a star: degrees 1,2,1, no violation
    assert verify_liec(path(2), EdgeColoring({e: 0 for e in path(2).edges})) == []
    # P3 under one color balances its middle edge (2 vs 2)
    assert verify_liec(path(3), EdgeColoring({e: 0 for e in path(3).edges})) == [(1, 2)]


def test_verify_liec_flags_balanced_edge():
    c = EdgeColoring({(0, 1): 0})
    assert verify_liec(path(1), c) == [(0, 1)]


def test_verify_liec_per_class_not_global():
    # C4 alternating 0101: each class is a perfect matching, every edge
    # violates within its own class
    g = cycle(4)
    c = EdgeColoring({(0, 1): 0, (1, 2): 1, (2, 3): 0, (0, 3): 1})
    assert len(verify_liec(g, c)) == 4
    # C4 paired 0011 is fine
    d = EdgeColoring({(0, 1): 0, (1, 2): 0, (2, 3): 1, (0, 3): 1})
    assert verify_liec(g, d) == []


def test_combine_merges_parts():
    g1, g2 = path(2), Graph({3, 4}, {(3, 4)})
    c1 = EdgeColoring({(0, 1): 0, (1, 2): 0}, palette_size=2)
    c2 = EdgeColoring({(3, 4): 2})
    merged = combine([(g1, c1), (g2, c2)])
    assert len(merged) == 3
    assert merged.palette_size == 3


def test_combine_rejects_overlap():
    g = path(2)
    c = EdgeColoring({(0, 1): 0, (1, 2): 0})
    with pytest.raises(OverlappingEdges):
        combine([(g, c), (g, c)])


def test_combine_rejects_partial_part():
    g = path(2)
    c = EdgeColoring({(0, 1): 0})
    with pytest.raises(PartialColoring):
        combine([(g, c)])


def test_aliec_status_liec():
    s = rooted_shrub(path(2), 0)
    c = EdgeColoring({(0, 1): 0, (1, 2): 0})
    assert aliec_status(s, c).tag == "Liec"


def test_aliec_status_proper():
    # P3 rooted at an end, colored 0 1 1: root edge balanced (1 vs 1) but
    # alone in color 0
    s = rooted_shrub(path(3), 0)
    c = EdgeColoring({(0, 1): 0, (1, 2): 1, (2, 3): 1})
    st_ = aliec_status(s, c)
    assert st_.tag == "ProperAliec"
    assert st_.violations == ((0, 1),)


def test_aliec_status_invalid_when_root_color_repeats():
    # all 0 on P3: only the root edge violates but its neighbor shares color 0
    s = rooted_shrub(path(3), 0)
    c = EdgeColoring({(0, 1): 0, (1, 2): 0, (2, 3): 0})
    assert aliec_status(s, c).tag == "Invalid"


def test_aliec_status_invalid_when_inner_edge_violates():
    s = rooted_shrub(path(5), 0)
    c = EdgeColoring({e: 0 for e in path(5).edges})
    assert aliec_status(s, c).tag == "Invalid"
