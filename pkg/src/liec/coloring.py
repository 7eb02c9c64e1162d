"""Edge colorings and the checks that define local irregularity.

A coloring assigns a color (small nonnegative int) to every edge it knows
about.  An edge u-v with color x is violating when u and v have the same
number of x-colored edges; a coloring of a graph is a liec when no edge
violates.  Shrub colorings relax this at the root edge only (aliec).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OverlappingEdges, PartialColoring, UnknownVertex
from .graph import Edge, Graph, Shrub, edge


class EdgeColoring:
    """Immutable edge -> color map plus a declared palette size."""

    __slots__ = ("assignment", "palette_size")

    def __init__(self, assignment, palette_size: int | None = None):
        norm = {edge(u, v): int(c) for (u, v), c in dict(assignment).items()}
        if any(c < 0 for c in norm.values()):
            raise ValueError("colors must be nonnegative")
        least = (max(norm.values()) + 1) if norm else 1
        if palette_size is None:
            palette_size = least
        if palette_size < least:
            raise ValueError(f"palette_size {palette_size} below max color {least - 1}")
        self.assignment = norm
        self.palette_size = palette_size

    def __getitem__(self, e: Edge) -> int:
        return self.assignment[edge(*e)]

    def __contains__(self, e) -> bool:
        return edge(*e) in self.assignment

    def __len__(self) -> int:
        return len(self.assignment)

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.assignment == other.assignment and self.palette_size == other.palette_size

    def __hash__(self):
        return hash((frozenset(self.assignment.items()), self.palette_size))

    def __repr__(self):
        return f"EdgeColoring({len(self.assignment)} edges, palette {self.palette_size})"

    def used_colors(self) -> set[int]:
        return set(self.assignment.values())

    def restricted(self, edges) -> EdgeColoring:
        """The coloring on a subset of its edges; palette is recomputed."""
        keep = {edge(u, v) for u, v in edges}
        return EdgeColoring({e: c for e, c in self.assignment.items() if e in keep})

    def without_edges(self, edges) -> EdgeColoring:
        drop = {edge(u, v) for u, v in edges}
        return EdgeColoring({e: c for e, c in self.assignment.items() if e not in drop})

    def with_color(self, e: Edge, color: int) -> EdgeColoring:
        new = dict(self.assignment)
        new[edge(*e)] = color
        return EdgeColoring(new, max(self.palette_size, color + 1))

    def renamed(self, mapping: dict[int, int]) -> EdgeColoring:
        """Apply a color permutation; colors outside the mapping stay put."""
        values = list(mapping.values())
        if len(set(values)) != len(values):
            raise ValueError("color renaming must be injective")
        new = {e: mapping.get(c, c) for e, c in self.assignment.items()}
        top = max(new.values(), default=0)
        return EdgeColoring(new, max(self.palette_size, top + 1))


def color_degree(g: Graph, coloring: EdgeColoring, v: int, x: int) -> int:
    """Number of x-colored edges of g incident with v."""
    if v not in g.vertices:
        raise UnknownVertex(f"vertex {v} not in graph")
    return sum(
        1 for w in g.neighbors(v) if coloring.assignment.get(edge(v, w)) == x
    )


def color_sequence(g: Graph, coloring: EdgeColoring, v: int, x: int) -> tuple[int, ...]:
    """Non-increasing x-degrees of the x-neighbors of v."""
    if v not in g.vertices:
        raise UnknownVertex(f"vertex {v} not in graph")
    vals = [
        color_degree(g, coloring, w, x)
        for w in g.neighbors(v)
        if coloring.assignment.get(edge(v, w)) == x
    ]
    return tuple(sorted(vals, reverse=True))


def _color_degrees(g: Graph, coloring: EdgeColoring) -> dict[int, dict[int, int]]:
    degs: dict[int, dict[int, int]] = {v: {} for v in g.vertices}
    for e in g.edges:
        c = coloring.assignment.get(e)
        if c is None:
            raise PartialColoring(f"edge {e[0]}-{e[1]} has no color")
        for v in e:
            degs[v][c] = degs[v].get(c, 0) + 1
    return degs


def verify_liec(g: Graph, coloring: EdgeColoring) -> list[Edge]:
    """All violating edges of g under the coloring, sorted.

    Extra assignment keys outside E(g) are tolerated; a missing edge raises
    PartialColoring.  An empty result means the coloring is a liec of g.
    """
    degs = _color_degrees(g, coloring)
    bad = []
    for e in g.edges:
        c = coloring.assignment[e]
        if degs[e[0]].get(c, 0) == degs[e[1]].get(c, 0):
            bad.append(e)
    return sorted(bad)


def invert(coloring: EdgeColoring, x: int, y: int) -> EdgeColoring:
    """Swap colors x and y everywhere.  invert(c, x, x) is c itself."""
    if x == y:
        return coloring
    swapped = {e: (y if c == x else x if c == y else c) for e, c in coloring.assignment.items()}
    return EdgeColoring(swapped, max(coloring.palette_size, x + 1, y + 1))


def combine(parts) -> EdgeColoring:
    """Union of colorings on edge-disjoint graphs.

    parts is an iterable of (graph, coloring) pairs; each coloring must cover
    its graph.  Overlapping edge sets raise OverlappingEdges.
    """
    merged: dict[Edge, int] = {}
    palette = 1
    for g, coloring in parts:
        palette = max(palette, coloring.palette_size)
        for e in sorted(g.edges):
            c = coloring.assignment.get(e)
            if c is None:
                raise PartialColoring(f"edge {e[0]}-{e[1]} has no color")
            if e in merged:
                raise OverlappingEdges(f"edge {e[0]}-{e[1]} colored twice")
            merged[e] = c
    return EdgeColoring(merged, palette)


@dataclass(frozen=True)
class AliecStatus:
    tag: str  # "Liec", "ProperAliec" or "Invalid"
    violations: tuple[Edge, ...]


def aliec_status(s: Shrub, coloring: EdgeColoring) -> AliecStatus:
    """Classify a shrub coloring.

    Liec: no violations.  ProperAliec: the root edge is the only violation
    and no adjacent edge shares its color (so the root edge is isolated in
    its color class).  Anything else is Invalid.
    """
    bad = verify_liec(s.tree, coloring)
    if not bad:
        return AliecStatus("Liec", ())
    if bad != [s.root_edge]:
        return AliecStatus("Invalid", tuple(bad))
    root_color = coloring[s.root_edge]
    w = s.root_edge[0] if s.root_edge[1] == s.root else s.root_edge[1]
    for x in s.tree.neighbors(w):
        e = edge(w, x)
        if e != s.root_edge and coloring[e] == root_color:
            return AliecStatus("Invalid", tuple(bad))
    return AliecStatus("ProperAliec", tuple(bad))
