"""Graph generators: fixed shapes, seeded random families, and exhaustive
enumeration of small graph classes up to isomorphism.

Random kinds take an explicit 64-bit seed and use a private SplitMix64
stream, so the same spec always yields byte-identical output regardless of
platform or interpreter version.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import InvalidSpec, TooLarge
from .graph import Graph, Shrub, edge, is_cycle_graph, is_path_graph, rooted_shrub

_MASK = (1 << 64) - 1


class SplitMix64:
    """Tiny deterministic PRNG; one 64-bit word of state."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform draw from 0..n-1 by rejection, so no modulo bias."""
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next64()
            if x < limit:
                return x % n


# fixed shapes

def path_graph(length: int) -> Graph:
    if length < 1:
        raise InvalidSpec("path length must be at least 1")
    return Graph(range(length + 1), [(i, i + 1) for i in range(length)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidSpec("cycle length must be at least 3")
    return Graph(range(n), [(i, (i + 1) % n) for i in range(n)])


def star_graph(legs: int) -> Graph:
    if legs < 1:
        raise InvalidSpec("a star needs at least one leg")
    return Graph(range(legs + 1), [(0, i) for i in range(1, legs + 1)])


def spidey_graph(short_legs: int, long_legs: int) -> Graph:
    """Center 0 with short_legs pendant edges and long_legs paths of length 2."""
    if short_legs < 0 or long_legs < 0 or short_legs + long_legs < 3:
        raise InvalidSpec("spidey center degree must be at least 3")
    edges = [(0, i) for i in range(1, short_legs + 1)]
    nxt = short_legs + 1
    for _ in range(long_legs):
        edges.append((0, nxt))
        edges.append((nxt, nxt + 1))
        nxt += 2
    return Graph(range(nxt), edges)


def bowtie_graph() -> Graph:
    """Two bow-ties joined by a bridge between their centers; the smallest
    known graph needing four colors."""
    edges = [
        (0, 1), (0, 2), (1, 2),
        (0, 3), (0, 4), (3, 4),
        (5, 6), (5, 7), (6, 7),
        (5, 8), (5, 9), (8, 9),
        (0, 5),
    ]
    return Graph(range(10), edges)


def t_family_graph(seed: int, steps: int) -> Graph:
    """Replay `steps` random attachments of the triangle-chain grammar.

    Every intermediate graph is a member of the non-colorable triangle
    family; attachment stops early if no degree-2 triangle vertex is left.
    """
    if steps < 0:
        raise InvalidSpec("steps must not be negative")
    rng = SplitMix64(seed)
    adj: dict[int, set[int]] = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}
    on_triangle = {0, 1, 2}

    def add_edge(a: int, b: int) -> None:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    for _ in range(steps):
        anchors = sorted(v for v in on_triangle if len(adj[v]) == 2)
        if not anchors:
            break
        a = anchors[rng.below(len(anchors))]
        odd = rng.below(2) == 1
        length = (1 + 2 * rng.below(2)) if odd else (2 + 2 * rng.below(2))
        nxt = max(adj) + 1
        prev = a
        last = a
        for _ in range(length):
            add_edge(prev, nxt)
            prev, last = nxt, nxt
            nxt += 1
        if odd:
            t1, t2 = nxt, nxt + 1
            add_edge(last, t1)
            add_edge(last, t2)
            add_edge(t1, t2)
            on_triangle.update({last, t1, t2})
    edges = {edge(a, b) for a in adj for b in adj[a]}
    return Graph(adj.keys(), edges)


# seeded random families

def random_tree(seed: int, n: int) -> Graph:
    """Random recursive tree: vertex i attaches to a uniform earlier vertex."""
    if n < 2:
        raise InvalidSpec("a random tree needs at least 2 vertices")
    rng = SplitMix64(seed)
    return Graph(range(n), [(i, rng.below(i)) for i in range(1, n)])


def random_unicyclic(seed: int, n: int) -> Graph:
    """Random recursive tree plus one uniformly chosen missing edge."""
    if n < 3:
        raise InvalidSpec("a unicyclic graph needs at least 3 vertices")
    rng = SplitMix64(seed)
    t = Graph(range(n), [(i, rng.below(i)) for i in range(1, n)])
    while True:
        u = rng.below(n)
        v = rng.below(n)
        if u != v and not t.has_edge(u, v):
            return t.with_edges([(u, v)])


def random_cactus_vdc(seed: int, cycle_count: int) -> Graph:
    """Random cactus whose cycles are vertex disjoint: cycles of length 3..5
    joined by connector paths of length 1..2, plus a few pendant edges.
    Total size is clamped to at most 22 edges."""
    if not 2 <= cycle_count <= 4:
        raise InvalidSpec("cycle count must be between 2 and 4")
    rng = SplitMix64(seed)
    lens = [3 + rng.below(3) for _ in range(cycle_count)]
    conns = [1 + rng.below(2) for _ in range(cycle_count - 1)]
    pendants = rng.below(3)
    while sum(lens) + sum(conns) + pendants > 22:
        if pendants > 0:
            pendants -= 1
        elif max(lens) > 3:
            lens[lens.index(max(lens))] -= 1
        else:
            conns[conns.index(max(conns))] = 1
    edges: list[tuple[int, int]] = []
    rings: list[list[int]] = []
    nxt = 0

    def add_ring(size: int, attach_to: int | None, conn_len: int) -> None:
        nonlocal nxt
        first = nxt
        if attach_to is not None:
            prev = attach_to
            for _ in range(conn_len - 1):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            edges.append((prev, nxt))
            first = nxt
        ring = list(range(first, first + size))
        nxt = first + size
        for i in range(size):
            edges.append((ring[i], ring[(i + 1) % size]))
        rings.append(ring)

    add_ring(lens[0], None, 0)
    for i in range(1, cycle_count):
        host = rings[rng.below(len(rings))]
        add_ring(lens[i], host[rng.below(len(host))], conns[i - 1])
    for _ in range(pendants):
        v = rng.below(nxt)
        edges.append((v, nxt))
        nxt += 1
    return Graph(range(nxt), edges)


# spec-driven dispatch

_KINDS = {
    "Path": 1,
    "Cycle": 1,
    "Star": 1,
    "Spidey": 2,
    "BowtieB": 0,
    "TFamily": 2,
    "RandomTree": 2,
    "RandomUnicyclic": 2,
    "RandomCactusVdc": 2,
}


@dataclass(frozen=True)
class GenSpec:
    kind: str
    params: tuple[int, ...] = ()


def generate(spec: GenSpec) -> Graph:
    if spec.kind not in _KINDS:
        raise InvalidSpec(f"unknown generator kind {spec.kind!r}")
    if len(spec.params) != _KINDS[spec.kind]:
        raise InvalidSpec(
            f"{spec.kind} takes {_KINDS[spec.kind]} parameter(s), got {len(spec.params)}"
        )
    p = spec.params
    if spec.kind == "Path":
        return path_graph(p[0])
    if spec.kind == "Cycle":
        return cycle_graph(p[0])
    if spec.kind == "Star":
        return star_graph(p[0])
    if spec.kind == "Spidey":
        return spidey_graph(p[0], p[1])
    if spec.kind == "BowtieB":
        return bowtie_graph()
    if spec.kind == "TFamily":
        return t_family_graph(p[0], p[1])
    if spec.kind == "RandomTree":
        return random_tree(p[0], p[1])
    if spec.kind == "RandomUnicyclic":
        return random_unicyclic(p[0], p[1])
    return random_cactus_vdc(p[0], p[1])


# canonical forms

def _rooted_code(t: Graph, v: int, parent: int | None) -> tuple:
    return tuple(sorted(_rooted_code(t, w, v) for w in t.neighbors(v) if w != parent))


def _tree_code(t: Graph) -> tuple:
    """Isomorphism-invariant code: the rooted code at the centroid (the
    lexicographically smaller one when there are two centroids)."""
    verts = sorted(t.vertices)
    if len(verts) == 1:
        return ()
    n = len(verts)
    size: dict[int, int] = {}
    order: list[tuple[int, int | None]] = []
    stack: list[tuple[int, int | None]] = [(verts[0], None)]
    while stack:
        v, parent = stack.pop()
        order.append((v, parent))
        for w in t.neighbors(v):
            if w != parent:
                stack.append((w, v))
    for v, parent in reversed(order):
        size[v] = 1 + sum(size[w] for w in t.neighbors(v) if w != parent)
    parent_of = {v: p for v, p in order}
    best_weight = n + 1
    centroids: list[int] = []
    for v in verts:
        weight = max(
            [size[w] for w in t.neighbors(v) if w != parent_of[v]] + [n - size[v]],
            default=0,
        )
        if weight < best_weight:
            best_weight = weight
            centroids = [v]
        elif weight == best_weight:
            centroids.append(v)
    return min(_rooted_code(t, c, None) for c in centroids)


def _refine(g: Graph) -> dict[int, int]:
    """Degree-based color refinement; stable partition of the vertices."""
    color = {v: g.degree(v) for v in g.vertices}
    while True:
        sig = {
            v: (color[v], tuple(sorted(color[w] for w in g.neighbors(v))))
            for v in g.vertices
        }
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in g.vertices}
        if new == color:
            return color
        color = new


def canonical_key(g: Graph) -> tuple:
    """A total invariant for connected graphs, equal exactly on isomorphic
    inputs.  Paths and cycles shortcut to their size; everything else takes
    the minimum edge list over all orderings compatible with the refined
    vertex partition."""
    if is_path_graph(g):
        return ("path", len(g.edges))
    if is_cycle_graph(g):
        return ("cycle", len(g.vertices))
    color = _refine(g)
    cells: dict[int, list[int]] = {}
    for v in sorted(g.vertices):
        cells.setdefault(color[v], []).append(v)
    blocks = []
    base = 0
    for c in sorted(cells):
        blocks.append((cells[c], base))
        base += len(cells[c])
    best: tuple | None = None
    for combo in itertools.product(
        *(itertools.permutations(cell) for cell, _ in blocks)
    ):
        mapping: dict[int, int] = {}
        for (cell, start), perm in zip(blocks, combo):
            for off, v in enumerate(perm):
                mapping[v] = start + off
        key = tuple(sorted(
            (mapping[u], mapping[v]) if mapping[u] < mapping[v] else (mapping[v], mapping[u])
            for u, v in g.edges
        ))
        if best is None or key < best:
            best = key
    return ("g", len(g.vertices), best)


# exhaustive enumeration

def enumerate_connected_graphs(max_edges: int) -> Iterator[Graph]:
    """All connected graphs with 1..max_edges edges, one per isomorphism
    class, in order of edge count.  Grows by adding an edge or a pendant
    vertex to smaller graphs, deduplicating by canonical key."""
    if max_edges > 8:
        raise TooLarge("connected-graph enumeration is capped at 8 edges")
    if max_edges < 1:
        return
    cur = {("path", 1): Graph([0, 1], [(0, 1)])}
    for m in range(1, max_edges + 1):
        for key in sorted(cur):
            yield cur[key]
        if m == max_edges:
            break
        nxt: dict[tuple, Graph] = {}
        for g in cur.values():
            n = len(g.vertices)
            for u in range(n):
                for v in range(u + 1, n):
                    if not g.has_edge(u, v):
                        h = g.with_edges([(u, v)])
                        nxt.setdefault(canonical_key(h), h)
            for u in range(n):
                h = g.with_edges([(u, n)])
                nxt.setdefault(canonical_key(h), h)
        cur = nxt


def enumerate_trees(max_vertices: int) -> Iterator[Graph]:
    """All trees with 1..max_vertices vertices, one per isomorphism class."""
    if max_vertices < 1:
        return
    cur = {(): Graph([0])}
    for n in range(1, max_vertices + 1):
        for code in sorted(cur):
            yield cur[code]
        if n == max_vertices:
            break
        nxt: dict[tuple, Graph] = {}
        for t in cur.values():
            for u in range(n):
                h = t.with_edges([(u, n)])
                nxt.setdefault(_tree_code(h), h)
        cur = nxt


def enumerate_shrubs(max_vertices: int) -> Iterator[Shrub]:
    """All shrubs (trees rooted at a leaf) with at most max_vertices
    vertices, one per rooted isomorphism class."""
    found: dict[tuple[int, tuple], Shrub] = {}
    for t in enumerate_trees(max_vertices):
        n = len(t.vertices)
        if n < 2:
            continue
        for v in sorted(t.vertices):
            if t.degree(v) == 1:
                key = (n, _rooted_code(t, v, None))
                if key not in found:
                    found[key] = rooted_shrub(t, v)
    for key in sorted(found):
        yield found[key]


def enumerate_unicyclic(max_vertices: int) -> Iterator[Graph]:
    """All connected graphs with exactly one cycle and at most max_vertices
    vertices, one per isomorphism class: trees plus one extra edge."""
    found: dict[tuple[int, tuple], Graph] = {}
    for t in enumerate_trees(max_vertices):
        n = len(t.vertices)
        if n < 3:
            continue
        for u in range(n):
            for v in range(u + 1, n):
                if not t.has_edge(u, v):
                    h = t.with_edges([(u, v)])
                    found.setdefault((n, canonical_key(h)), h)
    for key in sorted(found):
        yield found[key]
