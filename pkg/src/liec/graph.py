"""Undirected simple graphs and the structural queries used everywhere else.

Vertex ids are plain integers.  parse_edge_list compacts arbitrary input ids
to 0..n-1 and keeps the original spelling in Graph.labels.  Subgraph helpers
(components, shrubs, deletions) preserve the parent's ids, so edge colorings
of the pieces can later be combined without any translation step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DisconnectedInput,
    DuplicateEdge,
    FewerThanTwoCycles,
    LoopEdge,
    MalformedLine,
    NotACactus,
    NotATree,
    NotCactusVdc,
    UnknownVertex,
)

Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Normalize an edge to an ordered pair (small id first)."""
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple graph.

    labels, when present, maps internal ids back to the ids used in the
    parsed input.  It is carried for reporting only and ignored by equality.
    """

    __slots__ = ("vertices", "edges", "labels", "_adj")

    def __init__(self, vertices, edges=(), labels=None):
        self.vertices = frozenset(vertices)
        es = set()
        for u, v in edges:
            e = edge(u, v)
            if e[0] not in self.vertices or e[1] not in self.vertices:
                raise UnknownVertex(f"edge {u}-{v} uses an undeclared vertex")
            es.add(e)
        self.edges = frozenset(es)
        self.labels = dict(labels) if labels else None
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = {v: tuple(sorted(ns)) for v, ns in adj.items()}

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph(n={len(self.vertices)}, m={len(self.edges)})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return edge(u, v) in self.edges

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def with_edges(self, extra_edges, extra_vertices=()) -> Graph:
        vs = set(self.vertices) | set(extra_vertices)
        for u, v in extra_edges:
            vs.add(u)
            vs.add(v)
        return Graph(vs, set(self.edges) | {edge(u, v) for u, v in extra_edges})

    def without_edges(self, drop) -> Graph:
        gone = {edge(u, v) for u, v in drop}
        return Graph(self.vertices, self.edges - gone)

    def without_vertices(self, drop) -> Graph:
        gone = set(drop)
        keep = self.vertices - gone
        return Graph(keep, {e for e in self.edges if e[0] in keep and e[1] in keep})

    def induced(self, keep) -> Graph:
        ks = set(keep)
        return Graph(ks, {e for e in self.edges if e[0] in ks and e[1] in ks})

    def is_connected(self) -> bool:
        if len(self.vertices) <= 1:
            return True
        start = min(self.vertices)
        seen = {start}
        stack = [start]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def component_of(self, v: int) -> Graph:
        """The connected component containing v, with induced edges."""
        if v not in self.vertices:
            raise UnknownVertex(f"vertex {v} not in graph")
        seen = {v}
        stack = [v]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return self.induced(seen)


@dataclass(frozen=True)
class Shrub:
    """A tree rooted at one of its leaves; root_edge is the unique root edge."""

    tree: Graph
    root: int
    root_edge: Edge


@dataclass(frozen=True)
class GraphClass:
    tag: str
    girth: int | None
    cycle_count: int


@dataclass(frozen=True)
class EndCycleInfo:
    cycle: tuple[int, ...]
    root_vertex: int


def parse_edge_list(text: str) -> Graph:
    """Parse lines of "u v" into a graph with dense ids 0..n-1.

    Blank lines and lines starting with '#' are skipped.  Original ids are
    kept in Graph.labels.
    """
    raw_edges: list[tuple[int, int]] = []
    seen: set[Edge] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise MalformedLine(f"line {lineno}: expected two vertex ids, got {stripped!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(f"line {lineno}: expected integers, got {stripped!r}") from None
        if u < 0 or v < 0:
            raise MalformedLine(f"line {lineno}: vertex ids must be nonnegative")
        if u == v:
            raise LoopEdge(f"line {lineno}: loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"line {lineno}: edge {u}-{v} repeated")
        seen.add(e)
        raw_edges.append(e)
    ids = sorted({u for e in raw_edges for u in e})
    to_dense = {orig: i for i, orig in enumerate(ids)}
    labels = {i: orig for orig, i in to_dense.items()}
    return Graph(range(len(ids)), [(to_dense[u], to_dense[v]) for u, v in raw_edges], labels=labels)


def format_edge_list(g: Graph) -> str:
    """Edge-list text for g, one "u v" line per edge, using original labels if any."""
    lab = g.labels or {}
    lines = []
    for u, v in sorted(g.edges):
        a, b = lab.get(u, u), lab.get(v, v)
        if a > b:
            a, b = b, a
        lines.append(f"{a} {b}")
    return "\n".join(lines) + ("\n" if lines else "")


def connected_components(g: Graph) -> list[Graph]:
    """Maximal connected subgraphs, ordered by their smallest vertex id."""
    remaining = set(g.vertices)
    comps = []
    while remaining:
        comp = g.component_of(min(remaining))
        comps.append(comp)
        remaining -= comp.vertices
    return comps


def is_tree(g: Graph) -> bool:
    return g.is_connected() and len(g.edges) == len(g.vertices) - 1


def is_path_graph(g: Graph) -> bool:
    """True iff g is a path with at least one edge."""
    if not is_tree(g) or len(g.edges) < 1:
        return False
    return g.max_degree() <= 2


def is_cycle_graph(g: Graph) -> bool:
    if len(g.vertices) < 3 or len(g.edges) != len(g.vertices):
        return False
    return g.is_connected() and all(g.degree(v) == 2 for v in g.vertices)


def path_endpoints(g: Graph) -> tuple[int, int]:
    """The two leaves of a path graph, smaller id first."""
    ends = sorted(v for v in g.vertices if g.degree(v) == 1)
    if len(ends) != 2 or not is_path_graph(g):
        raise NotATree(f"not a path: {g!r}")
    return ends[0], ends[1]


def _fundamental_cycles(g: Graph) -> list[list[int]] | None:
    """Fundamental cycles of a DFS forest, or None if two of them share an edge.

    For a cactus the fundamental cycles of any DFS are exactly its cycles and
    are pairwise edge disjoint; conversely edge-disjoint fundamental cycles
    force every cycle of the graph to be one of them.  So a None result means
    "not a cactus".
    """
    parent: dict[int, int | None] = {}
    depth: dict[int, int] = {}
    cycles: list[list[int]] = []
    used: set[Edge] = set()
    for start in sorted(g.vertices):
        if start in parent:
            continue
        parent[start] = None
        depth[start] = 0
        stack = [(start, iter(g.neighbors(start)))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if w not in parent:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    stack.append((w, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent[v] and depth[w] < depth[v]:
                    # back edge v->w closes one fundamental cycle
                    cyc = [v]
                    x = v
                    while x != w:
                        x = parent[x]  # type: ignore[assignment]
                        cyc.append(x)
                    for i in range(len(cyc)):
                        e = edge(cyc[i], cyc[(i + 1) % len(cyc)])
                        if e in used:
                            return None
                        used.add(e)
                    cycles.append(cyc)
            if not advanced:
                stack.pop()
    return cycles


def _normalize_cycle(cyc: list[int]) -> tuple[int, ...]:
    """Rotate to the smallest vertex and walk toward its smaller neighbor."""
    i = cyc.index(min(cyc))
    n = len(cyc)
    fwd, bwd = cyc[(i + 1) % n], cyc[(i - 1) % n]
    out = [cyc[i]]
    step = 1 if fwd < bwd else -1
    for j in range(1, n):
        out.append(cyc[(i + step * j) % n])
    return tuple(out)


def cycles(g: Graph) -> list[tuple[int, ...]]:
    """All cycles of a cactus, each as an ordered vertex tuple."""
    found = _fundamental_cycles(g)
    if found is None:
        raise NotACactus("cycles share an edge")
    return sorted((_normalize_cycle(c) for c in found), key=lambda c: (c[0], len(c), c))


def _bfs_girth(g: Graph) -> int | None:
    best: int | None = None
    for s in g.vertices:
        dist = {s: 0}
        par = {s: None}
        queue = [s]
        qi = 0
        while qi < len(queue):
            v = queue[qi]
            qi += 1
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    par[w] = v
                    queue.append(w)
                elif par[v] != w:
                    cand = dist[v] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def classify(g: Graph) -> GraphClass:
    """Most specific structural class of a connected graph with edges."""
    if len(g.edges) == 0:
        raise DisconnectedInput("graph has no edges")
    if not g.is_connected():
        raise DisconnectedInput("graph is not connected")
    n, m = len(g.vertices), len(g.edges)
    if is_path_graph(g):
        tag = "EvenPath" if m % 2 == 0 else "OddPath"
        return GraphClass(tag, None, 0)
    if is_cycle_graph(g):
        tag = "EvenCycle" if n % 2 == 0 else "OddCycle"
        return GraphClass(tag, n, 1)
    if m == n - 1:
        return GraphClass("Tree", None, 0)
    cyc = _fundamental_cycles(g)
    if cyc is None:
        return GraphClass("General", _bfs_girth(g), m - n + 1)
    girth = min(len(c) for c in cyc)
    if len(cyc) == 1:
        return GraphClass("Unicyclic", girth, 1)
    vdc = True
    seen_vs: set[int] = set()
    for c in cyc:
        if seen_vs & set(c):
            vdc = False
            break
        seen_vs |= set(c)
    return GraphClass("CactusVertexDisjointCycles" if vdc else "Cactus", girth, len(cyc))


def shrubs_at(t: Graph, v: int) -> list[Shrub]:
    """The shrubs of a tree at v, one per neighbor, in neighbor-id order.

    Shrub i is the component of t - v containing neighbor w_i plus the edge
    v w_i, rooted at v.  Their edge sets partition E(t).
    """
    if not is_tree(t):
        raise NotATree("shrubs are defined on trees")
    if v not in t.vertices:
        raise UnknownVertex(f"vertex {v} not in tree")
    rest = t.without_vertices([v])
    out = []
    for w in t.neighbors(v):
        comp = rest.component_of(w)
        tree = Graph(comp.vertices | {v}, set(comp.edges) | {edge(v, w)})
        out.append(Shrub(tree=tree, root=v, root_edge=edge(v, w)))
    return out


def rooted_shrub(tree: Graph, root: int) -> Shrub:
    """Wrap a tree as a shrub rooted at the leaf `root`."""
    if not is_tree(tree):
        raise NotATree("a shrub is a rooted tree")
    if root not in tree.vertices:
        raise UnknownVertex(f"vertex {root} not in tree")
    ns = tree.neighbors(root)
    if len(ns) != 1:
        raise NotATree(f"shrub root {root} must be a leaf")
    return Shrub(tree=tree, root=root, root_edge=edge(root, ns[0]))


def _is_cyclic(g: Graph) -> bool:
    return len(g.edges) >= len(g.vertices) and len(g.vertices) > 0


def proper_end_cycles(g: Graph) -> list[EndCycleInfo]:
    """All proper end-cycles of a vertex-disjoint-cycles cactus, by root id.

    A cycle C qualifies when G - V(C) has at most one cyclic component; its
    root vertex is the C-vertex whose component of G - E(C) is cyclic.
    """
    if not g.is_connected():
        raise NotCactusVdc("graph is not connected")
    try:
        all_cycles = cycles(g)
    except NotACactus:
        raise NotCactusVdc("not a cactus") from None
    seen_vs: set[int] = set()
    for c in all_cycles:
        if seen_vs & set(c):
            raise NotCactusVdc("cycles share a vertex")
        seen_vs |= set(c)
    if len(all_cycles) < 2:
        raise FewerThanTwoCycles(f"found {len(all_cycles)} cycle(s)")
    out = []
    for c in all_cycles:
        removed_vs = g.without_vertices(c)
        cyclic = sum(_is_cyclic(comp) for comp in connected_components(removed_vs))
        if cyclic > 1:
            continue
        removed_es = g.without_edges(edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))
        roots = [u for u in c if _is_cyclic(removed_es.component_of(u))]
        assert len(roots) == 1, "a proper end-cycle has exactly one root vertex here"
        out.append(EndCycleInfo(cycle=c, root_vertex=roots[0]))
    out.sort(key=lambda info: info.root_vertex)
    return out


def find_proper_end_cycle(g: Graph) -> EndCycleInfo:
    """The proper end-cycle whose root vertex has the smallest id."""
    return proper_end_cycles(g)[0]


def glue_at(h: Graph, leg: int, k: Graph, attach: int) -> Graph:
    """Identify vertex `attach` of k with vertex `leg` of h.

    When attach == leg and the vertex sets share nothing else, ids are kept
    as they are.  Otherwise every other vertex of k is relabeled to a fresh
    id above max(V(h)), in sorted order, so the result is deterministic.
    """
    if leg not in h.vertices:
        raise UnknownVertex(f"vertex {leg} not in first graph")
    if attach not in k.vertices:
        raise UnknownVertex(f"vertex {attach} not in second graph")
    if attach == leg and h.vertices & k.vertices == {leg}:
        relabel = {v: v for v in k.vertices}
    else:
        base = max(h.vertices) + 1
        relabel = {attach: leg}
        for i, v in enumerate(sorted(k.vertices - {attach})):
            relabel[v] = base + i
    new_edges = {edge(relabel[u], relabel[v]) for u, v in k.edges}
    return Graph(h.vertices | set(relabel.values()), set(h.edges) | new_edges)
