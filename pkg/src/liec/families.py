"""Recognition of the recursive family of non-colorable graphs.

The family T is generated from a triangle by repeatedly picking a degree-2
vertex that lies on a triangle and either hanging an even-length path on it,
or hanging an odd-length path whose far end becomes a vertex of a brand new
triangle.  T_prime adds the odd paths and odd cycles; the connected graphs
with no locally irregular edge coloring are exactly the members of T_prime.

Membership is decided by peeling attachments off in reverse and replaying
the recorded decomposition as a self-check.  Useful structural facts: every
member has odd edge count and maximum degree 3, path interiors have degree
2, and every attachment anchor ends up with degree exactly 3 on a triangle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedInput, TooLarge
from .graph import Graph, edge, is_cycle_graph, is_path_graph


@dataclass(frozen=True)
class PathAttachment:
    """One generative step: a path hung on `anchor`, optionally ending in a
    new triangle (triangle[0] is the path's far end)."""

    anchor: int
    path: tuple[int, ...]
    triangle: tuple[int, int, int] | None


@dataclass(frozen=True)
class TDecomposition:
    base_triangle: tuple[int, int, int]
    attachments: tuple[PathAttachment, ...]


def _replay(dec: TDecomposition) -> tuple[set[int], set[tuple[int, int]]] | None:
    """Rebuild the graph a decomposition describes, enforcing every rule.

    Returns (vertices, edges) or None when some step is ungrammatical.
    """
    base = dec.base_triangle
    if len(set(base)) != 3:
        return None
    vs = set(base)
    es = {edge(base[0], base[1]), edge(base[0], base[2]), edge(base[1], base[2])}
    deg = {v: 2 for v in base}
    on_triangle = set(base)
    for att in dec.attachments:
        a = att.anchor
        if a not in vs or deg[a] != 2 or a not in on_triangle:
            return None
        path = att.path
        if len(path) < 2 or path[0] != a:
            return None
        length = len(path) - 1
        fresh = path[1:]
        if len(set(fresh)) != len(fresh) or any(v in vs for v in fresh):
            return None
        if att.triangle is None:
            if length % 2 != 0:
                return None
        else:
            if length % 2 != 1:
                return None
            f, t1, t2 = att.triangle
            if f != path[-1] or len({f, t1, t2}) != 3:
                return None
            if t1 in vs or t2 in vs or t1 in fresh[:-1] or t2 in fresh[:-1]:
                return None
        for v in fresh:
            vs.add(v)
            deg[v] = 0
        for i in range(length):
            es.add(edge(path[i], path[i + 1]))
            deg[path[i]] += 1
            deg[path[i + 1]] += 1
        if att.triangle is not None:
            f, t1, t2 = att.triangle
            vs.update((t1, t2))
            deg[t1] = 0
            deg[t2] = 0
            for x, y in ((f, t1), (f, t2), (t1, t2)):
                es.add(edge(x, y))
                deg[x] += 1
                deg[y] += 1
            on_triangle.update((f, t1, t2))
    return vs, es


def _walk_chain(adj: dict[int, set[int]], start: int, first: int):
    """Follow degree-2 vertices from start via first until the degree differs.

    Returns (path, end_degree) where path runs from start to the stopping
    vertex inclusive.
    """
    path = [start, first]
    prev, cur = start, first
    while len(adj[cur]) == 2:
        nxt = next(w for w in adj[cur] if w != prev)
        path.append(nxt)
        prev, cur = cur, nxt
    return path, len(adj[cur])


def is_T_member(g: Graph) -> TDecomposition | None:
    """A decomposition witnessing membership in T, or None."""
    if not g.is_connected():
        raise DisconnectedInput("family membership needs a connected graph")
    if len(g.edges) % 2 == 0 or g.max_degree() > 3 or len(g.vertices) < 3:
        return None
    adj = {v: set(g.neighbors(v)) for v in g.vertices}

    def drop(v: int) -> None:
        for w in adj[v]:
            adj[w].discard(v)
        del adj[v]

    def anchor_ok(a: int, via: int) -> bool:
        # the anchor keeps degree 3 and its other two neighbors form a triangle
        if len(adj[a]) != 3:
            return False
        o1, o2 = sorted(adj[a] - {via})
        return o2 in adj[o1]

    peeled: list[PathAttachment] = []
    while True:
        if len(adj) == 3:
            vs = sorted(adj)
            if all(len(adj[v]) == 2 for v in vs):
                base = (vs[0], vs[1], vs[2])
                break
            return None
        leaves = sorted(v for v in adj if len(adj[v]) == 1)
        if leaves:
            leaf = leaves[0]
            path, end_deg = _walk_chain(adj, leaf, next(iter(adj[leaf])))
            if end_deg != 3:
                return None
            anchor = path[-1]
            if (len(path) - 1) % 2 != 0 or not anchor_ok(anchor, path[-2]):
                return None
            for v in path[:-1]:
                drop(v)
            peeled.append(PathAttachment(anchor, tuple(reversed(path)), None))
            continue
        # no leaves: only triangles joined by odd connectors may remain
        if any(len(ns) not in (2, 3) for ns in adj.values()):
            return None
        terminal = None
        for u in sorted(adj):
            for w in sorted(adj[u]):
                if w < u:
                    continue
                for x in sorted(adj[u] & adj[w]):
                    tri = {u, w, x}
                    degs = sorted(len(adj[v]) for v in tri)
                    if degs == [2, 2, 3]:
                        terminal = tri
                        break
                if terminal:
                    break
            if terminal:
                break
        if terminal is None:
            return None
        f = next(v for v in terminal if len(adj[v]) == 3)
        t1, t2 = sorted(terminal - {f})
        out = next(iter(adj[f] - terminal))
        path, end_deg = _walk_chain(adj, f, out)
        if end_deg != 3:
            return None
        anchor = path[-1]
        if (len(path) - 1) % 2 != 1 or not anchor_ok(anchor, path[-2]):
            return None
        drop(t1)
        drop(t2)
        for v in path[:-1]:
            drop(v)
        peeled.append(PathAttachment(anchor, tuple(reversed(path)), (f, t1, t2)))

    dec = TDecomposition(base, tuple(reversed(peeled)))
    rebuilt = _replay(dec)
    assert rebuilt is not None, "peeled decomposition must replay"
    vs, es = rebuilt
    assert vs == set(g.vertices) and es == set(g.edges), "replay must rebuild the input"
    return dec


def is_T_prime_member(g: Graph) -> bool:
    """True for odd paths, odd cycles and members of T."""
    if not g.is_connected():
        raise DisconnectedInput("family membership needs a connected graph")
    if is_path_graph(g):
        return len(g.edges) % 2 == 1
    if is_cycle_graph(g):
        return len(g.vertices) % 2 == 1
    return is_T_member(g) is not None


def is_colorable(g: Graph) -> bool:
    """Whether some locally irregular edge coloring of g exists at all."""
    return not is_T_prime_member(g)


def exhaustive_colorable(g: Graph, max_edges: int = 9) -> bool:
    """Decide colorability by trying every partition of E(g) into classes.

    Independent of the family recognizer on purpose, so the two can be
    cross-checked.  Guarded by max_edges because Bell numbers grow fast.
    """
    m = len(g.edges)
    if m > max_edges:
        raise TooLarge(f"{m} edges is above the exhaustive limit {max_edges}")
    if m == 0:
        return True
    edges = sorted(g.edges)

    def blocks_ok(assign: list[int]) -> bool:
        deg: dict[tuple[int, int], int] = {}
        for e, b in zip(edges, assign):
            for v in e:
                key = (b, v)
                deg[key] = deg.get(key, 0) + 1
        return all(deg[(b, u)] != deg[(b, v)] for (u, v), b in zip(edges, assign))

    # restricted growth strings enumerate set partitions exactly once each
    assign = [0] * m
    while True:
        if blocks_ok(assign):
            return True
        i = m - 1
        while i >= 1 and assign[i] > max(assign[:i]):
            i -= 1
        if i == 0:
            return False
        assign[i] += 1
        for j in range(i + 1, m):
            assign[j] = 0
