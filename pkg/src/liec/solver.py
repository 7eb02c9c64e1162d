"""Exact decision and minimization by backtracking over edge colorings.

The search assigns colors along a DFS edge order, so every prefix touches a
connected part of each component.  Local irregularity is not monotone under
extension, so partial colorings are only pruned through vertices whose
incident edges are all colored: their color degrees are final and any edge
between two such vertices can be checked for good.  Color classes are
interchangeable, so a new color is only ever introduced as (max used) + 1;
that prunes permutations of the palette without losing any verdict.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import EdgeColoring, verify_liec
from .errors import BudgetExceeded
from .graph import Edge, Graph, edge


@dataclass(frozen=True)
class SolveReport:
    chi: int | None
    witness: EdgeColoring | None
    nodes_explored: int
    elapsed: float


def _edge_order(g: Graph) -> list[Edge]:
    """Edges listed when their first endpoint is reached by DFS from the
    smallest vertex of each component."""
    order: list[Edge] = []
    listed: set[Edge] = set()
    seen: set[int] = set()
    for start in sorted(g.vertices):
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                e = edge(v, w)
                if e not in listed:
                    listed.add(e)
                    order.append(e)
            for w in reversed(g.neighbors(v)):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return order


def _search(g: Graph, k: int) -> tuple[dict[Edge, int] | None, int]:
    """Find one k-liec assignment, or prove there is none.

    Returns (assignment or None, number of color assignments tried).
    """
    order = _edge_order(g)
    m = len(order)
    if m == 0:
        return {}, 0
    verts = sorted({u for e in order for u in e})
    vidx = {v: i for i, v in enumerate(verts)}
    ends = [(vidx[a], vidx[b]) for a, b in order]
    incident: list[list[int]] = [[] for _ in verts]
    for ei, (a, b) in enumerate(ends):
        incident[a].append(ei)
        incident[b].append(ei)
    deg = [[0] * k for _ in verts]
    left = [len(incident[i]) for i in range(len(verts))]
    colors = [-1] * m
    nodes = 0

    def finalized_ok(p: int) -> bool:
        for ei in incident[p]:
            c = colors[ei]
            a, b = ends[ei]
            q = b if a == p else a
            if left[q] == 0 and deg[p][c] == deg[q][c]:
                return False
        return True

    def rec(i: int, max_used: int) -> bool:
        nonlocal nodes
        if i == m:
            return True
        a, b = ends[i]
        limit = 1 if i == 0 else min(k, max_used + 2)
        for c in range(limit):
            nodes += 1
            colors[i] = c
            deg[a][c] += 1
            deg[b][c] += 1
            left[a] -= 1
            left[b] -= 1
            ok = (left[a] > 0 or finalized_ok(a)) and (left[b] > 0 or finalized_ok(b))
            if ok and rec(i + 1, max(max_used, c)):
                return True
            deg[a][c] -= 1
            deg[b][c] -= 1
            left[a] += 1
            left[b] += 1
        colors[i] = -1
        return False

    if rec(0, 0):
        return dict(zip(order, colors)), nodes
    return None, nodes


def exists_k_liec(g: Graph, k: int, budget: int = 20) -> EdgeColoring | None:
    """A verified k-liec of g, or None when none exists.

    budget caps the edge count the exhaustive search will accept; larger
    inputs raise BudgetExceeded, which is distinct from a definitive "no".
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if len(g.edges) > budget:
        raise BudgetExceeded(f"{len(g.edges)} edges exceeds the search budget {budget}")
    found, _ = _search(g, k)
    if found is None:
        return None
    witness = EdgeColoring(found)
    assert not verify_liec(g, witness), "search result must verify"
    return witness


def chromatic_index_irregular(g: Graph, k_max: int = 5, budget: int = 20) -> SolveReport:
    """Probe k = 1..k_max in order; chi is the first k that succeeds.

    chi None means no liec with at most k_max colors was found; the caller
    should consult the family recognizer to separate "needs more colors"
    from "not colorable at all".
    """
    if len(g.edges) > budget:
        raise BudgetExceeded(f"{len(g.edges)} edges exceeds the search budget {budget}")
    t0 = time.perf_counter()
    total = 0
    for k in range(1, k_max + 1):
        found, nodes = _search(g, k)
        total += nodes
        if found is not None:
            witness = EdgeColoring(found)
            assert not verify_liec(g, witness), "search result must verify"
            return SolveReport(k, witness, total, time.perf_counter() - t0)
    return SolveReport(None, None, total, time.perf_counter() - t0)
