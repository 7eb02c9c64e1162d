"""Polynomial-time constructions of locally irregular edge colorings.

Colors are 0, 1 and 2; a fourth color never appears here.  The pieces share
one playbook.  Shrubs (trees rooted at a leaf) always admit a 2-coloring
whose only possible defect sits on the root edge.  At a hub vertex the
shrubs hanging off it are merged by swapping colors 0 and 1 inside a chosen
subset, picked so every root edge color degree clears its far endpoint.
When that inversion search is blocked, the hub's edges are all painted with
the reserve color 2 and each neighbor component is recolored around the
seam.  Cycles and cacti peel off tree-shaped or smaller pieces until only
those tree tools remain.

Every public entry point verifies its result before returning it, and can
record which rules fired into a ConstructionTrace whose step fragments are
pairwise disjoint and union to the returned coloring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    EdgeColoring,
    aliec_status,
    color_degree,
    combine,
    invert,
    verify_liec,
)
from .errors import (
    ConstructionError,
    InTPrime,
    NotAShortLeg,
    NotASpidey,
    NotATree,
    NotColorable,
    NotUnicyclic,
    PreconditionViolated,
    UnknownVertex,
    WrongClass,
)
from .families import is_colorable, is_T_prime_member
from .graph import (
    Edge,
    Graph,
    Shrub,
    classify,
    cycles,
    edge,
    glue_at,
    is_cycle_graph,
    is_path_graph,
    is_tree,
    proper_end_cycles,
    rooted_shrub,
    shrubs_at,
)


# trace plumbing

@dataclass(frozen=True)
class TraceStep:
    rule: str
    detail: str
    assignment: dict[Edge, int]


class ConstructionTrace:
    """Ordered record of the construction rules that fired.

    Step assignments are pairwise disjoint and their union is the coloring
    the construction returned, so a trace can be replayed edge by edge.
    """

    def __init__(self):
        self.steps: list[TraceStep] = []

    def add(self, rule: str, detail: str, assignment: dict[Edge, int]) -> None:
        self.steps.append(TraceStep(rule, detail, dict(assignment)))

    def retint(self, start: int, mapping: dict[int, int]) -> None:
        """Apply a color permutation to every step from index `start` on.
        Used when a caller renames a finished sub-coloring."""
        for i in range(start, len(self.steps)):
            s = self.steps[i]
            self.steps[i] = TraceStep(
                s.rule, s.detail, {e: mapping.get(c, c) for e, c in s.assignment.items()}
            )


def _tstart(trace: ConstructionTrace | None) -> int:
    return len(trace.steps) if trace is not None else 0


def _tadd(trace, rule: str, detail: str, assignment: dict[Edge, int]) -> None:
    if trace is not None:
        trace.add(rule, detail, assignment)


def _tretint(trace, start: int, mapping: dict[int, int]) -> None:
    if trace is not None:
        trace.retint(start, mapping)


# shrub 2-colorings

_ALIEC_MEMO: dict[tuple, tuple[int, ...] | None] = {}


def _shrub_code_and_order(s: Shrub) -> tuple[tuple, list[Edge]]:
    """Shape code of the rooted tree plus a canonical preorder edge list.

    Children are visited sorted by (subtree code, vertex id), so two
    isomorphic shrubs list structurally matching edges at equal positions
    and can share one cached coloring.
    """
    t = s.tree
    code: dict[int, tuple] = {}

    def build(v: int, parent: int | None) -> tuple:
        code[v] = tuple(sorted(build(w, v) for w in t.neighbors(v) if w != parent))
        return code[v]

    build(s.root, None)
    order: list[Edge] = []

    def walk(v: int, parent: int | None) -> None:
        for w in sorted(
            (w for w in t.neighbors(v) if w != parent),
            key=lambda w: (code[w], w),
        ):
            order.append(edge(v, w))
            walk(w, v)

    walk(s.root, None)
    return code[s.root], order


def _two_color_search(s: Shrub, order: list[Edge], lax: bool) -> tuple[int, ...] | None:
    """Backtracking over {0,1} along the canonical order; the root edge is
    pinned to 0 (swapping colors globally loses nothing).  In lax mode the
    root edge is exempt from the degree check: since the root is a leaf, a
    root violation automatically leaves it the only 0-edge at its far end."""
    t = s.tree
    m = len(order)
    verts = sorted(t.vertices)
    vidx = {v: i for i, v in enumerate(verts)}
    ends = [(vidx[a], vidx[b]) for a, b in order]
    incident: list[list[int]] = [[] for _ in verts]
    for ei, (a, b) in enumerate(ends):
        incident[a].append(ei)
        incident[b].append(ei)
    deg = [[0, 0] for _ in verts]
    left = [len(incident[i]) for i in range(len(verts))]
    colors = [-1] * m
    exempt = 0 if lax else -1

    def finalized_ok(p: int) -> bool:
        for ei in incident[p]:
            if ei == exempt:
                continue
            c = colors[ei]
            a, b = ends[ei]
            q = b if a == p else a
            if left[q] == 0 and deg[p][c] == deg[q][c]:
                return False
        return True

    def rec(i: int) -> bool:
        if i == m:
            return True
        a, b = ends[i]
        for c in (0,) if i == 0 else (0, 1):
            colors[i] = c
            deg[a][c] += 1
            deg[b][c] += 1
            left[a] -= 1
            left[b] -= 1
            ok = (left[a] > 0 or finalized_ok(a)) and (left[b] > 0 or finalized_ok(b))
            if ok and rec(i + 1):
                return True
            deg[a][c] -= 1
            deg[b][c] -= 1
            left[a] += 1
            left[b] += 1
        colors[i] = -1
        return False

    return tuple(colors) if rec(0) else None


def shrub_2aliec(s: Shrub) -> EdgeColoring:
    """A 2-coloring of the shrub that is locally irregular everywhere except
    possibly on the root edge, preferring a fully irregular one.  The root
    edge always gets color 0."""
    code, order = _shrub_code_and_order(s)
    for mode in ("strict", "lax"):
        key = (code, mode)
        if key not in _ALIEC_MEMO:
            _ALIEC_MEMO[key] = _two_color_search(s, order, lax=(mode == "lax"))
        found = _ALIEC_MEMO[key]
        if found is not None:
            result = EdgeColoring(dict(zip(order, found)))
            assert aliec_status(s, result).tag != "Invalid"
            return result
    raise ConstructionError("every shrub admits a 2-aliec; the search must not fail")


def _anchor(s: Shrub) -> int:
    """The non-root endpoint of the root edge."""
    a, b = s.root_edge
    return b if a == s.root else a


def _c_value(s: Shrub, phi: EdgeColoring) -> int:
    """Color-0 degree of the root edge's far endpoint; 1 exactly when the
    coloring is proper at the root, 2 or more when it is irregular."""
    return color_degree(s.tree, phi, _anchor(s), 0)


# the inversion engine

def _invert_plan(cs: list[int]) -> set[int] | None:
    """Choose shrubs to swap colors 0/1 in, so that at the hub the kept root
    edges (color 0, hub degree k-s) and inverted ones (color 1, hub degree
    s) both differ from their far endpoint's matching color degree: kept
    shrubs need c != k-s, inverted ones need c != s.  Returns the smallest
    feasible inversion set by subset size, smallest indices first."""
    k = len(cs)
    for s in range(k + 1):
        must = [i for i, c in enumerate(cs) if c == k - s]
        if len(must) > s:
            continue
        if k - s == s:
            if must:
                continue
            chosen = [i for i, c in enumerate(cs) if c != s][:s]
        else:
            free = [i for i, c in enumerate(cs) if c != k - s and c != s]
            chosen = must + free[: s - len(must)]
        if len(chosen) != s:
            continue
        inv = set(chosen)
        if all((cs[i] != s) if i in inv else (cs[i] != k - s) for i in range(k)):
            return inv
    return None


def _merge_shrubs(cols: list[EdgeColoring], inv: set[int]) -> dict[Edge, int]:
    merged: dict[Edge, int] = {}
    for i, phi in enumerate(cols):
        psi = invert(phi, 0, 1) if i in inv else phi
        merged.update(psi.assignment)
    return merged


def _merge_at(t: Graph, v: int):
    shrubs = shrubs_at(t, v)
    cols = [shrub_2aliec(s) for s in shrubs]
    cs = [_c_value(s, phi) for s, phi in zip(shrubs, cols)]
    return shrubs, cols, cs, _invert_plan(cs)


@dataclass(frozen=True)
class ResistantReport:
    """Witness that the inversion search at `vertex` is blocked: the sorted
    anchor color degrees form one of the two resistant patterns."""

    vertex: int
    a_sequence: tuple[int, ...]
    shrubs: tuple[Shrub, ...]
    colorings: tuple[EdgeColoring, ...]


def shrub_based_coloring(t: Graph, v: int, trace: ConstructionTrace | None = None):
    """Merge fully irregular shrub colorings at v into a 2-liec of the tree,
    or report the resistant pattern that blocks the inversion search.

    Every shrub at v must admit a fully irregular 2-coloring; a shrub that
    is only proper at its root raises PreconditionViolated.
    """
    if not is_tree(t):
        raise NotATree("shrub merging is defined on trees")
    shrubs, cols, cs, plan = _merge_at(t, v)
    for s, phi in zip(shrubs, cols):
        if aliec_status(s, phi).tag != "Liec":
            raise PreconditionViolated(
                f"shrub at {_anchor(s)} admits no fully irregular 2-coloring"
            )
    if plan is None:
        seq = tuple(sorted(cs, reverse=True))
        assert seq in ((3, 2, 2), (4, 3, 3, 2)), f"unexpected blocked pattern {seq}"
        return ResistantReport(v, seq, tuple(shrubs), tuple(cols))
    merged = _merge_shrubs(cols, plan)
    result = EdgeColoring(merged)
    bad = verify_liec(t, result)
    assert not bad, f"merged shrub coloring must verify, got {bad}"
    _tadd(trace, "tree.2liec", f"hub={v}", merged)
    return result


def _tree_2liec(t: Graph, trace) -> EdgeColoring | None:
    """Try the inversion merge at a maximum-degree vertex; None if blocked.
    Proper shrubs are no obstacle here: the plan conditions treat c = 1
    exactly like any other anchor degree."""
    v = min(t.vertices, key=lambda u: (-t.degree(u), u))
    _, cols, _, plan = _merge_at(t, v)
    if plan is None:
        return None
    merged = _merge_shrubs(cols, plan)
    result = EdgeColoring(merged)
    bad = verify_liec(t, result)
    assert not bad, f"merged shrub coloring must verify, got {bad}"
    _tadd(trace, "tree.2liec", f"hub={v}", merged)
    return result


# trees

def tree_liec(t: Graph, trace: ConstructionTrace | None = None) -> EdgeColoring:
    """A locally irregular coloring of a tree with at most 3 colors, and at
    most 2 when some vertex has degree 5 or more.  Odd paths are the only
    trees with no such coloring."""
    if not is_tree(t):
        raise NotATree("input must be a connected acyclic graph")
    if is_path_graph(t) and len(t.edges) % 2 == 1:
        raise NotColorable("paths with an odd number of edges admit no coloring")
    all0 = EdgeColoring({e: 0 for e in t.edges}) if t.edges else EdgeColoring({})
    if not verify_liec(t, all0):
        _tadd(trace, "tree.locally-irregular", "", all0.assignment)
        return all0
    two = _tree_2liec(t, trace)
    if two is not None:
        return two
    hub = min(t.vertices, key=lambda u: (-t.degree(u), u))
    # the merge never fails at a hub of degree 5+, nor anywhere on a path
    assert 3 <= t.degree(hub) <= 4
    result = _mono_star(t, hub, trace)
    bad = verify_liec(t, result)
    assert not bad, f"three-color tree construction must verify, got {bad}"
    return result


def _mono_star(t: Graph, v: int, trace) -> EdgeColoring:
    """Color every edge at v with 2 and extend through each neighbor's
    component.  Valid whenever deg(v) >= 3: the extensions keep the 2-degree
    of every other vertex at most 2."""
    nbrs = t.neighbors(v)
    assert len(nbrs) >= 3
    star = {edge(v, w): 2 for w in nbrs}
    _tadd(trace, "tree.mono-star", f"center={v}", star)
    merged = dict(star)
    rest = t.without_vertices([v])
    for w in nbrs:
        comp = rest.component_of(w)
        if comp.edges:
            merged.update(_spidey_extend(comp, w, trace))
    return EdgeColoring(merged)


def _spidey_extend(comp: Graph, w: int, trace) -> dict[Edge, int]:
    """Color the tree `comp` so it composes with one outside edge at w
    colored 2 whose other endpoint has 2-degree at least 3.

    The inversion merge at w is tried first.  When blocked by a single
    proper shrub, that shrub's root edge joins color 2 and the rest merge
    without it.  When blocked with every shrub irregular, the anchor degree
    pattern is (3,2,2) or (4,3,3,2) and a fixed repaint handles each.
    """
    shrubs, cols, cs, plan = _merge_at(comp, w)
    k = len(shrubs)
    if plan is not None:
        merged = _merge_shrubs(cols, plan)
        _tadd(trace, "spidey.2liec", f"leg={w}", merged)
        return merged
    proper = [
        i for i, (s, phi) in enumerate(zip(shrubs, cols))
        if aliec_status(s, phi).tag == "ProperAliec"
    ]
    if len(proper) == 1:
        j = proper[0]
        rest_idx = [i for i in range(k) if i != j]
        sub_plan = _invert_plan([cs[i] for i in rest_idx])
        assert sub_plan is not None, "dropping the proper shrub unblocks the merge"
        merged = {}
        for pos, i in enumerate(rest_idx):
            psi = invert(cols[i], 0, 1) if pos in sub_plan else cols[i]
            merged.update(psi.assignment)
        moved = cols[j].with_color(shrubs[j].root_edge, 2)
        merged.update(moved.assignment)
        rule = (
            "spidey.odd-path"
            if is_path_graph(comp) and len(comp.edges) % 2 == 1
            else "spidey.case3.recolor-root"
        )
        _tadd(trace, rule, f"leg={w}", merged)
        return merged
    assert not proper, "two or more proper shrubs never block the merge"
    order = sorted(range(k), key=lambda i: (-cs[i], i))
    seq = tuple(cs[i] for i in order)
    if seq == (3, 2, 2):
        parts = [
            cols[order[0]].renamed({0: 2, 2: 0}),
            invert(cols[order[1]], 0, 1),
            cols[order[2]],
        ]
        rule = "spidey.case4.seq-3-2-2"
    elif seq == (4, 3, 3, 2):
        parts = [
            cols[order[0]],
            cols[order[1]].renamed({0: 2, 2: 0}),
            cols[order[2]],
            invert(cols[order[3]], 0, 1),
        ]
        rule = "spidey.case4.seq-4-3-3-2"
    else:
        raise ConstructionError(f"unexpected resistant pattern {seq}")
    merged = {}
    for part in parts:
        merged.update(part.assignment)
    _tadd(trace, rule, f"leg={w}", merged)
    return merged


def _tree_liec_mono_at(t: Graph, v: int, trace) -> EdgeColoring:
    """A liec of the tree t in which every edge at v has color 2.

    For deg(v) >= 3 this is the monochromatic star construction.  For
    deg(v) = 2 the call sites guarantee a pendant neighbor at v, which
    forces both of v's edges to share a color in any liec; that color is
    then renamed to 2.
    """
    if t.degree(v) >= 3:
        return _mono_star(t, v, trace)
    assert t.degree(v) == 2
    assert any(t.degree(w) == 1 for w in t.neighbors(v))
    start = _tstart(trace)
    result = tree_liec(t, trace)
    pair = {result[edge(v, w)] for w in t.neighbors(v)}
    assert len(pair) == 1, "a pendant neighbor forces both hub edges onto one color"
    mono = pair.pop()
    if mono != 2:
        mapping = {mono: 2, 2: mono}
        result = result.renamed(mapping)
        _tretint(trace, start, mapping)
    return result


# spideys

def _spidey_center(h: Graph) -> int:
    if not is_tree(h):
        raise NotASpidey("a spidey is a tree")
    centers = [v for v in h.vertices if h.degree(v) >= 3]
    if len(centers) != 1:
        raise NotASpidey("need exactly one vertex of degree 3 or more")
    c = centers[0]
    covered = {c} | set(h.neighbors(c))
    for w in h.neighbors(c):
        covered.update(h.neighbors(w))
    if covered != h.vertices:
        raise NotASpidey("every vertex must lie within two steps of the center")
    return c


def spidey_glue(
    h: Graph, leg: int, k: Graph, attach: int, trace: ConstructionTrace | None = None
) -> EdgeColoring:
    """A 3-color liec of the graph obtained by identifying `attach` in the
    tree k with the short leg `leg` of the spidey h (see glue_at).  The
    spidey keeps color 2 everywhere; the glued tree is recolored around the
    seam."""
    c = _spidey_center(h)
    if leg not in h.vertices or h.degree(leg) != 1 or not h.has_edge(c, leg):
        raise NotAShortLeg("glue point must be a pendant neighbor of the center")
    if not is_tree(k):
        raise NotATree("the glued piece must be a tree")
    if attach not in k.vertices:
        raise UnknownVertex(f"vertex {attach} is not in the glued tree")
    g = glue_at(h, leg, k, attach)
    star = {e: 2 for e in h.edges}
    _tadd(trace, "spidey.mono-center", f"center={c}", star)
    merged = dict(star)
    comp = g.without_edges(h.edges).component_of(leg)
    if comp.edges:
        merged.update(_spidey_extend(comp, leg, trace))
    result = EdgeColoring(merged)
    bad = verify_liec(g, result)
    assert not bad, f"glued spidey coloring must verify, got {bad}"
    return result


# unicyclic graphs

def unicyclic_3liec(g: Graph, trace: ConstructionTrace | None = None) -> EdgeColoring:
    """A liec with at most 3 colors of a connected graph with exactly one
    cycle.  Raises InTPrime for the non-colorable members: odd cycles and
    the triangle-chain family."""
    cls = classify(g)
    if cls.cycle_count != 1:
        raise NotUnicyclic(f"expected exactly one cycle, found {cls.cycle_count}")
    if is_T_prime_member(g):
        raise InTPrime("this graph admits no locally irregular coloring")
    cyc = cycles(g)[0]
    if is_cycle_graph(g):
        result = _even_cycle(g, cyc, trace)
    elif len(cyc) == 3:
        result = _unicyclic_triangle(g, cyc, trace)
    else:
        result = _unicyclic_wide(g, cyc, trace)
    bad = verify_liec(g, result)
    assert not bad, f"unicyclic construction must verify, got {bad}"
    return result


def _even_cycle(g: Graph, cyc: list[int], trace) -> EdgeColoring:
    """aabb blocks around the cycle; a final cc pair absorbs length 2 mod 4."""
    n = len(cyc)
    if n % 4 == 0:
        block = [0, 0, 1, 1] * (n // 4)
    else:
        block = [0, 0, 1, 1] * ((n - 2) // 4) + [2, 2]
    assign = {edge(cyc[i], cyc[(i + 1) % n]): block[i] for i in range(n)}
    _tadd(trace, "unicyclic.even-cycle", f"length={n}", assign)
    return EdgeColoring(assign)


def _pendant_even_path(comp: Graph, at: int) -> bool:
    """comp is a path with an even number of edges hanging from `at`; a
    single vertex counts as the empty path."""
    if not comp.edges:
        return True
    if not is_path_graph(comp) or len(comp.edges) % 2 == 1:
        return False
    return comp.degree(at) == 1


def _unicyclic_triangle(g: Graph, cyc: list[int], trace) -> EdgeColoring:
    """Triangle with trees: split off the tree at a chosen corner together
    with one triangle edge, and color the rest as a shrub rooted there."""
    ce = [edge(cyc[i], cyc[(i + 1) % 3]) for i in range(3)]
    stripped = g.without_edges(ce)
    u1 = None
    for cand in sorted(cyc):
        if not _pendant_even_path(stripped.component_of(cand), cand):
            u1 = cand
            break
    assert u1 is not None, "all corners pendant even paths puts g in the family"
    u2, u3 = sorted(set(cyc) - {u1})
    t1 = stripped.component_of(u1)
    g1 = t1.with_edges([(u1, u2)], extra_vertices=[u2])
    g0 = g.without_edges(g1.edges).component_of(u1)
    s0 = rooted_shrub(g0, u1)
    phi0 = shrub_2aliec(s0)
    if aliec_status(s0, phi0).tag == "Liec":
        _tadd(trace, "unicyclic.triangle", f"corner={u1}", phi0.assignment)
        psi = _tree_liec_mono_at(g1, u1, trace)
        return combine([(g0, phi0), (g1, psi)])
    # proper root: hand the root edge u1u3 over to the monochromatic side
    phi0m = phi0.without_edges([s0.root_edge])
    g1p = g1.with_edges([(u1, u3)], extra_vertices=[u3])
    _tadd(trace, "unicyclic.triangle.proper-root", f"corner={u1}", phi0m.assignment)
    psi = _tree_liec_mono_at(g1p, u1, trace)
    return combine([(g0.without_edges([s0.root_edge]), phi0m), (g1p, psi)])


def _unicyclic_wide(g: Graph, cyc: list[int], trace) -> EdgeColoring:
    """Cycle length at least 4 with trees attached."""
    n = len(cyc)
    u1 = min(cyc, key=lambda v: (-g.degree(v), v))
    d = g.degree(u1)
    assert d >= 3, "a bare cycle never reaches this branch"
    i1 = cyc.index(u1)
    cn = sorted((cyc[i1 - 1], cyc[(i1 + 1) % n]))
    if d >= 4:
        # keep one cycle edge with the shrub, make a star of the rest
        u2, u3 = cn
        e1 = {edge(u1, w) for w in g.neighbors(u1)} - {edge(u1, u2)}
        g0 = g.without_edges(e1).component_of(u2)
        s0 = rooted_shrub(g0, u1)
        phi0 = shrub_2aliec(s0)
        if aliec_status(s0, phi0).tag == "Liec":
            _tadd(trace, "unicyclic.girth4.case1", f"root={u1}", phi0.assignment)
        else:
            phi0 = phi0.with_color(s0.root_edge, 2)
            _tadd(trace, "unicyclic.girth4.case1.proper-root", f"root={u1}", phi0.assignment)
        g1 = g.without_edges(g0.edges).component_of(u1)
        phi1 = _mono_star(g1, u1, trace)
        return combine([(g0, phi0), (g1, phi1)])
    # d == 3: the star at u1 swallows both cycle edges; the rest hangs as a
    # shrub from the next cycle vertex u2
    u2 = cn[0]
    i2 = cyc.index(u2)
    (u3,) = {cyc[i2 - 1], cyc[(i2 + 1) % n]} - {u1}
    e1 = {edge(u1, w) for w in g.neighbors(u1)}
    rest = g.without_edges(e1).component_of(u2)
    g1 = g.without_edges(rest.edges).component_of(u1)
    if g.degree(u2) == 2:
        s0 = rooted_shrub(rest, u2)
        phi0 = shrub_2aliec(s0)
        if aliec_status(s0, phi0).tag == "Liec":
            _tadd(trace, "unicyclic.girth4.case2.deg2", f"root={u2}", phi0.assignment)
        else:
            phi0 = phi0.with_color(s0.root_edge, 2)
            _tadd(trace, "unicyclic.girth4.case2.deg2.proper-root", f"root={u2}", phi0.assignment)
        phi1 = _mono_star(g1, u1, trace)
        return combine([(rest, phi0), (g1, phi1)])
    assert g.degree(u2) == 3, "cycle vertices next to a degree-3 hub stay small"
    # u2 carries a tree edge too: two shrubs meet at u2
    sh = shrubs_at(rest, u2)
    assert len(sh) == 2
    s_cycle = next(s for s in sh if s.root_edge == edge(u2, u3))
    s_tree = next(s for s in sh if s is not s_cycle)
    phi_c = shrub_2aliec(s_cycle)
    phi_t = shrub_2aliec(s_tree)
    liec_c = aliec_status(s_cycle, phi_c).tag == "Liec"
    liec_t = aliec_status(s_tree, phi_t).tag == "Liec"
    if liec_c and liec_t:
        part = {**phi_c.assignment, **invert(phi_t, 0, 1).assignment}
        rule = "unicyclic.girth4.case2.deg3.both-liec"
    elif not liec_c and not liec_t:
        part = {**phi_c.assignment, **phi_t.assignment}
        rule = "unicyclic.girth4.case2.deg3.both-proper"
    else:
        keep, move = (phi_c, (phi_t, s_tree)) if liec_c else (phi_t, (phi_c, s_cycle))
        moved = move[0].with_color(move[1].root_edge, 2)
        part = {**keep.assignment, **moved.assignment}
        rule = "unicyclic.girth4.case2.deg3.one-proper"
    _tadd(trace, rule, f"junction={u2}", part)
    phi1 = _mono_star(g1, u1, trace)
    return combine([(rest, EdgeColoring(part)), (g1, phi1)])


# cacti with vertex-disjoint cycles

class _Reroute(Exception):
    """Internal: this end cycle leads to a non-colorable remainder; try the
    next candidate."""


def cactus_vdc_3liec(g: Graph, trace: ConstructionTrace | None = None) -> EdgeColoring:
    """A liec with at most 3 colors of a connected cactus whose cycles are
    pairwise vertex disjoint.  Trees and unicyclic graphs are accepted as
    degenerate cases.  Raises InTPrime for non-colorable inputs and
    WrongClass when cycles share a vertex or the input is not a cactus."""
    cls = classify(g)
    if cls.tag in ("Cactus", "General"):
        raise WrongClass(f"cycles must be pairwise vertex disjoint, got {cls.tag}")
    if is_T_prime_member(g):
        raise InTPrime("this graph admits no locally irregular coloring")
    result = _cactus(g, trace)
    bad = verify_liec(g, result)
    assert not bad, f"cactus construction must verify, got {bad}"
    return result


def _cactus(g: Graph, trace) -> EdgeColoring:
    cls = classify(g)
    if cls.cycle_count == 0:
        _tadd(trace, "cactus.base.tree", "", {})
        return tree_liec(g, trace)
    if cls.cycle_count == 1:
        _tadd(trace, "cactus.base.unicyclic", "", {})
        return unicyclic_3liec(g, trace)
    for info in proper_end_cycles(g):
        attempt = ConstructionTrace() if trace is not None else None
        try:
            result = _reduce_end_cycle(g, info.cycle, info.root_vertex, attempt)
        except _Reroute:
            continue
        if trace is not None:
            trace.steps.extend(attempt.steps)
        return result
    raise ConstructionError("no proper end cycle admitted the reduction")


def _reduce_end_cycle(g: Graph, cyc: list[int], u1: int, trace) -> EdgeColoring:
    n = len(cyc)
    i1 = cyc.index(u1)
    u2, u3 = sorted((cyc[i1 - 1], cyc[(i1 + 1) % n]))
    # v: the one neighbor outside the cycle behind which the other cycles live
    v = None
    for w in g.neighbors(u1):
        if w in (u2, u3):
            continue
        side = g.without_edges([edge(u1, w)]).component_of(w)
        if len(side.edges) >= len(side.vertices):
            v = w
            break
    assert v is not None, "a proper end cycle roots at the branch toward the rest"
    if g.degree(u1) == 3:
        return _end_cycle_deg3(g, cyc, u1, u2, u3, v, trace)
    return _end_cycle_deg4(g, cyc, u1, u2, u3, v, trace)


def _end_cycle_deg3(g, cyc, u1, u2, u3, v, trace) -> EdgeColoring:
    g1 = g.without_edges([edge(u1, v)]).component_of(u1)
    g0 = g.without_edges(g1.edges).component_of(u1)
    g0p = g0.with_edges([(u1, u2)], extra_vertices=[u2])
    if is_colorable(g0p):
        g1t = g1.without_edges([edge(u1, u2)])
        s1 = rooted_shrub(g1t, u1)
        phi1 = shrub_2aliec(s1)
        if aliec_status(s1, phi1).tag == "Liec":
            start = _tstart(trace)
            phi0 = _cactus(g0p, trace)
            mono = phi0[edge(u1, u2)]
            assert phi0[edge(u1, v)] == mono, "the pendant pair shares one color"
            if mono != 2:
                mapping = {mono: 2, 2: mono}
                phi0 = phi0.renamed(mapping)
                _tretint(trace, start, mapping)
            _tadd(trace, "cactus.case1.G0prime-colorable", f"root={u1}", phi1.assignment)
            return combine([(g0p, phi0), (g1t, phi1)])
        # proper shrub root: add u1u3 to the pendant side as well
        g0pp = g0p.with_edges([(u1, u3)], extra_vertices=[u3])
        assert is_colorable(g0pp), "three pendant edges at u1 leave the family"
        start = _tstart(trace)
        phi0 = _cactus(g0pp, trace)
        mono = phi0[edge(u1, u2)]
        assert phi0[edge(u1, u3)] == mono, "the two leaf edges at u1 share one color"
        if mono != 2:
            mapping = {mono: 2, 2: mono}
            phi0 = phi0.renamed(mapping)
            _tretint(trace, start, mapping)
        phi1m = phi1.without_edges([s1.root_edge])
        _tadd(
            trace,
            "cactus.case1.G0prime-colorable-proper-root",
            f"root={u1}",
            phi1m.assignment,
        )
        return combine([(g0pp, phi0), (g1t.without_edges([s1.root_edge]), phi1m)])
    if is_colorable(g1):
        assert is_colorable(g0), "one pendant edge less than a family member"
        start0 = _tstart(trace)
        phi0 = _cactus(g0, trace)
        c0 = phi0[edge(u1, v)]
        if c0 != 2:
            mapping = {c0: 2, 2: c0}
            phi0 = phi0.renamed(mapping)
            _tretint(trace, start0, mapping)
        start1 = _tstart(trace)
        phi1 = unicyclic_3liec(g1, trace)
        pair = {phi1[edge(u1, u2)], phi1[edge(u1, u3)]}
        if 2 in pair:
            target = min({0, 1} - pair)
            mapping = {2: target, target: 2}
            phi1 = phi1.renamed(mapping)
            _tretint(trace, start1, mapping)
        _tadd(trace, "cactus.case1.G1-colorable", f"root={u1}", {})
        return combine([(g0, phi0), (g1, phi1)])
    # both sides blocked: g1 must be a bare odd cycle (a family member here
    # would have made the whole graph non-colorable)
    if not is_cycle_graph(g1):
        raise ConstructionError("blocked side is neither colorable nor a bare odd cycle")
    n = len(cyc)
    assert n >= 5, "a bare blocked triangle would put the whole graph in the family"
    i3 = cyc.index(u3)
    (w,) = {cyc[i3 - 1], cyc[(i3 + 1) % n]} - {u1}
    g0pp = g0.with_edges([(u1, u2), (u1, u3), (u3, w)], extra_vertices=[u2, u3, w])
    assert is_colorable(g0pp), "the doubled corner leaves the family"
    start = _tstart(trace)
    phi0 = _cactus(g0pp, trace)
    m3 = phi0[edge(u3, w)]
    assert phi0[edge(u1, u3)] == m3, "the pendant pair at u3 shares one color"
    if m3 != 0:
        mapping = {m3: 0, 0: m3}
        phi0 = phi0.renamed(mapping)
        _tretint(trace, start, mapping)
    if phi0[edge(u1, u2)] == 2:
        mapping = {2: 1, 1: 2}
        phi0 = phi0.renamed(mapping)
        _tretint(trace, start, mapping)
    # walk the remaining cycle arc from u2 to w and pair-color it 2,2,1,1,...
    arc = [u2]
    prev = u1
    while arc[-1] != w:
        i = cyc.index(arc[-1])
        (nxt,) = {cyc[i - 1], cyc[(i + 1) % n]} - {prev}
        prev = arc[-1]
        arc.append(nxt)
    pattern = {
        edge(arc[j], arc[j + 1]): 2 if (j // 2) % 2 == 0 else 1
        for j in range(len(arc) - 1)
    }
    _tadd(trace, "cactus.case1.G1-odd-cycle", f"root={u1}", pattern)
    return combine([(g0pp, phi0), (Graph(arc, pattern.keys()), EdgeColoring(pattern))])


def _end_cycle_deg4(g, cyc, u1, u2, u3, v, trace) -> EdgeColoring:
    d = g.degree(u1)
    star = {edge(u1, w) for w in g.neighbors(u1)}
    stripped = g.without_edges(star)
    g0 = stripped.component_of(v).with_edges([(u1, v)], extra_vertices=[u1])
    if not is_colorable(g0):
        raise _Reroute()
    g1 = stripped.component_of(u2).with_edges([(u1, u2)], extra_vertices=[u1])
    assert u3 in g1.vertices
    s1 = rooted_shrub(g1, u1)
    phi1 = shrub_2aliec(s1)
    liec1 = aliec_status(s1, phi1).tag == "Liec"
    t_nbrs = sorted(w for w in g.neighbors(u1) if w not in (u2, u3, v))
    hook = Graph([u1, u3], [(u1, u3)])
    for w in t_nbrs:
        comp = stripped.component_of(w)
        hook = hook.with_edges(
            [(u1, w), *comp.edges], extra_vertices=comp.vertices
        )
    if is_path_graph(hook) and len(hook.edges) % 2 == 1:
        # the leftover star plus its subtree is an odd path from u3
        assert d == 4 and len(t_nbrs) == 1
        u4 = t_nbrs[0]
        s2 = rooted_shrub(hook, u3)
        phi2 = shrub_2aliec(s2)
        assert aliec_status(s2, phi2).tag == "ProperAliec"
        assert phi2[edge(u1, u4)] == 1, "the odd path coloring is forced"
        if liec1:
            g0pp = g0.with_edges([(u1, u3)], extra_vertices=[u3])
            if not is_colorable(g0pp):
                raise _Reroute()
            start = _tstart(trace)
            phi0 = _cactus(g0pp, trace)
            mono = phi0[edge(u1, u3)]
            assert phi0[edge(u1, v)] == mono, "the pendant pair shares one color"
            if mono != 2:
                mapping = {mono: 2, 2: mono}
                phi0 = phi0.renamed(mapping)
                _tretint(trace, start, mapping)
            phi2m = phi2.without_edges([s2.root_edge])
            frag = {**phi1.assignment, **phi2m.assignment}
            _tadd(trace, "cactus.case2.oddpath.liec", f"root={u1}", frag)
            return combine(
                [(g0pp, phi0), (g1, phi1), (hook.without_edges([s2.root_edge]), phi2m)]
            )
        start = _tstart(trace)
        phi0 = _cactus(g0, trace)
        c0 = phi0[edge(u1, v)]
        if c0 != 0:
            mapping = {c0: 0, 0: c0}
            phi0 = phi0.renamed(mapping)
            _tretint(trace, start, mapping)
        moved1 = phi1.with_color(s1.root_edge, 2)
        moved2 = phi2.with_color(s2.root_edge, 2)
        frag = {**moved1.assignment, **moved2.assignment}
        _tadd(trace, "cactus.case2.oddpath.proper", f"root={u1}", frag)
        return combine([(g0, phi0), (g1, moved1), (hook, moved2)])
    # the leftover star extends to a colorable tree around u1
    start = _tstart(trace)
    phi0 = _cactus(g0, trace)
    c0 = phi0[edge(u1, v)]
    if c0 != 0:
        mapping = {c0: 0, 0: c0}
        phi0 = phi0.renamed(mapping)
        _tretint(trace, start, mapping)
    if liec1:
        phi2 = _tree_liec_mono_at(hook, u1, trace)
        phi1i = invert(phi1, 0, 1)
        _tadd(trace, "cactus.case2.colorable.liec", f"root={u1}", phi1i.assignment)
        return combine([(g0, phi0), (g1, phi1i), (hook, phi2)])
    hookp = hook.with_edges([(u1, u2)], extra_vertices=[u2])
    phi2 = _tree_liec_mono_at(hookp, u1, trace)
    phi1m = phi1.without_edges([s1.root_edge])
    _tadd(trace, "cactus.case2.colorable.proper", f"root={u1}", phi1m.assignment)
    return combine([(g0, phi0), (g1.without_edges([s1.root_edge]), phi1m), (hookp, phi2)])
