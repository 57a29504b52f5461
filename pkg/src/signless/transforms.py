"""Graph transformations that push every signless Laplacian coefficient down,
plus the matching-number bookkeeping that goes with each of them.

All transformations keep the vertex count.  When two vertices are identified
the new vertex takes the smaller id and the freed id is reused for the vertex
the transformation adds, so results stay labelled ``0..n-1``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional, Union

from .graph_core import (
    Edge, FamilySpec, GraphError, LabeledGraph, Matching, UnicyclicGraph,
    _norm, all_maximum_matchings, as_graph, attachment_branches,
    build_family, incident_edges_excluding, matching_number, pendant_profile,
)
from .spectra import Comparison, coefficients, compare_coefficients, equality_indices


class PreconditionError(GraphError):
    """The transformation is not defined for this input."""


AnyGraph = Union[LabeledGraph, UnicyclicGraph]


@dataclass(frozen=True)
class TransformOutcome:
    source: AnyGraph
    result: AnyGraph
    matching_before: int
    matching_after: int
    comparison: Optional[Comparison] = None
    equal_at: Optional[frozenset[int]] = None

    def compared(self) -> TransformOutcome:
        """Fill in ``comparison`` (result vs source) and the equality indices."""
        a, b = coefficients(self.result), coefficients(self.source)
        return replace(self, comparison=compare_coefficients(a, b),
                       equal_at=frozenset(equality_indices(a, b)))


def _outcome(source: AnyGraph, edges: list[Edge]) -> TransformOutcome:
    graph = LabeledGraph.from_edges(as_graph(source).n, edges)
    result: AnyGraph = graph
    if isinstance(source, UnicyclicGraph):
        result = UnicyclicGraph(graph)
    return TransformOutcome(source, result, matching_number(source), matching_number(result))


def _require_edge(g: LabeledGraph, uv: Edge) -> tuple[int, int]:
    u, v = uv
    if not g.has_edge(u, v):
        raise PreconditionError(f"{uv} is not an edge")
    return u, v


def _rename(edges, mapping: dict[int, int]) -> list[Edge]:
    return [_norm(mapping.get(a, a), mapping.get(b, b)) for a, b in edges]


# ─────────────────────────────────────────────────────────────
#  Edge contractions
# ─────────────────────────────────────────────────────────────

def contract_add_pendant(g: UnicyclicGraph, uv: Edge) -> TransformOutcome:
    """Identify the ends of an off-cycle, non-pendant edge and hang a new
    pendant edge on the merged vertex."""
    u, v = _require_edge(g.graph, uv)
    if g.on_cycle(u, v):
        raise PreconditionError(f"{uv} lies on the cycle")
    if g.graph.degree(u) < 2 or g.graph.degree(v) < 2:
        raise PreconditionError(f"{uv} is a pendant edge")
    w, freed = min(u, v), max(u, v)
    rest = [e for e in g.edges() if e != _norm(u, v)]
    # uv is a bridge, so u and v share no neighbour and nothing collapses
    edges = _rename(rest, {freed: w}) + [(w, freed)]
    return _outcome(g, edges)


def contract_add_path2(g: UnicyclicGraph, uv: Edge, uprime: int) -> TransformOutcome:
    """Drop the pendant vertex ``uprime`` at ``u`` and the edge ``uv``, identify
    ``u`` with ``v`` and attach a pendant path of length 2 ending in ``uprime``."""
    u, v = _require_edge(g.graph, uv)
    graph = g.graph
    if g.on_cycle(u, v):
        raise PreconditionError(f"{uv} lies on the cycle")
    if graph.degree(u) < 3:
        raise PreconditionError(f"deg({u}) = {graph.degree(u)} < 3")
    if graph.degree(v) < 2:
        raise PreconditionError(f"deg({v}) = {graph.degree(v)} < 2")
    if uprime == v or not graph.has_edge(u, uprime) or graph.degree(uprime) != 1:
        raise PreconditionError(f"({u}, {uprime}) is not a pendant edge at {u}")
    w, freed = min(u, v), max(u, v)
    drop = {_norm(u, v), _norm(u, uprime)}
    rest = [e for e in g.edges() if e not in drop]
    edges = _rename(rest, {freed: w}) + [(w, freed), (freed, uprime)]
    return _outcome(g, edges)


def sigma_transform(g: AnyGraph, v: int, u: int) -> TransformOutcome:
    """Move every pendant neighbour of ``v`` onto ``u``; ``v`` must have no other
    non-pendant neighbours."""
    graph = as_graph(g)
    if not graph.has_edge(v, u):
        raise PreconditionError(f"{v} and {u} are not adjacent")
    others = [x for x in graph.neighbors(v) if x != u]
    if not others:
        raise PreconditionError(f"{v} has no pendant neighbours besides {u}")
    bad = [x for x in others if graph.degree(x) != 1]
    if bad:
        raise PreconditionError(f"neighbours {bad} of {v} are not pendant")
    moved = {_norm(v, x) for x in others}
    edges = [e for e in graph.edges() if e not in moved] + [_norm(u, x) for x in others]
    return _outcome(g, edges)


# ─────────────────────────────────────────────────────────────
#  Cycle shortening
# ─────────────────────────────────────────────────────────────

def _consecutive(g: UnicyclicGraph, u: int, v: Optional[int] = None) -> tuple[int, int, int]:
    """``u, v, w`` consecutive on the cycle; ``v`` defaults to the successor of
    ``u`` in the stored cycle order and fixes the direction otherwise."""
    if u not in g.cycle:
        raise PreconditionError(f"{u} is not on the cycle")
    i = g.cycle.index(u)
    k = g.girth
    step = 1
    if v is not None:
        if v == g.cycle[(i - 1) % k]:
            step = -1
        elif v != g.cycle[(i + 1) % k]:
            raise PreconditionError(f"{v} is not a cycle neighbour of {u}")
    return u, g.cycle[(i + step) % k], g.cycle[(i + 2 * step) % k]


def _require_family_shaped(g: UnicyclicGraph):
    prof = pendant_profile(g)
    if not prof.family_shaped:
        raise PreconditionError("attachments to the cycle must be pendant paths of length <= 2")
    return prof


def cycle_reduce(g: UnicyclicGraph, u: int, v: Optional[int] = None) -> TransformOutcome:
    """With ``u, v, w`` consecutive on the cycle (stored orientation), move all of
    ``w``'s neighbours except ``v``, and all of ``v``'s except ``u, w``, onto ``u``.
    The cycle shortens by two and ``u-v-w`` becomes a pendant path."""
    if g.n < 6:
        raise PreconditionError(f"need n >= 6, got {g.n}")
    if g.girth < 5:
        raise PreconditionError(f"need girth >= 5, got {g.girth}")
    _require_family_shaped(g)
    u, v, w = _consecutive(g, u, v)
    graph = g.graph
    moved = [(w, x) for x in graph.adj[w] if x != v] + \
            [(v, y) for y in graph.adj[v] if y not in (u, w)]
    drop = {_norm(*e) for e in moved}
    edges = [e for e in g.edges() if e not in drop] + [_norm(u, x) for _, x in moved]
    return _outcome(g, edges)


def _pendant_leaf(g: LabeledGraph, c: int, cycle: set[int]) -> Optional[int]:
    leaves = sorted(x for x in g.adj[c] if x not in cycle and g.degree(x) == 1)
    return leaves[0] if leaves else None


def cycle_reduce_with_pendants(g: UnicyclicGraph, u: int, v: Optional[int] = None) -> TransformOutcome:
    """For consecutive ``u, v, w`` each carrying a pendant edge (``v'``, ``w'``):
    delete ``vw``, join ``uw``, and move every other neighbour of ``v`` and ``w``
    (including ``w``'s far cycle neighbour) onto ``u``."""
    if g.n < 8:
        raise PreconditionError(f"need n >= 8, got {g.n}")
    if g.girth < 5:
        raise PreconditionError(f"need girth >= 5, got {g.girth}")
    _require_family_shaped(g)
    u, v, w = _consecutive(g, u, v)
    graph = g.graph
    cyc = set(g.cycle)
    leaves = [_pendant_leaf(graph, c, cyc) for c in (u, v, w)]
    if None in leaves:
        raise PreconditionError(f"each of {u}, {v}, {w} needs a pendant edge")
    _, vp, wp = leaves
    moved = [(w, x) for x in graph.adj[w] if x not in (v, wp)] + \
            [(v, y) for y in graph.adj[v] if y not in (u, w, vp)]
    drop = {_norm(*e) for e in moved} | {_norm(v, w)}
    edges = [e for e in g.edges() if e not in drop] + [_norm(u, x) for _, x in moved] + [_norm(u, w)]
    return _outcome(g, edges)


# ─────────────────────────────────────────────────────────────
#  Pendant redistribution on girth 3 and 4
# ─────────────────────────────────────────────────────────────

def _move_branches(g: UnicyclicGraph, src: int, dst: int, keep: int = 0) -> list[tuple[Edge, Edge]]:
    """Rewire all pendant paths at cycle vertex ``src`` to ``dst``, except
    ``keep`` pendant edges (single leaves), which stay."""
    moves = []
    kept = 0
    for path in attachment_branches(g, src):
        if len(path) == 1 and kept < keep:
            kept += 1
            continue
        moves.append((_norm(src, path[0]), _norm(dst, path[0])))
    if kept < keep:
        raise PreconditionError(f"cycle vertex {src} has fewer than {keep} pendant edges")
    return moves


def _apply_moves(g: UnicyclicGraph, moves) -> TransformOutcome:
    drop = {a for a, _ in moves}
    edges = [e for e in g.edges() if e not in drop] + [b for _, b in moves]
    return _outcome(g, edges)


def collect_pendants(g: UnicyclicGraph, target: int) -> TransformOutcome:
    """Move every pendant edge and length-2 path onto cycle position ``target``
    (an index into ``g.cycle``), giving G_g(sum s, sum t; 0,0; ...) up to rotation."""
    prof = pendant_profile(g)
    if not prof.family_shaped:
        raise PreconditionError("input is not of the form G_g(s1,t1;...)")
    if g.girth not in (3, 4):
        raise PreconditionError(f"girth must be 3 or 4, got {g.girth}")
    if not 0 <= target < g.girth:
        raise PreconditionError(f"target index {target} out of range")
    dst = g.cycle[target]
    moves = []
    for c in g.cycle:
        if c != dst:
            moves += _move_branches(g, c, dst)
    return _apply_moves(g, moves)


# variant -> (girth, t-pattern predicate on (t1..tg), {position: pendant edges kept}, target)
_VARIANTS: dict[str, tuple[int, Callable[[tuple[int, ...]], bool], dict[int, int], int]] = {
    "g3": (3, lambda t: all(x >= 1 for x in t), {0: 1, 1: 1}, 2),
    "g4_all_t": (4, lambda t: all(x >= 1 for x in t), {0: 1, 1: 1, 2: 1}, 3),
    "g4_one_zero": (4, lambda t: t[0] == 0 and all(x >= 1 for x in t[1:]), {1: 1, 3: 1}, 2),
    "g4_two_zero": (4, lambda t: t[0] == 0 and t[1] == 0 and t[2] >= 1 and t[3] >= 1, {2: 1}, 3),
}


def _orientations(k: int):
    for r in range(k):
        yield [(r + i) % k for i in range(k)]
    for r in range(k):
        yield [(r - i) % k for i in range(k)]


def redistribute_targets(spec: FamilySpec, variant: str) -> FamilySpec:
    """The target family of a redistribution, stated for a spec already in the
    variant's orientation."""
    _, _, keep, target = _VARIANTS[variant]
    s_tot = sum(s for s, _ in spec.attachments)
    t_tot = sum(t for _, t in spec.attachments)
    pairs = [(0, keep.get(i, 0)) for i in range(spec.g)]
    pairs[target] = (s_tot, t_tot - sum(keep.values()))
    return FamilySpec(spec.g, tuple(pairs))


def redistribute_keep_pendants(g: UnicyclicGraph, variant: str) -> TransformOutcome:
    """Keep one pendant edge at some cycle vertices and move everything else to
    a single cycle vertex.

    ``variant`` picks the hypothesis on (t1..tg) and the target:

    * ``g3``           all t_i >= 1      -> G3(0,1;0,1;S,T-2)
    * ``g4_all_t``     all t_i >= 1      -> G4(0,1;0,1;0,1;S,T-3)
    * ``g4_one_zero``  t1 = 0, others >= 1 -> G4(0,0;0,1;S,T-2;0,1)
    * ``g4_two_zero``  t1 = t2 = 0, t3, t4 >= 1 -> G4(0,0;0,0;0,1;S,T-1)

    The first rotation/reflection of the stored cycle whose t-pattern matches is used.
    """
    if variant not in _VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {sorted(_VARIANTS)}")
    girth, pred, keep, target = _VARIANTS[variant]
    prof = pendant_profile(g)
    if not prof.family_shaped:
        raise PreconditionError("input is not of the form G_g(s1,t1;...)")
    if g.girth != girth:
        raise PreconditionError(f"variant {variant} needs girth {girth}, got {g.girth}")
    spec = prof.family_spec()
    for order in _orientations(girth):
        ts = tuple(spec.attachments[j][1] for j in order)
        if pred(ts):
            break
    else:
        raise PreconditionError(f"t-pattern {[t for _, t in spec.attachments]} does not fit {variant}")
    cyc = [g.cycle[j] for j in order]
    dst = cyc[target]
    moves = []
    for pos, c in enumerate(cyc):
        if c != dst:
            moves += _move_branches(g, c, dst, keep=keep.get(pos, 0))
    return _apply_moves(g, moves)


def oriented_spec(g: UnicyclicGraph, variant: str) -> FamilySpec:
    """The input's family spec rotated into the orientation used by ``variant``."""
    girth, pred, _, _ = _VARIANTS[variant]
    spec = pendant_profile(g).family_spec()
    for order in _orientations(girth):
        att = tuple(spec.attachments[j] for j in order)
        if pred(tuple(t for _, t in att)):
            return FamilySpec(girth, att)
    raise PreconditionError(f"no orientation fits {variant}")


# ─────────────────────────────────────────────────────────────
#  Matching-number predictions
# ─────────────────────────────────────────────────────────────
#
# Each predicate returns the change |M(result)| - |M(G)| that the corresponding
# remark predicts, a set of admissible changes, or None when the remark says
# nothing about the instance.

def _t_counts(g: UnicyclicGraph, vertices) -> list[int]:
    cyc = set(g.cycle)
    return [sum(1 for x in g.graph.adj[c] if x not in cyc and g.graph.degree(x) == 1)
            for c in vertices]


def _exists_matching(g: AnyGraph, test: Callable[[Matching], bool]) -> bool:
    return any(test(m) for m in all_maximum_matchings(g))


def matching_preserved_contract_pendant(g: UnicyclicGraph, uv: Edge) -> Optional[set[int]]:
    """Contracting ``uv`` keeps |M| when some maximum matching avoids all other
    edges at ``u`` (or all other edges at ``v``)."""
    u, v = uv
    eu = incident_edges_excluding(g, u, uv)
    ev = incident_edges_excluding(g, v, uv)
    if _exists_matching(g, lambda m: not (m.edges & eu) or not (m.edges & ev)):
        return {0}
    return None


def matching_change_contract_path2(g: UnicyclicGraph, uv: Edge, uprime: int) -> set[int]:
    """The path-2 contraction raises |M| by at most one and never lowers it."""
    return {0, 1}


def matching_change_cycle_reduce(g: UnicyclicGraph, u: int, v: Optional[int] = None) -> Optional[set[int]]:
    """Predicted change from the pendant-edge pattern at ``u, v, w``.

    Cases that start from an assumed maximum matching only apply when such a
    matching exists; ``t_u = t_v = 0`` is claimed outright."""
    u, v, w = _consecutive(g, u, v)
    tu, tv, tw = _t_counts(g, (u, v, w))
    cyc = set(g.cycle)

    def has_pendant(m: Matching, c: int) -> bool:
        return any(c in e and (e[0] if e[1] == c else e[1]) not in cyc
                   and g.graph.degree(e[0] if e[1] == c else e[1]) == 1 for e in m.edges)

    if tu and tv and tw:
        if _exists_matching(g, lambda m: all(has_pendant(m, c) for c in (u, v, w))):
            return {-1}
        return None
    if tu == 0 and tv == 0:
        return {0}
    if (tu and tv and not tw) or (tv and tw and not tu):
        pair = (u, v) if tw == 0 else (v, w)
        if _exists_matching(g, lambda m: all(has_pendant(m, c) for c in pair)):
            return {0}
        return None
    if tv and not tu and not tw:
        if _exists_matching(g, lambda m: has_pendant(m, v)):
            return {1}
        return None
    return None


def matching_change_cycle_reduce_with_pendants(g: UnicyclicGraph, u: int, v: Optional[int] = None) -> set[int]:
    return {0}


def matching_change_collect(g: UnicyclicGraph) -> Optional[set[int]]:
    """Collecting pendants keeps |M| when girth 3 has some t_i = 0, or girth 4 has
    one positive t_i or positive t_i only on one opposite pair."""
    spec = pendant_profile(g).family_spec()
    ts = [t for _, t in spec.attachments]
    if spec.g == 3:
        return {0} if 0 in ts else None
    positive = [i for i, t in enumerate(ts) if t > 0]
    if len(positive) == 1 or positive in ([1, 3], [0, 2]):
        return {0}
    return None


def matching_change_redistribute(g: UnicyclicGraph, variant: str) -> set[int]:
    return {0}
