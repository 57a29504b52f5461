"""Graphs, the G_g(s1,t1;...;sg,tg) family notation, matchings, canonical forms
and exhaustive enumeration of unicyclic graphs.

Vertices are always ``0..n-1``.  Every graph object is immutable, so all the
functions here are safe to call from several threads or processes at once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

Edge = tuple[int, int]

DEFAULT_CANONICAL_BOUND = 11
DEFAULT_ENUMERATION_BOUND = 10


class GraphError(ValueError):
    """Raised when a graph violates the invariants an operation relies on."""


class FamilyNotationError(ValueError):
    """Raised for malformed ``G<g>(s,t;...)`` strings."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ─────────────────────────────────────────────────────────────
#  Graph types
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"vertex {u} out of range")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> LabeledGraph:
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adj))

    def edges(self) -> list[Edge]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def relabel(self, perm: Sequence[int]) -> LabeledGraph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return LabeledGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def with_edges(self, remove: Iterable[Edge] = (), add: Iterable[Edge] = ()) -> LabeledGraph:
        es = {_norm(*e) for e in self.edges()}
        for e in remove:
            e = _norm(*e)
            if e not in es:
                raise GraphError(f"cannot remove missing edge {e}")
            es.remove(e)
        for e in add:
            es.add(_norm(*e))
        return LabeledGraph.from_edges(self.n, sorted(es))


@dataclass(frozen=True)
class UnicyclicGraph:
    """A connected graph with exactly one cycle, stored in walk order."""

    graph: LabeledGraph
    cycle: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.cycle:
            object.__setattr__(self, "cycle", tuple(find_cycle(self.graph)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> UnicyclicGraph:
        return cls(LabeledGraph.from_edges(n, edges))

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def girth(self) -> int:
        return len(self.cycle)

    @property
    def odd(self) -> bool:
        return len(self.cycle) % 2 == 1

    def edges(self) -> list[Edge]:
        return self.graph.edges()

    def cycle_edges(self) -> set[Edge]:
        c = self.cycle
        return {_norm(c[i], c[(i + 1) % len(c)]) for i in range(len(c))}

    def on_cycle(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.cycle_edges()


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    def __len__(self) -> int:
        return len(self.edges)

    def saturates(self, v: int) -> bool:
        return any(v in e for e in self.edges)

    def is_valid_in(self, g: LabeledGraph) -> bool:
        used: set[int] = set()
        for u, v in self.edges:
            if not g.has_edge(u, v) or u in used or v in used:
                return False
            used.update((u, v))
        return True


def as_graph(g: LabeledGraph | UnicyclicGraph) -> LabeledGraph:
    return g.graph if isinstance(g, UnicyclicGraph) else g


# ─────────────────────────────────────────────────────────────
#  Family notation
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class FamilySpec:
    g: int
    attachments: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.g < 3:
            raise FamilyNotationError(f"girth must be at least 3, got {self.g}")
        if len(self.attachments) != self.g:
            raise FamilyNotationError(
                f"G{self.g} needs {self.g} (s,t) pairs, got {len(self.attachments)}")
        for s, t in self.attachments:
            if s < 0 or t < 0:
                raise FamilyNotationError(f"negative attachment count in ({s},{t})")

    @property
    def n(self) -> int:
        return self.g + sum(2 * s + t for s, t in self.attachments)

    def format(self) -> str:
        return f"G{self.g}(" + ";".join(f"{s},{t}" for s, t in self.attachments) + ")"

    def __str__(self) -> str:
        return self.format()


_FAMILY_RE = re.compile(r"^G(\d+)\((.*)\)$")
_PAIR_RE = re.compile(r"^(-?\d+),(-?\d+)$")


def parse_family(text: str) -> FamilySpec:
    """Parse ``"G3(0,0;0,0;0,3)"`` style notation (whitespace is ignored)."""
    compact = re.sub(r"\s+", "", text)
    m = _FAMILY_RE.match(compact)
    if not m:
        raise FamilyNotationError(f"not in G<g>(s,t;...) form: {text!r}")
    g = int(m.group(1))
    pairs = []
    for chunk in m.group(2).split(";"):
        pm = _PAIR_RE.match(chunk)
        if not pm:
            raise FamilyNotationError(f"bad (s,t) pair {chunk!r} in {text!r}")
        pairs.append((int(pm.group(1)), int(pm.group(2))))
    return FamilySpec(g, tuple(pairs))


def build_family(spec: FamilySpec) -> UnicyclicGraph:
    """Cycle ``0..g-1``, then per cycle vertex its length-2 paths followed by
    its pendant edges, in index order."""
    g = spec.g
    edges = [(i, (i + 1) % g) for i in range(g)]
    nxt = g
    for i, (s, t) in enumerate(spec.attachments):
        for _ in range(s):
            edges.append((i, nxt))
            edges.append((nxt, nxt + 1))
            nxt += 2
        for _ in range(t):
            edges.append((i, nxt))
            nxt += 1
    graph = LabeledGraph.from_edges(nxt, edges)
    return UnicyclicGraph(graph, tuple(range(g)))


def family_graph(text: str) -> UnicyclicGraph:
    return build_family(parse_family(text))


# ─────────────────────────────────────────────────────────────
#  Cycle and pendant structure
# ─────────────────────────────────────────────────────────────

def _two_core(g: LabeledGraph) -> set[int]:
    deg = g.degrees()
    alive = set(range(g.n))
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    return alive


def find_cycle(g: LabeledGraph | UnicyclicGraph) -> list[int]:
    """The unique cycle as a walk, starting at its smallest vertex and stepping
    to the smaller of that vertex's two cycle neighbours."""
    if isinstance(g, UnicyclicGraph):
        return list(g.cycle)
    if not g.is_connected() or g.num_edges != g.n:
        raise GraphError(
            f"not unicyclic: connected={g.is_connected()}, |V|={g.n}, |E|={g.num_edges}")
    core = _two_core(g)
    start = min(core)
    walk = [start]
    prev, cur = start, min(u for u in g.adj[start] if u in core)
    while cur != start:
        walk.append(cur)
        nxt = [u for u in g.adj[cur] if u in core and u != prev]
        # the 2-core of a connected unicyclic graph is a cycle: exactly one way on
        prev, cur = cur, nxt[0]
    return walk


def incident_edges_excluding(g: LabeledGraph | UnicyclicGraph, u: int, uv: Edge) -> set[Edge]:
    """All edges at ``u`` except ``uv`` (written E_uv^u in the literature)."""
    graph = as_graph(g)
    a, b = uv
    if not graph.has_edge(a, b):
        raise GraphError(f"{uv} is not an edge")
    if u not in (a, b):
        raise GraphError(f"vertex {u} is not an endpoint of {uv}")
    other = b if u == a else a
    return {_norm(u, x) for x in graph.adj[u] if x != other}


@dataclass(frozen=True)
class PendantProfile:
    """Per cycle position (stored cycle order): the pendant-path lengths hanging
    off that vertex, plus anything that is not a bare path."""

    cycle: tuple[int, ...]
    path_lengths: tuple[tuple[int, ...], ...]
    non_path_branches: tuple[int, ...]
    branch_vertices: dict[int, int]
    distance_to_cycle: dict[int, int]

    @property
    def family_shaped(self) -> bool:
        return not self.non_path_branches and all(
            length <= 2 for lens in self.path_lengths for length in lens)

    def family_spec(self) -> FamilySpec:
        if not self.family_shaped:
            raise GraphError("graph is not of the form G_g(s1,t1;...)")
        return FamilySpec(len(self.cycle), tuple(
            (lens.count(2), lens.count(1)) for lens in self.path_lengths))


def _follow_path(g: LabeledGraph, root: int, first: int) -> Optional[list[int]]:
    """Walk away from ``root`` through degree-2 vertices; return the path's
    vertices if it ends at a leaf, else ``None``."""
    path = [first]
    prev, cur = root, first
    while g.degree(cur) == 2:
        nxt = next(x for x in g.adj[cur] if x != prev)
        path.append(nxt)
        prev, cur = cur, nxt
    return path if g.degree(cur) == 1 else None


def pendant_profile(u: UnicyclicGraph) -> PendantProfile:
    g = u.graph
    cyc = set(u.cycle)
    dist = {v: 0 for v in u.cycle}
    frontier = list(u.cycle)
    while frontier:
        nxt = []
        for v in frontier:
            for x in g.adj[v]:
                if x not in dist:
                    dist[x] = dist[v] + 1
                    nxt.append(x)
        frontier = nxt
    lengths = []
    bad = []
    for c in u.cycle:
        lens = []
        for x in sorted(g.adj[c] - cyc):
            path = _follow_path(g, c, x)
            if path is None:
                bad.append(c)
            else:
                lens.append(len(path))
        lengths.append(tuple(sorted(lens, reverse=True)))
    branch = {v: dist[v] for v in range(g.n) if g.degree(v) >= 3}
    return PendantProfile(u.cycle, tuple(lengths), tuple(sorted(set(bad))), branch, dist)


def attachment_branches(u: UnicyclicGraph, c: int) -> list[list[int]]:
    """Vertex lists of the pendant paths at cycle vertex ``c`` (nearest first)."""
    g = u.graph
    cyc = set(u.cycle)
    out = []
    for x in sorted(g.adj[c] - cyc):
        path = _follow_path(g, c, x)
        if path is None:
            raise GraphError(f"branch at {c} through {x} is not a pendant path")
        out.append(path)
    return out


# ─────────────────────────────────────────────────────────────
#  Maximum matching
# ─────────────────────────────────────────────────────────────

def _mm_search(adj: dict[int, set[int]], best: list, current: list) -> None:
    adj = {v: set(a) for v, a in adj.items() if a}
    forced = []
    # a leaf can always be matched to its neighbour in some maximum matching
    while True:
        leaf = next((v for v, a in adj.items() if len(a) == 1), None)
        if leaf is None:
            break
        (nb,) = adj[leaf]
        forced.append(_norm(leaf, nb))
        for x in (leaf, nb):
            for y in adj.pop(x, ()):
                if y in adj:
                    adj[y].discard(x)
        adj = {v: a for v, a in adj.items() if a}
    current = current + forced
    if len(current) + len(adj) // 2 <= len(best[0]):
        return
    if not adj:
        best[0] = current
        return
    v = min(adj, key=lambda x: (len(adj[x]), x))
    for u in sorted(adj[v]):
        rest = {x: a - {u, v} for x, a in adj.items() if x not in (u, v)}
        _mm_search(rest, best, current + [_norm(u, v)])
    rest = {x: a - {v} for x, a in adj.items() if x != v}
    _mm_search(rest, best, current)


def _greedy_matching(g: LabeledGraph) -> list[Edge]:
    used: set[int] = set()
    out = []
    for u, v in g.edges():
        if u not in used and v not in used:
            used.update((u, v))
            out.append((u, v))
    return out


def maximum_matching(g: LabeledGraph | UnicyclicGraph) -> Matching:
    """Exact maximum-cardinality matching by branch and bound.

    Leaves are matched greedily (always safe); what remains is branched on a
    minimum-degree vertex.  Exponential in the worst case, immediate on the
    desk-scale unicyclic graphs this package works with.
    """
    graph = as_graph(g)
    best = [_greedy_matching(graph)]
    _mm_search({v: set(graph.adj[v]) for v in range(graph.n)}, best, [])
    return Matching(frozenset(best[0]))


def matching_number(g: LabeledGraph | UnicyclicGraph) -> int:
    return len(maximum_matching(g))


def all_maximum_matchings(g: LabeledGraph | UnicyclicGraph) -> list[Matching]:
    """Every maximum matching, by exhaustive search over edge subsets."""
    graph = as_graph(g)
    edges = graph.edges()
    found: list[frozenset[Edge]] = []
    best = 0

    def rec(i: int, used: frozenset[int], chosen: list[Edge]):
        nonlocal best, found
        if len(chosen) + (len(edges) - i) < best:
            return
        if i == len(edges):
            if len(chosen) > best:
                best, found = len(chosen), []
            if len(chosen) == best:
                found.append(frozenset(chosen))
            return
        u, v = edges[i]
        if u not in used and v not in used:
            rec(i + 1, used | {u, v}, chosen + [(u, v)])
        rec(i + 1, used, chosen)

    rec(0, frozenset(), [])
    return [Matching(m) for m in found]


# ─────────────────────────────────────────────────────────────
#  Canonical form
# ─────────────────────────────────────────────────────────────

def _refine(adj: tuple[frozenset[int], ...], colors: list[int]) -> list[int]:
    """Colour refinement; colours stay canonically ordered (ranks of signatures)."""
    n = len(adj)
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _code(g: LabeledGraph, order: list[int]) -> tuple[int, ...]:
    # order[v] = canonical position of v
    inv = [0] * g.n
    for v, p in enumerate(order):
        inv[p] = v
    bits = []
    for i in range(g.n):
        row = g.adj[inv[i]]
        bits.extend(1 if inv[j] in row else 0 for j in range(i + 1, g.n))
    return tuple(bits)


def canonical_labeling(g: LabeledGraph, bound: int = DEFAULT_CANONICAL_BOUND
                       ) -> tuple[list[int], bytes]:
    """Return ``(perm, code)``: ``g.relabel(perm)`` is the canonical representative
    and ``code`` its packed upper-triangle adjacency bits.

    The code is the lexicographic minimum over every labeling compatible with
    individualisation/refinement.  Interchangeable twins (same neighbourhood)
    are only individualised once, since swapping them is an automorphism.
    """
    if g.n > bound:
        raise GraphError(f"canonical form limited to n <= {bound}, got n={g.n}")
    adj = g.adj
    best: list = [None, None]

    def search(colors: list[int]):
        colors = _refine(adj, colors)
        k = len(set(colors))
        if k == g.n:
            code = _code(g, colors)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, colors
            return
        sizes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            sizes.setdefault(c, []).append(v)
        target = min(c for c, vs in sizes.items() if len(vs) > 1)
        cell = sizes[target]
        tried: list[int] = []
        for x in cell:
            if any(adj[x] - {y} == adj[y] - {x} for y in tried):
                continue
            tried.append(x)
            # split x off ahead of the rest of its cell
            search([2 * c + (1 if (c == target and v != x) else 0)
                    for v, c in enumerate(colors)])

    search([len(a) for a in adj])
    code_bits = best[0]
    packed = bytearray([g.n])
    for i in range(0, len(code_bits), 8):
        chunk = code_bits[i:i + 8]
        packed.append(sum(b << (7 - j) for j, b in enumerate(chunk)))
    return best[1], bytes(packed)


def canonical_form(g: LabeledGraph | UnicyclicGraph, bound: int = DEFAULT_CANONICAL_BOUND) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    return canonical_labeling(as_graph(g), bound)[1]


def canonical_graph(g: LabeledGraph, bound: int = DEFAULT_CANONICAL_BOUND) -> LabeledGraph:
    perm, _ = canonical_labeling(g, bound)
    return g.relabel(perm)


# ─────────────────────────────────────────────────────────────
#  Enumeration
# ─────────────────────────────────────────────────────────────

def rooted_level_sequences(n: int) -> Iterator[list[int]]:
    """Canonical level sequences of all rooted trees on ``n`` vertices
    (Beyer-Hedetniemi successor rule, root at level 0)."""
    if n <= 0:
        return
    seq = list(range(n))
    while True:
        yield list(seq)
        p = max((i for i in range(n) if seq[i] > 1), default=None)
        if p is None:
            return
        q = max(j for j in range(p) if seq[j] == seq[p] - 1)
        for i in range(p, n):
            seq[i] = seq[i - (p - q)]


def tree_from_levels(levels: Sequence[int]) -> LabeledGraph:
    edges = []
    stack: list[int] = []
    for v, lev in enumerate(levels):
        del stack[lev:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return LabeledGraph.from_edges(len(levels), edges)


@lru_cache(maxsize=None)
def free_trees(n: int) -> tuple[LabeledGraph, ...]:
    """One representative per isomorphism class of trees on ``n`` vertices."""
    seen: dict[bytes, LabeledGraph] = {}
    for levels in rooted_level_sequences(n):
        t = tree_from_levels(levels)
        perm, code = canonical_labeling(t, bound=max(n, DEFAULT_CANONICAL_BOUND))
        seen.setdefault(code, t.relabel(perm))
    return tuple(seen[c] for c in sorted(seen))


@lru_cache(maxsize=None)
def _unicyclic_classes(n: int) -> tuple[tuple[bytes, UnicyclicGraph], ...]:
    seen: dict[bytes, UnicyclicGraph] = {}
    bound = max(n, DEFAULT_CANONICAL_BOUND)
    for t in free_trees(n):
        for u, v in combinations(range(n), 2):
            if t.has_edge(u, v):
                continue
            h = LabeledGraph.from_edges(n, t.edges() + [(u, v)])
            perm, code = canonical_labeling(h, bound)
            if code not in seen:
                seen[code] = UnicyclicGraph(h.relabel(perm))
    return tuple((c, seen[c]) for c in sorted(seen))


def enumerate_unicyclic(n: int, girth_parity: Optional[str] = None,
                        matching: Optional[int] = None, girth: Optional[int] = None,
                        max_n: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[UnicyclicGraph]:
    """Yield one canonically labelled representative per isomorphism class of
    connected unicyclic graphs on ``n`` vertices, in canonical-code order.

    ``girth_parity`` is ``"odd"`` or ``"even"``.
    """
    if n < 3:
        raise GraphError(f"unicyclic graphs need n >= 3, got {n}")
    if n > max_n:
        raise GraphError(f"enumeration bound exceeded: n={n} > max_n={max_n}")
    if girth_parity not in (None, "odd", "even"):
        raise ValueError(f"girth_parity must be 'odd' or 'even', got {girth_parity!r}")
    for _, ug in _unicyclic_classes(n):
        if girth_parity is not None and ug.odd != (girth_parity == "odd"):
            continue
        if girth is not None and ug.girth != girth:
            continue
        if matching is not None and matching_number(ug) != matching:
            continue
        yield ug


# ─────────────────────────────────────────────────────────────
#  Constructions used by the recurrences
# ─────────────────────────────────────────────────────────────

def disjoint_join(g1: LabeledGraph, u: int, g2: LabeledGraph, v: int) -> LabeledGraph:
    """``G1|u : G2|v``: disjoint union plus the edge u-v (g2 shifted by g1.n)."""
    if not 0 <= u < g1.n or not 0 <= v < g2.n:
        raise GraphError("join vertices out of range")
    off = g1.n
    edges = g1.edges() + [(a + off, b + off) for a, b in g2.edges()] + [(u, v + off)]
    return LabeledGraph.from_edges(g1.n + g2.n, edges)


def attach_pendants(h: LabeledGraph, v: int, k: int) -> LabeledGraph:
    edges = h.edges() + [(v, h.n + i) for i in range(k)]
    return LabeledGraph.from_edges(h.n + k, edges)


def attach_paths2(h: LabeledGraph, v: int, k: int) -> LabeledGraph:
    edges = h.edges()
    for i in range(k):
        a = h.n + 2 * i
        edges += [(v, a), (a, a + 1)]
    return LabeledGraph.from_edges(h.n + 2 * k, edges)


def path_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> LabeledGraph:
    return LabeledGraph.from_edges(n, [(0, i) for i in range(1, n)])


# ─────────────────────────────────────────────────────────────
#  Edge-list text format
# ─────────────────────────────────────────────────────────────

def parse_edge_list(text: str) -> LabeledGraph:
    """First non-blank line ``n``, then one ``u v`` pair per line (0-based)."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise GraphError(f"expected 'u v', got {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"malformed edge list: {exc}") from exc
    return LabeledGraph.from_edges(n, edges)


def format_edge_list(g: LabeledGraph | UnicyclicGraph) -> str:
    graph = as_graph(g)
    return "\n".join([str(graph.n)] + [f"{u} {v}" for u, v in graph.edges()]) + "\n"


def read_edge_list(path: str | Path) -> LabeledGraph:
    return parse_edge_list(Path(path).read_text())
