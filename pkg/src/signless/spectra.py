"""Signless Laplacian coefficients, their two combinatorial expansions,
eigenvalues and incidence energy.

The coefficient vector phi_0..phi_n is defined through

    det(xI - Q(G)) = sum_{i=0}^{n} (-1)^i phi_i x^(n-i),    Q = D + A,

so phi_0 = 1 and every phi_i is a nonnegative integer.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from itertools import combinations
from math import factorial, prod
from typing import Iterator, Sequence

from .graph_core import LabeledGraph, UnicyclicGraph, GraphError, as_graph
from .polynomial import IntPolynomial

Matrix = list[list[int]]


# ─────────────────────────────────────────────────────────────
#  Matrices and exact characteristic polynomials
# ─────────────────────────────────────────────────────────────

def signless_laplacian(g: LabeledGraph | UnicyclicGraph) -> Matrix:
    graph = as_graph(g)
    n = graph.n
    m = [[0] * n for _ in range(n)]
    for v in range(n):
        m[v][v] = graph.degree(v)
        for u in graph.adj[v]:
            m[v][u] = 1
    return m


def laplacian(g: LabeledGraph | UnicyclicGraph) -> Matrix:
    graph = as_graph(g)
    n = graph.n
    m = [[0] * n for _ in range(n)]
    for v in range(n):
        m[v][v] = graph.degree(v)
        for u in graph.adj[v]:
            m[v][u] = -1
    return m


def delete_row_col(m: Matrix, v: int) -> Matrix:
    if not 0 <= v < len(m):
        raise GraphError(f"vertex {v} out of range")
    return [[x for j, x in enumerate(row) if j != v] for i, row in enumerate(m) if i != v]


def bareiss_det(m: Matrix) -> int:
    """Determinant by fraction-free Gaussian elimination; every division is exact."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def char_poly(m: Matrix) -> IntPolynomial:
    """Exact det(xI - M).

    det(xI - M) is sampled at x = 0..n with Bareiss elimination, then
    interpolated in the Newton (falling factorial) basis.  An integer polynomial
    has integer Newton coefficients Delta^k f(0) / k!, so the divisions are exact.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("char_poly needs a square matrix")
    values = []
    for x in range(n + 1):
        values.append(bareiss_det([[(x if i == j else 0) - m[i][j] for j in range(n)]
                                   for i in range(n)]))
    # forward differences
    newton = []
    diffs = values
    for k in range(n + 1):
        q, r = divmod(diffs[0], factorial(k))
        if r:
            raise ArithmeticError("non-integer Newton coefficient; matrix not integral?")
        newton.append(q)
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    result = IntPolynomial()
    basis = IntPolynomial([1])
    for k, c in enumerate(newton):
        result = result + basis * c
        basis = basis * IntPolynomial([-k, 1])
    return result


def signless_char_poly(g: LabeledGraph | UnicyclicGraph) -> IntPolynomial:
    return char_poly(signless_laplacian(g))


# ─────────────────────────────────────────────────────────────
#  Coefficient vectors
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class CoefficientVector:
    n: int
    phi: tuple[int, ...]

    def __post_init__(self):
        if len(self.phi) != self.n + 1:
            raise ValueError(f"need {self.n + 1} coefficients, got {len(self.phi)}")

    def __getitem__(self, i: int) -> int:
        return self.phi[i]

    def __iter__(self):
        return iter(self.phi)

    def __len__(self) -> int:
        return len(self.phi)

    @classmethod
    def from_char_poly(cls, p: IntPolynomial) -> CoefficientVector:
        n = p.degree
        if n < 0 or p[n] != 1:
            raise ValueError("expected a monic polynomial")
        return cls(n, tuple((-1) ** i * p[n - i] for i in range(n + 1)))

    def to_poly(self) -> IntPolynomial:
        return IntPolynomial((-1) ** (self.n - k) * self.phi[self.n - k] for k in range(self.n + 1))

    def to_json(self) -> list[str]:
        return [str(c) for c in self.phi]

    @classmethod
    def from_json(cls, data) -> CoefficientVector:
        if isinstance(data, str):
            data = json.loads(data)
        phi = tuple(int(c) for c in data)
        return cls(len(phi) - 1, phi)


def coefficients(g: LabeledGraph | UnicyclicGraph) -> CoefficientVector:
    vec = CoefficientVector.from_char_poly(signless_char_poly(g))
    neg = [i for i, c in enumerate(vec.phi) if c < 0]
    if neg:
        # Q is positive semidefinite, so this means an arithmetic bug
        raise ArithmeticError(f"negative signless Laplacian coefficients at {neg}: {vec.phi}")
    return vec


# ─────────────────────────────────────────────────────────────
#  TU-subgraphs and spanning forests
# ─────────────────────────────────────────────────────────────

def _components(n: int, edges: Sequence[tuple[int, int]]):
    """Union-find over ``edges``; returns (root -> vertex list, root -> edge count)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    verts: dict[int, list[int]] = {}
    for v in range(n):
        verts.setdefault(find(v), []).append(v)
    counts = dict.fromkeys(verts, 0)
    for u, _ in edges:
        counts[find(u)] += 1
    return verts, counts


@dataclass(frozen=True)
class TUSubgraph:
    edges: tuple[tuple[int, int], ...]
    components: tuple[tuple[frozenset[int], str], ...]  # kind is "tree" or "odd-unicyclic"

    @property
    def weight(self) -> int:
        w = 1
        for verts, kind in self.components:
            w *= 4 if kind == "odd-unicyclic" else len(verts)
        return w


def _classify_tu(g: UnicyclicGraph, subset) -> TUSubgraph | None:
    verts, counts = _components(g.n, subset)
    comps = []
    for root, vs in verts.items():
        e = counts[root]
        if e == len(vs) - 1:
            comps.append((frozenset(vs), "tree"))
        elif e == len(vs) and g.odd:
            # a unicyclic host has one cycle, so this component carries it
            comps.append((frozenset(vs), "odd-unicyclic"))
        else:
            return None
    comps.sort(key=lambda c: min(c[0]))
    return TUSubgraph(tuple(subset), tuple(comps))


def _require_unicyclic(g) -> UnicyclicGraph:
    if isinstance(g, UnicyclicGraph):
        return g
    return UnicyclicGraph(g)


def iter_tu_subgraphs(g: UnicyclicGraph | LabeledGraph, i: int) -> Iterator[TUSubgraph]:
    """All TU-subgraphs with exactly ``i`` edges.  Isolated vertices are trees of order 1."""
    ug = _require_unicyclic(g)
    if not 0 <= i <= ug.n:
        raise ValueError(f"edge count {i} out of range 0..{ug.n}")
    for subset in combinations(ug.edges(), i):
        h = _classify_tu(ug, subset)
        if h is not None:
            yield h


def tu_coefficient(g: UnicyclicGraph | LabeledGraph, i: int) -> int:
    """Sum of W(H) over TU-subgraphs with ``i`` edges (0 when there are none)."""
    return sum(h.weight for h in iter_tu_subgraphs(g, i))


def tu_coefficients(g: UnicyclicGraph | LabeledGraph) -> CoefficientVector:
    ug = _require_unicyclic(g)
    return CoefficientVector(ug.n, tuple(tu_coefficient(ug, i) for i in range(ug.n + 1)))


def forest_coefficient(g: LabeledGraph | UnicyclicGraph, k: int) -> int:
    """Sum over spanning forests with ``k`` trees of the product of tree orders.

    This is the Laplacian coefficient c_{n-k}.
    """
    graph = as_graph(g)
    n = graph.n
    if not 1 <= k <= n:
        raise ValueError(f"component count {k} out of range 1..{n}")
    total = 0
    for subset in combinations(graph.edges(), n - k):
        verts, counts = _components(n, subset)
        if len(verts) != k:
            continue  # a cycle merged fewer vertices than edges
        total += prod(len(vs) for vs in verts.values())
    return total


# ─────────────────────────────────────────────────────────────
#  Eigenvalues and incidence energy
# ─────────────────────────────────────────────────────────────

class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]
    source: str  # "signless" or "laplacian"


def jacobi_eigenvalues(m: Sequence[Sequence[float]], tol: float = 1e-12,
                       max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, descending."""
    n = len(m)
    a = [[float(x) for x in row] for row in m]
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    scale = max((abs(x) for row in a for x in row), default=0.0) or 1.0
    for _ in range(max_sweeps):
        off = sum(a[i][j] ** 2 for i in range(n) for j in range(i + 1, n))
        if math.sqrt(off) <= tol * 1e-2 * scale:
            return sorted((a[i][i] for i in range(n)), reverse=True)
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                theta = (a[q][q] - a[p][p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp, akq = a[k][p], a[k][q]
                    a[k][p] = c * akp - s * akq
                    a[k][q] = s * akp + c * akq
                for k in range(n):
                    apk, aqk = a[p][k], a[q][k]
                    a[p][k] = c * apk - s * aqk
                    a[q][k] = s * apk + c * aqk
                a[p][q] = a[q][p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")


def eigenvalues(m: Matrix, tol: float = 1e-12, source: str = "signless") -> Spectrum:
    return Spectrum(tuple(jacobi_eigenvalues(m, tol)), source)


def incidence_energy(g: LabeledGraph | UnicyclicGraph, tol: float = 1e-12) -> float:
    """Sum of square roots of the signless Laplacian eigenvalues.

    Since Q = R R^T for the vertex-edge incidence matrix R, the square roots
    are the singular values of R.  They are read off as the nonnegative
    eigenvalues of the symmetric block matrix [[0, R], [R^T, 0]] rather than
    by taking square roots of computed eigenvalues of Q, which would turn a
    round-off of 1e-16 on a zero eigenvalue into an error of 1e-8.
    """
    h = as_graph(g)
    edges = h.edges()
    size = h.n + len(edges)
    block = [[0.0] * size for _ in range(size)]
    for j, (a, b) in enumerate(edges):
        col = h.n + j
        for v in (a, b):
            block[v][col] = block[col][v] = 1.0
    spec = jacobi_eigenvalues(block, tol)
    # spectrum is symmetric about zero: +-sigma_i plus |n - m| zeros
    return math.fsum(abs(x) for x in spec) / 2


# ─────────────────────────────────────────────────────────────
#  Comparing coefficient vectors
# ─────────────────────────────────────────────────────────────

class Comparison(enum.Enum):
    """Outcome of comparing ``a`` to ``b`` entrywise.

    DOMINATES means ``a`` is entrywise <= ``b`` and somewhere strictly smaller,
    i.e. ``a`` sits below ``b`` in the dominance order.
    """

    EQUAL = "Equal"
    DOMINATES = "Dominates"
    DOMINATED_BY = "DominatedBy"
    INCOMPARABLE = "Incomparable"

    def __str__(self) -> str:
        return self.value


def compare_coefficients(a: CoefficientVector | Sequence[int],
                         b: CoefficientVector | Sequence[int]) -> Comparison:
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    le = all(x <= y for x, y in zip(a, b))
    ge = all(x >= y for x, y in zip(a, b))
    if le and ge:
        return Comparison.EQUAL
    if le:
        return Comparison.DOMINATES
    if ge:
        return Comparison.DOMINATED_BY
    return Comparison.INCOMPARABLE


def equality_indices(a: CoefficientVector | Sequence[int],
                     b: CoefficientVector | Sequence[int]) -> set[int]:
    return {i for i, (x, y) in enumerate(zip(a, b)) if x == y}
