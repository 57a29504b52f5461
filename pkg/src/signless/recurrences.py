"""Recurrences for the signless Laplacian characteristic polynomial under
gluing operations, and closed forms for the extremal families.

Throughout, ``Q(G, x) = det(xI - Q(G))`` and ``Q(G|v, x)`` is the same
determinant with row and column ``v`` removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .graph_core import (
    FamilySpec, GraphError, LabeledGraph, UnicyclicGraph, as_graph, build_family,
)
from .polynomial import X, IntPolynomial
from .spectra import char_poly, delete_row_col, signless_char_poly, signless_laplacian


class RangeError(ValueError):
    """(n, m) lies outside the range where a closed form is defined."""


def principal_submatrix_poly(g: LabeledGraph | UnicyclicGraph, v: int) -> IntPolynomial:
    """``det(xI - Q)`` with row and column ``v`` deleted, exact."""
    graph = as_graph(g)
    if not 0 <= v < graph.n:
        raise GraphError(f"vertex {v} out of range")
    return char_poly(delete_row_col(signless_laplacian(graph), v))


def bridge_join_poly(g1: LabeledGraph, u: int, g2: LabeledGraph, v: int) -> IntPolynomial:
    """Polynomial of ``g1`` and ``g2`` joined by the edge ``uv``, from the parts."""
    p1, p2 = signless_char_poly(g1), signless_char_poly(g2)
    return p1 * p2 - p1 * principal_submatrix_poly(g2, v) - p2 * principal_submatrix_poly(g1, u)


def pendant_vertices_poly(h: LabeledGraph, v: int, k: int) -> IntPolynomial:
    """Polynomial of ``h`` with ``k`` pendant vertices hung on ``v``."""
    if h.n < 2:
        raise GraphError("the host graph needs at least 2 vertices")
    if k < 0:
        raise ValueError("k must be nonnegative")
    x1 = X - 1
    out = x1 ** k * signless_char_poly(h)
    if k:
        out = out - k * X * x1 ** (k - 1) * principal_submatrix_poly(h, v)
    return out


def pendant_paths2_poly(h: LabeledGraph, v: int, k: int) -> IntPolynomial:
    """Polynomial of ``h`` with ``k`` pendant paths of length 2 hung on ``v``."""
    if h.n < 2:
        raise GraphError("the host graph needs at least 2 vertices")
    if k < 0:
        raise ValueError("k must be nonnegative")
    q = X * X - 3 * X + 1
    out = q ** k * signless_char_poly(h)
    if k:
        out = out - k * X * (X - 2) * q ** (k - 1) * principal_submatrix_poly(h, v)
    return out


# ─────────────────────────────────────────────────────────────
#  Extremal families
# ─────────────────────────────────────────────────────────────

_Q2 = X * X - 3 * X + 1
_X1 = X - 1
_Q4 = X * X - 4 * X + 2


def _d(*coeffs: int) -> IntPolynomial:
    return IntPolynomial.from_descending(coeffs)


def _pow(p: IntPolynomial, k: int, what: str) -> IntPolynomial:
    if k < 0:
        raise RangeError(f"exponent of {what} would be {k}")
    return p ** k


@dataclass(frozen=True)
class ClosedFormFamily:
    """An extremal family: its shape in G_g notation and its polynomial."""

    tag: str
    girth: int
    spec: Callable[[int, int], tuple[tuple[int, int], ...]]
    poly: Callable[[int, int], IntPolynomial] | None
    uses_m: bool = True

    def family_spec(self, n: int, m: int | None = None) -> FamilySpec:
        pairs = self.spec(n, m if m is not None else 0)
        if any(s < 0 or t < 0 for s, t in pairs):
            raise RangeError(f"{self.tag} is undefined for n={n}, m={m}")
        spec = FamilySpec(self.girth, pairs)
        if spec.n != n:
            raise RangeError(f"{self.tag} has {spec.n} vertices, expected {n}")
        return spec

    def graph(self, n: int, m: int | None = None) -> UnicyclicGraph:
        return build_family(self.family_spec(n, m))


def _g31(n, m):
    return (_pow(_Q2, m - 3, "x^2-3x+1") * _pow(_X1, n - 2 * m + 1, "x-1")
            * _d(1, -8 - n + m, -6 * m + 22 + 6 * n, 9 * m - 25 - 10 * n, 12 + 3 * n, -4))


def _g32(n, m):
    return (_pow(_Q2, m - 3, "x^2-3x+1") * _pow(_X1, n - 2 * m, "x-1")
            * _d(1, -9 - n + m, -8 * m + 27 + 8 * n, 18 * m - 36 - 19 * n,
                 24 + 14 * n - 9 * m, -12 - 3 * n, 4))


def _g41(n, m):
    return (_pow(_Q2, m - 3, "x^2-3x+1") * _pow(_X1, n - 2 * m - 1, "x-1") * X * (X - 2)
            * _d(1, -8 - n + m, -7 * m + 22 + 7 * n, 14 * m - 25 - 15 * n,
                 10 + 10 * n - 6 * m, -2 * n))


def _g42(n, m):
    return (_pow(_Q2, m - 3, "x^2-3x+1") * _pow(_X1, n - 2 * m + 1, "x-1") * X
            * _d(1, -8 - n + m, -7 * m + 20 + 7 * n, 12 * m - 17 - 13 * n, 4 * n))


def _g43(n, m):
    return (_pow(_Q2, m - 4, "x^2-3x+1") * _pow(_X1, n - 2 * m - 1, "x-1") * X * _Q4
            * _d(1, -9 - n + m, 27 + 9 * n - 9 * m, 26 * m - 33 - 27 * n,
                 32 * n - 26 * m + 14, -14 * n + 6 * m, 2 * n))


def _g44(n, m):
    return (_pow(_Q2, m - 5, "x^2-3x+1") * _pow(_X1, n - 2 * m, "x-1") * X * _Q4
            * _d(1, -11 - n + m, 11 * n - 11 * m + 43, -43 * n + 42 * m - 74,
                 50 + 74 * n - 66 * m, -56 * n + 38 * m, -8 + 18 * n - 6 * m, -2 * n))


FAMILIES: dict[str, ClosedFormFamily] = {
    "G31": ClosedFormFamily("G31", 3, lambda n, m: ((0, 0), (0, 0), (m - 2, n - 2 * m + 1)), _g31),
    "G32": ClosedFormFamily("G32", 3, lambda n, m: ((0, 1), (0, 1), (m - 3, n - 2 * m + 1)), _g32),
    "G41": ClosedFormFamily("G41", 4, lambda n, m: ((0, 0), (0, 0), (0, 0), (m - 2, n - 2 * m)), _g41),
    "G42": ClosedFormFamily("G42", 4, lambda n, m: ((0, 0), (0, 0), (0, 1), (m - 3, n - 2 * m + 1)), _g42),
    "G43": ClosedFormFamily("G43", 4, lambda n, m: ((0, 0), (0, 1), (m - 3, n - 2 * m), (0, 1)), _g43),
    "G44": ClosedFormFamily("G44", 4, lambda n, m: ((0, 1), (0, 1), (0, 1), (m - 4, n - 2 * m + 1)), _g44),
    "S3p": ClosedFormFamily("S3p", 3, lambda n, m: ((0, 0), (0, 0), (0, n - 3)), None, uses_m=False),
    "S4p": ClosedFormFamily("S4p", 4, lambda n, m: ((0, 0), (0, 0), (0, 0), (0, n - 4)), None, uses_m=False),
}

CLOSED_FORM_TAGS = ("G31", "G32", "G41", "G42", "G43", "G44")


def family(tag: str) -> ClosedFormFamily:
    try:
        return FAMILIES[tag]
    except KeyError:
        raise ValueError(f"unknown family {tag!r}; choose from {sorted(FAMILIES)}") from None


def closed_form_poly(tag: str, n: int, m: int) -> IntPolynomial:
    """The displayed closed form for family ``tag`` at ``(n, m)``.

    Raises :class:`RangeError` when an exponent or a family parameter would be
    negative."""
    fam = family(tag)
    if fam.poly is None:
        raise ValueError(f"{tag} has no closed form; use the recurrences")
    fam.family_spec(n, m)
    return fam.poly(n, m)


def valid_range(tag: str, n_max: int) -> list[tuple[int, int]]:
    """All (n, m) with n <= n_max where ``closed_form_poly(tag, n, m)`` is defined."""
    out = []
    for n in range(3, n_max + 1):
        for m in range(1, n // 2 + 1):
            try:
                closed_form_poly(tag, n, m)
            except RangeError:
                continue
            out.append((n, m))
    return out


# difference label -> (minuend, subtrahend, F builder, prefactor builder)
def _f1(n, m):
    return _d(-(n - m - 3), 3 * n - 3 * m - 11, -(n - 13), -4, 0)


def _f2(n, m):
    return _d(1, -(n - m + 4), 3 * n - 3 * m + 6, -(n + 3), 0)


def _f3(n, m):
    return _d(1, -(n - m + 6), 5 * n - 5 * m + 16, -(7 * n - 6 * m + 25), 2 * n + 22, -8, 0)


def _f4(n, m):
    return _d(n - m - 4, -(10 * n - 10 * m - 42), 37 * n - 36 * m - 170, -(63 * n - 56 * m - 338),
              51 * n - 36 * m - 345, -(20 * n - 9 * m - 171), 3 * n - 33, 0)


DIFFERENCES = {
    "eq1": ("G31", "G32", _f1,
            lambda n, m: _pow(_Q2, m - 3, "x^2-3x+1") * _pow(_X1, n - 2 * m, "x-1")),
    "eq2": ("G41", "G42", _f2,
            lambda n, m: _pow(_Q2, m - 3, "x^2-3x+1") * _pow(_X1, n - 2 * m - 1, "x-1") * X),
    "eq3": ("G43", "G44", _f3,
            lambda n, m: _pow(_Q2, m - 5, "x^2-3x+1") * _pow(_X1, n - 2 * m - 1, "x-1") * X * _Q4),
    "eq4": ("G44", "G42", _f4,
            lambda n, m: _pow(_Q2, m - 5, "x^2-3x+1") * _pow(_X1, n - 2 * m, "x-1") * X),
}


def difference_operands(label: str) -> tuple[str, str]:
    a, b, _, _ = DIFFERENCES[label]
    return a, b


def difference_factor(label: str, n: int, m: int) -> IntPolynomial:
    """Factored form of a closed-form difference (``eq1`` .. ``eq4``), expanded."""
    if label not in DIFFERENCES:
        raise ValueError(f"unknown difference {label!r}; choose from {sorted(DIFFERENCES)}")
    a, b, f, pre = DIFFERENCES[label]
    family(a).family_spec(n, m)
    family(b).family_spec(n, m)
    return pre(n, m) * f(n, m)


def difference_direct(label: str, n: int, m: int) -> IntPolynomial:
    """The same difference taken from the two closed forms."""
    a, b = difference_operands(label)
    return closed_form_poly(a, n, m) - closed_form_poly(b, n, m)


def first_difference(p: IntPolynomial, q: IntPolynomial) -> int | None:
    """Lowest power where ``p`` and ``q`` differ, or ``None``."""
    for k in range(max(p.degree, q.degree) + 1):
        if p[k] != q[k]:
            return k
    return None


def family_poly_by_recurrence(spec: FamilySpec) -> IntPolynomial:
    """Build a family polynomial by hanging paths and pendants one cycle vertex
    at a time, starting from the bare cycle."""
    from .graph_core import attach_paths2, attach_pendants, cycle_graph

    host = cycle_graph(spec.g)
    poly = signless_char_poly(host)
    for c, (s, t) in enumerate(spec.attachments):
        if s:
            poly = pendant_paths2_poly(host, c, s)
            host = attach_paths2(host, c, s)
        if t:
            poly = pendant_vertices_poly(host, c, t)
            host = attach_pendants(host, c, t)
    return poly


__all__ = [
    "RangeError", "principal_submatrix_poly", "bridge_join_poly", "pendant_vertices_poly",
    "pendant_paths2_poly", "ClosedFormFamily", "FAMILIES", "CLOSED_FORM_TAGS", "family",
    "closed_form_poly", "valid_range", "difference_factor", "difference_direct",
    "difference_operands", "first_difference", "family_poly_by_recurrence",
]
