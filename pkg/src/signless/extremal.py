"""Exhaustive small-n search for coefficient-minimal unicyclic graphs, and
clause-by-clause verification of the extremal statements.

A graph is *minimal* in a class when no other member has a coefficient
vector that is entrywise <= and somewhere strictly smaller.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .graph_core import (
    GraphError, LabeledGraph, UnicyclicGraph, canonical_form, enumerate_unicyclic,
    format_edge_list, matching_number,
)
from .recurrences import RangeError, family
from .spectra import CoefficientVector, Comparison, coefficients, compare_coefficients, incidence_energy

DEFAULT_MAX_N = 9
HARD_MAX_N = 10
IE_TOL = 1e-9

THEOREMS = ("T4_1", "T4_2", "T5_1", "T5_2", "C4_3", "C4_4", "C5_3", "C5_4", "R3_8")


@dataclass(frozen=True)
class GraphRecord:
    code: bytes
    graph: UnicyclicGraph
    girth: int
    matching: int
    phi: CoefficientVector
    ie: float

    @property
    def odd(self) -> bool:
        return self.girth % 2 == 1

    def edge_text(self) -> str:
        return format_edge_list(self.graph).rstrip("\n")


def _record(g: UnicyclicGraph) -> GraphRecord:
    return GraphRecord(canonical_form(g), g, g.girth, matching_number(g),
                       coefficients(g), incidence_energy(g))


def _check_bound(n: int, max_n: int) -> None:
    if max_n > HARD_MAX_N:
        raise GraphError(f"max_n={max_n} exceeds the hard enumeration limit {HARD_MAX_N}")
    if n > max_n:
        raise GraphError(f"enumeration bound exceeded: n={n} > max_n={max_n}")


@lru_cache(maxsize=None)
def _all_records(n: int, jobs: int = 1) -> tuple[GraphRecord, ...]:
    graphs = list(enumerate_unicyclic(n, max_n=HARD_MAX_N))
    if jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return tuple(pool.map(_record, graphs, chunksize=max(1, len(graphs) // (4 * jobs))))
    return tuple(_record(g) for g in graphs)


def class_records(n: int, parity: Optional[str] = None, m: Optional[int] = None,
                  max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> list[GraphRecord]:
    """Every isomorphism class with ``n`` vertices, optionally filtered by girth
    parity and matching number, in canonical-code order."""
    _check_bound(n, max_n)
    if parity not in (None, "odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    out = []
    for r in _all_records(n, max(1, jobs)):
        if parity is not None and r.odd != (parity == "odd"):
            continue
        if m is not None and r.matching != m:
            continue
        out.append(r)
    return out


def minimal_elements(records: Sequence[GraphRecord]) -> list[GraphRecord]:
    """Members not strictly dominated by any other member."""
    out = []
    for r in records:
        if not any(compare_coefficients(s.phi, r.phi) is Comparison.DOMINATES for s in records):
            out.append(r)
    return out


@dataclass(frozen=True)
class MinimaResult:
    n: int
    m: Optional[int]
    parity: Optional[str]
    class_size: int
    minimal: tuple[GraphRecord, ...]

    @property
    def unique(self) -> bool:
        """A single minimal class that every member dominates-or-equals."""
        return len(self.minimal) == 1

    def to_json(self) -> dict:
        return {
            "n": self.n, "m": self.m, "parity": self.parity, "class_size": self.class_size,
            "unique": self.unique,
            "minimal": [{"edges": r.edge_text().splitlines(), "girth": r.girth,
                         "matching": r.matching, "phi": r.phi.to_json()} for r in self.minimal],
        }


def search_minima(n: int, m: Optional[int] = None, parity: Optional[str] = None,
                  max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> MinimaResult:
    recs = class_records(n, parity, m, max_n, jobs)
    return MinimaResult(n, m, parity, len(recs), tuple(minimal_elements(recs)))


# ─────────────────────────────────────────────────────────────
#  Reports
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class ClauseResult:
    theorem: str
    clause: str
    n: int
    m: Optional[int]
    parity: Optional[str]
    passed: bool
    detail: str
    witness: Optional[str] = None
    scope: str = "exhaustive"

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "clause": self.clause, "n": self.n, "m": self.m,
                "parity": self.parity, "verdict": "PASS" if self.passed else "FAIL",
                "detail": self.detail, "witness": self.witness, "scope": self.scope}


@dataclass
class ExtremalReport:
    theorem: str
    n_range: tuple[int, int]
    clauses: list[ClauseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    @property
    def failures(self) -> list[ClauseResult]:
        return [c for c in self.clauses if not c.passed]

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "n_range": list(self.n_range),
                "verdict": "PASS" if self.passed else "FAIL",
                "clauses": [c.to_json() for c in self.clauses]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, data) -> ExtremalReport:
        if isinstance(data, str):
            data = json.loads(data)
        clauses = [ClauseResult(c["theorem"], c["clause"], c["n"], c["m"], c["parity"],
                                c["verdict"] == "PASS", c["detail"], c["witness"], c["scope"])
                   for c in data["clauses"]]
        return cls(data["theorem"], tuple(data["n_range"]), clauses)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem", "n", "m", "parity", "clause", "verdict", "scope", "detail"])
        for c in self.clauses:
            w.writerow([c.theorem, c.n, "" if c.m is None else c.m, c.parity or "", c.clause,
                        "PASS" if c.passed else "FAIL", c.scope, c.detail])
        return buf.getvalue()


def _family_code(tag: str, n: int, m: Optional[int]) -> Optional[bytes]:
    try:
        return canonical_form(family(tag).graph(n, m))
    except RangeError:
        return None


def _names(records: Iterable[GraphRecord], named: dict[bytes, str]) -> list[str]:
    return sorted(named.get(r.code, "other") for r in records)


def _minima_clause(theorem: str, clause: str, n: int, m: Optional[int], parity: str,
                   expected: Sequence[str], antichain: bool, max_n: int, jobs: int) -> ClauseResult:
    """Compare the class's minimal set with the named families.

    ``antichain`` asks for exactly the listed families, pairwise Incomparable;
    otherwise a single listed family must be the unique minimum."""
    res = search_minima(n, m, parity, max_n, jobs)
    codes = {}
    for tag in expected:
        code = _family_code(tag, n, m)
        if code is None:
            return ClauseResult(theorem, clause, n, m, parity, False,
                                f"{tag} is undefined at n={n}, m={m}")
        codes[code] = tag
    found = _names(res.minimal, codes)
    # the family must actually lie in the class
    members = {r.code for r in class_records(n, parity, m, max_n, jobs)}
    missing = [t for c, t in codes.items() if c not in members]
    ok = not missing and found == sorted(expected)
    detail = f"minimal set {found} of {res.class_size} classes"
    if missing:
        detail += f"; {missing} not in the class"
    if ok and antichain:
        pair = [r for r in res.minimal]
        verdicts = {compare_coefficients(a.phi, b.phi) for a in pair for b in pair if a is not b}
        ok = verdicts <= {Comparison.INCOMPARABLE}
        detail += f"; pairwise {sorted(v.value for v in verdicts)}"
    witness = None
    if not ok:
        other = [r for r in res.minimal if r.code not in codes]
        if other:
            witness = other[0].edge_text()
    return ClauseResult(theorem, clause, n, m, parity, ok, detail, witness)


def _feasible_m(n: int, parity: str, max_n: int, jobs: int) -> list[int]:
    return sorted({r.matching for r in class_records(n, parity, None, max_n, jobs)})


def _t4_1(n, m, max_n, jobs):
    if m == 2:
        return _minima_clause("T4_1", "(1) m=2: G31 minimum", n, m, "odd", ["G31"], False, max_n, jobs)
    if m >= 3 and n - m <= 3 and 6 <= n <= 12:
        return _minima_clause("T4_1", "(2) G32 minimum", n, m, "odd", ["G32"], False, max_n, jobs)
    if m >= 3:
        return _minima_clause("T4_1", "(3) antichain {G31,G32}", n, m, "odd",
                              ["G31", "G32"], True, max_n, jobs)
    return None


def _t4_2_threshold(n: int, m: int) -> bool:
    return n >= 11 and ((m >= 4 and n - m >= 7) or (m >= 5 and n - m >= 6) or (m >= 7 and n - m >= 5))


def _t4_2(n, m, max_n, jobs):
    if m == 2:
        return _minima_clause("T4_2", "(1) m=2: G41 minimum", n, m, "even", ["G41"], False, max_n, jobs)
    if m == 3:
        return _minima_clause("T4_2", "(2) m=3: G42 minimum", n, m, "even", ["G42"], False, max_n, jobs)
    if m >= 4 and n == 8:
        return _minima_clause("T4_2", "(3) n=8: G44 minimum", n, m, "even", ["G44"], False, max_n, jobs)
    if m >= 4 and _t4_2_threshold(n, m):
        return _minima_clause("T4_2", "(4) G42 minimum", n, m, "even", ["G42"], False, max_n, jobs)
    if m >= 4:
        return _minima_clause("T4_2", "(5) antichain {G42,G44}", n, m, "even",
                              ["G42", "G44"], True, max_n, jobs)
    return None


def _ie_clause(theorem: str, n: int, m: Optional[int], parity: str, allowed: Sequence[str],
               unique: bool, max_n: int, jobs: int) -> ClauseResult:
    recs = class_records(n, parity, m, max_n, jobs)
    best = min(r.ie for r in recs)
    argmin = [r for r in recs if r.ie <= best + IE_TOL]
    codes = {c: t for t in allowed if (c := _family_code(t, n, m)) is not None}
    found = _names(argmin, codes)
    fam_ie = [r.ie for r in recs if r.code in codes]
    ok = "other" not in found and bool(fam_ie) and abs(min(fam_ie) - best) <= IE_TOL
    if unique:
        ok = ok and len(argmin) == 1
    label = ("unique " if unique else "") + "IE minimum in {" + ",".join(allowed) + "}"
    witness = next((r.edge_text() for r in argmin if r.code not in codes), None)
    return ClauseResult(theorem, label, n, m, parity, ok,
                        f"min IE {best:.12f}; argmin {found}", witness)


def _c4_3(n, m, max_n, jobs):
    if m == 2:
        return _ie_clause("C4_3", n, m, "odd", ["G31"], True, max_n, jobs)
    if m >= 3:
        return _ie_clause("C4_3", n, m, "odd", ["G31", "G32"], False, max_n, jobs)
    return None


def _c4_4(n, m, max_n, jobs):
    if m == 2:
        return _ie_clause("C4_4", n, m, "even", ["G41"], True, max_n, jobs)
    if m == 3:
        return _ie_clause("C4_4", n, m, "even", ["G42"], True, max_n, jobs)
    if m >= 4:
        return _ie_clause("C4_4", n, m, "even", ["G42", "G44"], False, max_n, jobs)
    return None


def girth_pair_clause(n: int, max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> ClauseResult:
    """Every girth-3 class against every girth-4 class: Incomparable, with
    phi_{n-1} equal to 3n and 4n respectively."""
    recs = class_records(n, None, None, max_n, jobs)
    g3 = [r for r in recs if r.girth == 3]
    g4 = [r for r in recs if r.girth == 4]
    bad_pairs = 0
    witness = None
    for a in g3:
        for b in g4:
            verdict = compare_coefficients(a.phi, b.phi)
            if verdict is not Comparison.INCOMPARABLE:
                bad_pairs += 1
                if witness is None:
                    witness = f"{verdict.value}:\n{a.edge_text()}\n--\n{b.edge_text()}"
    bad3 = [r for r in g3 if r.phi[n - 1] != 3 * n]
    bad4 = [r for r in g4 if r.phi[n - 1] != 4 * n]
    if witness is None and bad3:
        witness = f"phi_{n - 1}={bad3[0].phi[n - 1]} != {3 * n}:\n{bad3[0].edge_text()}"
    if witness is None and bad4:
        witness = f"phi_{n - 1}={bad4[0].phi[n - 1]} != {4 * n}:\n{bad4[0].edge_text()}"
    ok = not bad_pairs and not bad3 and not bad4 and bool(g3) and bool(g4)
    detail = (f"{len(g3) * len(g4)} pairs, {bad_pairs} not Incomparable; "
              f"girth 3 with phi_(n-1) != 3n: {len(bad3)}/{len(g3)}; "
              f"girth 4 with phi_(n-1) != 4n: {len(bad4)}/{len(g4)}")
    return ClauseResult("R3_8", "girth 3 vs 4 Incomparable", n, None, None, ok, detail, witness)


def verify_theorem(theorem: str, n_range: tuple[int, int],
                   m_range: Optional[tuple[int, int]] = None,
                   max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> ExtremalReport:
    """Check each applicable clause of ``theorem`` for n in ``n_range``
    (inclusive) and, where relevant, m in ``m_range``."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    lo, hi = n_range
    if lo < 3 or hi < lo:
        raise ValueError(f"bad n range {n_range}")
    _check_bound(hi, max_n)
    report = ExtremalReport(theorem, (lo, hi))
    per_m = {"T4_1": (_t4_1, "odd"), "T4_2": (_t4_2, "even"),
             "C4_3": (_c4_3, "odd"), "C4_4": (_c4_4, "even")}
    for n in range(lo, hi + 1):
        if theorem in per_m:
            fn, parity = per_m[theorem]
            for m in _feasible_m(n, parity, max_n, jobs):
                if m_range is not None and not m_range[0] <= m <= m_range[1]:
                    continue
                res = fn(n, m, max_n, jobs)
                if res is not None:
                    report.clauses.append(res)
        elif theorem in ("T5_1", "T5_2"):
            parity, tag = ("odd", "S3p") if theorem == "T5_1" else ("even", "S4p")
            if class_records(n, parity, None, max_n, jobs):
                report.clauses.append(_minima_clause(theorem, f"{tag} minimum", n, None, parity,
                                                     [tag], False, max_n, jobs))
        elif theorem in ("C5_3", "C5_4"):
            parity, tag = ("odd", "S3p") if theorem == "C5_3" else ("even", "S4p")
            if class_records(n, parity, None, max_n, jobs):
                report.clauses.append(_ie_clause(theorem, n, None, parity, [tag], True, max_n, jobs))
        else:
            if n >= 4:
                report.clauses.append(girth_pair_clause(n, max_n, jobs))
    return report


# ─────────────────────────────────────────────────────────────
#  Incidence energy
# ─────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class RankedGraph:
    ie: float
    record: GraphRecord


def ie_ranking(n: int, m: Optional[int] = None, parity: Optional[str] = None,
               max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> list[RankedGraph]:
    """Class members by incidence energy ascending; ties broken by canonical code."""
    recs = class_records(n, parity, m, max_n, jobs)
    return [RankedGraph(r.ie, r) for r in sorted(recs, key=lambda r: (r.ie, r.code))]


def dominance_violations(records: Sequence[GraphRecord], tol: float = IE_TOL) -> list[tuple[GraphRecord, GraphRecord]]:
    """Pairs (a, b) where a's coefficients sit below b's but IE(a) >= IE(b) + tol."""
    out = []
    for a in records:
        for b in records:
            if a is not b and compare_coefficients(a.phi, b.phi) is Comparison.DOMINATES \
                    and not a.ie < b.ie + tol:
                out.append((a, b))
    return out


def as_record(g: LabeledGraph | UnicyclicGraph) -> GraphRecord:
    if isinstance(g, LabeledGraph):
        g = UnicyclicGraph(g)
    return _record(g)
