"""Labeled Reeb graphs of level-set sweeps on surfaces.

A graph lives over a level window [lo, hi].  Vertices carry an exact real
level and a kind (boundary, center, saddle, or a valency-two subdivision
point); edges are monotone (lower level strictly below upper level) and
carry an essential/inessential label describing the level loops they stand
for.  All level comparisons are exact on the stored floats; no epsilon is
ever used.  "Just left of a level" is always operationalized as the
midpoint of the inter-event gap ending there.

Everything here is a pure function over values that are immutable after
construction.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from itertools import pairwise
from typing import Any

from .errors import EmptyWindow, InvalidGraph, MalformedGraph, NonGenericCut


class VertexKind(str, Enum):
    BOUNDARY_MINUS = "boundary-minus"
    BOUNDARY_PLUS = "boundary-plus"
    CENTER = "center"
    SADDLE = "saddle"
    REGULAR = "regular"


#: Valency each vertex kind must have in the full graph.
EXPECTED_VALENCY = {
    VertexKind.BOUNDARY_MINUS: 1,
    VertexKind.BOUNDARY_PLUS: 1,
    VertexKind.CENTER: 1,
    VertexKind.SADDLE: 3,
    VertexKind.REGULAR: 2,
}

BOUNDARY_KINDS = (VertexKind.BOUNDARY_MINUS, VertexKind.BOUNDARY_PLUS)


class EdgeLabel(str, Enum):
    ESSENTIAL = "essential"
    INESSENTIAL = "inessential"


@dataclass(frozen=True)
class ReebVertex:
    id: str
    level: float
    kind: VertexKind


@dataclass(frozen=True)
class ReebEdge:
    id: str
    lower: str
    upper: str
    label: EdgeLabel
    #: Optional mesh provenance (a level cycle, or its JSON payload).
    #: Not part of structural equality.
    witness: Any = field(default=None, compare=False)


# Validation rule identifiers, stable across releases.
RULE_EDGE_MONOTONE = "EdgeMonotone"
RULE_VERTEX_VALENCY = "VertexValency"
RULE_BOUNDARY_LEVEL = "BoundaryLevel"
RULE_GENERICITY = "Genericity"
RULE_SADDLE_PARITY = "SaddleParity"
RULE_CENTER = "CenterRule"
RULE_COVERAGE = "LevelCoverage"
RULE_REGULAR = "RegularVertex"


@dataclass(frozen=True)
class Violation:
    rule: str
    subjects: tuple[str, ...]
    note: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations) -> "ValidationReport":
        vs = tuple(violations)
        return cls(ok=not vs, violations=vs)

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "violations": [
                {"rule": v.rule, "subjects": list(v.subjects), "note": v.note}
                for v in self.violations
            ],
        }


def _check_finite(value: float, what: str) -> None:
    if not isinstance(value, (int, float)) or not math.isfinite(value):
        raise MalformedGraph("%s must be a finite number, got %r" % (what, value))


@dataclass(eq=True)
class ReebGraph:
    """A labeled Reeb graph over the window [lo, hi].

    Vertices and edges are canonicalized (sorted) at construction, so two
    graphs compare equal exactly when they have the same window and the
    same vertex/edge content.  ``meta`` carries provenance (generator
    seeds, mesh info) and is excluded from comparisons.
    """

    vertices: tuple[ReebVertex, ...]
    edges: tuple[ReebEdge, ...]
    lo: float
    hi: float
    meta: dict | None = field(default=None, compare=False)

    def __post_init__(self):
        _check_finite(self.lo, "lo")
        _check_finite(self.hi, "hi")
        if not self.lo < self.hi:
            raise MalformedGraph("window lo must be below hi")
        self.vertices = tuple(sorted(self.vertices, key=lambda v: (v.level, v.id)))
        self.edges = tuple(sorted(self.edges, key=lambda e: e.id))
        by_id: dict[str, ReebVertex] = {}
        for v in self.vertices:
            _check_finite(v.level, "level of vertex %s" % v.id)
            if v.id in by_id:
                raise MalformedGraph("duplicate vertex id %r" % v.id)
            by_id[v.id] = v
        incident: dict[str, list[str]] = {v.id: [] for v in self.vertices}
        seen_edges: set[str] = set()
        for e in self.edges:
            if e.id in seen_edges:
                raise MalformedGraph("duplicate edge id %r" % e.id)
            seen_edges.add(e.id)
            for end in (e.lower, e.upper):
                if end not in by_id:
                    raise MalformedGraph(
                        "edge %r references missing vertex %r" % (e.id, end))
                incident[end].append(e.id)
        self._by_id = by_id
        self._incident = {k: tuple(v) for k, v in incident.items()}
        self._edge_by_id = {e.id: e for e in self.edges}

    # -- lookups ------------------------------------------------------------

    def vertex(self, vid: str) -> ReebVertex:
        return self._by_id[vid]

    def edge(self, eid: str) -> ReebEdge:
        return self._edge_by_id[eid]

    def level(self, vid: str) -> float:
        return self._by_id[vid].level

    def incident(self, vid: str) -> tuple[str, ...]:
        """Ids of the edges meeting the vertex."""
        return self._incident[vid]

    def degree(self, vid: str) -> int:
        return len(self._incident[vid])

    def span(self, eid: str) -> tuple[float, float]:
        """(lower level, upper level) of the edge."""
        e = self._edge_by_id[eid]
        return (self._by_id[e.lower].level, self._by_id[e.upper].level)

    def event_levels(self) -> list[float]:
        """Sorted distinct vertex levels together with lo and hi."""
        levels = {v.level for v in self.vertices}
        levels.add(self.lo)
        levels.add(self.hi)
        return sorted(levels)


def validate(g: ReebGraph, *, allow_regular: bool = False,
             check_coverage: bool = True) -> ValidationReport:
    """Check every structural rule and report all violations.

    Rules: monotone edges, valency matching the vertex kind, boundary
    vertices sitting exactly on lo/hi with everything else strictly
    inside, pairwise-distinct interior critical levels, the saddle parity
    rule (a saddle meets 0, 2 or 3 essential edge-ends, never exactly 1),
    the center rule (all edges at a center are inessential), and level
    coverage (every inter-event gap is spanned by at least one essential
    edge).

    ``allow_regular`` tolerates valency-two subdivision vertices, which
    never come from critical points.  ``check_coverage=False`` skips the
    coverage rule; unrestricted whole-surface graphs fail it trivially
    because level loops near their extrema bound disks.
    """
    out: list[Violation] = []
    monotone_ok = True
    for e in g.edges:
        a, b = g.span(e.id)
        if not a < b:
            monotone_ok = False
            out.append(Violation(RULE_EDGE_MONOTONE, (e.id,),
                                 "edge levels %r -> %r are not increasing" % (a, b)))

    for v in g.vertices:
        deg = g.degree(v.id)
        if v.kind is VertexKind.REGULAR and not allow_regular:
            out.append(Violation(RULE_REGULAR, (v.id,),
                                 "valency-two subdivision vertex present"))
        want = EXPECTED_VALENCY[v.kind]
        if deg != want:
            out.append(Violation(RULE_VERTEX_VALENCY, (v.id,),
                                 "%s vertex has valency %d, expected %d"
                                 % (v.kind.value, deg, want)))
        if v.kind is VertexKind.BOUNDARY_MINUS and v.level != g.lo:
            out.append(Violation(RULE_BOUNDARY_LEVEL, (v.id,),
                                 "lower-boundary vertex not at lo"))
        elif v.kind is VertexKind.BOUNDARY_PLUS and v.level != g.hi:
            out.append(Violation(RULE_BOUNDARY_LEVEL, (v.id,),
                                 "upper-boundary vertex not at hi"))
        elif v.kind not in BOUNDARY_KINDS and not g.lo < v.level < g.hi:
            out.append(Violation(RULE_BOUNDARY_LEVEL, (v.id,),
                                 "interior vertex not strictly inside the window"))

    crit_levels: dict[float, list[str]] = {}
    for v in g.vertices:
        if v.kind in (VertexKind.CENTER, VertexKind.SADDLE):
            crit_levels.setdefault(v.level, []).append(v.id)
    for level, vids in sorted(crit_levels.items()):
        if len(vids) > 1:
            out.append(Violation(RULE_GENERICITY, tuple(sorted(vids)),
                                 "interior vertices share level %r" % level))

    for v in g.vertices:
        labels = [g.edge(eid).label for eid in g.incident(v.id)]
        ess = sum(1 for lb in labels if lb is EdgeLabel.ESSENTIAL)
        if v.kind is VertexKind.SADDLE and ess == 1:
            out.append(Violation(RULE_SADDLE_PARITY, (v.id,),
                                 "saddle meets exactly one essential edge-end"))
        if v.kind is VertexKind.CENTER and ess > 0:
            out.append(Violation(RULE_CENTER, (v.id,),
                                 "center meets an essential edge"))

    if check_coverage and monotone_ok:
        spans = [(g.span(e.id), e.id) for e in g.edges
                 if e.label is EdgeLabel.ESSENTIAL]
        for a, b in pairwise(g.event_levels()):
            mid = (a + b) / 2.0
            if not any(lo < mid < hi for (lo, hi), _ in spans):
                out.append(Violation(RULE_COVERAGE, (),
                                     "no essential edge spans (%r, %r)" % (a, b)))

    return ValidationReport.from_violations(out)


def restrict(g: ReebGraph, lo: float, hi: float) -> ReebGraph:
    """Cut the graph down to the level window [lo, hi].

    Every edge is clipped to the window; cut points become boundary
    vertices (ids ``cut:<edge id>:lo`` / ``:hi``), original vertices
    inside the window are kept, and everything outside is discarded.
    Labels and witnesses are inherited.  Windows reaching past the graph's
    own window are clamped to it, so restriction always means
    intersection.

    Raises NonGenericCut if an interior vertex sits exactly on a window
    boundary, and EmptyWindow if nothing survives.
    """
    _check_finite(lo, "lo")
    _check_finite(hi, "hi")
    lo_eff = max(lo, g.lo)
    hi_eff = min(hi, g.hi)
    if not lo_eff < hi_eff:
        raise EmptyWindow("window (%r, %r) misses the graph window (%r, %r)"
                          % (lo, hi, g.lo, g.hi))
    for v in g.vertices:
        if v.kind not in BOUNDARY_KINDS and v.level in (lo_eff, hi_eff):
            raise NonGenericCut("interior vertex %s sits exactly at level %r"
                                % (v.id, v.level))

    new_vertices: dict[str, ReebVertex] = {}
    new_edges: list[ReebEdge] = []
    for e in g.edges:
        a, b = g.span(e.id)
        if not max(a, lo_eff) < min(b, hi_eff):
            continue
        if a >= lo_eff:
            lower_v = g.vertex(e.lower)
        else:
            lower_v = ReebVertex("cut:%s:lo" % e.id, lo_eff,
                                 VertexKind.BOUNDARY_MINUS)
        if b <= hi_eff:
            upper_v = g.vertex(e.upper)
        else:
            upper_v = ReebVertex("cut:%s:hi" % e.id, hi_eff,
                                 VertexKind.BOUNDARY_PLUS)
        new_vertices[lower_v.id] = lower_v
        new_vertices[upper_v.id] = upper_v
        new_edges.append(ReebEdge(e.id, lower_v.id, upper_v.id, e.label,
                                  witness=e.witness))
    if not new_edges:
        raise EmptyWindow("no edge meets (%r, %r)" % (lo_eff, hi_eff))
    return ReebGraph(tuple(new_vertices.values()), tuple(new_edges),
                     lo_eff, hi_eff, meta=g.meta)


@dataclass(eq=True)
class EssentialSubgraph:
    """The essential edges of a graph, with boundary bookkeeping.

    ``boundary_minus`` / ``boundary_plus`` are the surviving boundary
    vertex ids; ``interior`` lists the surviving non-boundary vertices in
    strictly increasing level order.  Valencies here are valencies within
    the subgraph: a saddle that lost an inessential branch has valency
    two.
    """

    vertices: tuple[ReebVertex, ...]
    edges: tuple[ReebEdge, ...]
    lo: float
    hi: float
    boundary_minus: frozenset[str]
    boundary_plus: frozenset[str]
    interior: tuple[str, ...]

    def __post_init__(self):
        self.vertices = tuple(sorted(self.vertices, key=lambda v: (v.level, v.id)))
        self.edges = tuple(sorted(self.edges, key=lambda e: e.id))
        self._by_id = {v.id: v for v in self.vertices}
        self._edge_by_id = {e.id: e for e in self.edges}
        incident: dict[str, list[str]] = {v.id: [] for v in self.vertices}
        for e in self.edges:
            incident[e.lower].append(e.id)
            incident[e.upper].append(e.id)
        self._incident = {k: tuple(v) for k, v in incident.items()}
        levels = [self._by_id[vid].level for vid in self.interior]
        if any(a >= b for a, b in pairwise(levels)):
            raise MalformedGraph("interior vertices not strictly ordered by level")

    def vertex(self, vid: str) -> ReebVertex:
        return self._by_id[vid]

    def edge(self, eid: str) -> ReebEdge:
        return self._edge_by_id[eid]

    def level(self, vid: str) -> float:
        return self._by_id[vid].level

    def incident(self, vid: str) -> tuple[str, ...]:
        return self._incident[vid]

    def degree(self, vid: str) -> int:
        return len(self._incident[vid])

    def span(self, eid: str) -> tuple[float, float]:
        e = self._edge_by_id[eid]
        return (self._by_id[e.lower].level, self._by_id[e.upper].level)

    def event_levels(self) -> list[float]:
        """Sorted distinct vertex levels plus the window's lo and hi."""
        levels = {v.level for v in self.vertices}
        levels.add(self.lo)
        levels.add(self.hi)
        return sorted(levels)

    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self.edges)


def essential_subgraph(g: ReebGraph, *, allow_regular: bool = False,
                       check_coverage: bool = True,
                       prevalidated: bool = False) -> EssentialSubgraph:
    """Keep only essential edges and their endpoints.

    The input must pass :func:`validate` (raises InvalidGraph otherwise);
    pass ``prevalidated=True`` to skip the re-check when the caller just
    validated.  Vertices that lose all their edges are dropped.
    """
    if not prevalidated:
        report = validate(g, allow_regular=allow_regular,
                          check_coverage=check_coverage)
        if not report.ok:
            raise InvalidGraph(report)
    edges = tuple(e for e in g.edges if e.label is EdgeLabel.ESSENTIAL)
    keep = {e.lower for e in edges} | {e.upper for e in edges}
    vertices = tuple(v for v in g.vertices if v.id in keep)
    bminus = frozenset(v.id for v in vertices
                       if v.kind is VertexKind.BOUNDARY_MINUS)
    bplus = frozenset(v.id for v in vertices
                      if v.kind is VertexKind.BOUNDARY_PLUS)
    interior = tuple(sorted((v.id for v in vertices
                             if v.kind not in BOUNDARY_KINDS),
                            key=lambda vid: (g.level(vid), vid)))
    return EssentialSubgraph(vertices, edges, g.lo, g.hi,
                             bminus, bplus, interior)


# -- JSON wire format ---------------------------------------------------------

def _witness_payload(witness: Any) -> Any:
    if witness is None:
        return None
    if isinstance(witness, dict):
        return witness
    to_payload = getattr(witness, "to_payload", None)
    if callable(to_payload):
        return to_payload()
    raise TypeError("witness %r is not serializable" % (witness,))


def graph_to_dict(g: ReebGraph) -> dict:
    out: dict[str, Any] = {
        "lo": g.lo,
        "hi": g.hi,
        "vertices": [
            {"id": v.id, "level": v.level, "kind": v.kind.value}
            for v in g.vertices
        ],
        "edges": [],
    }
    for e in g.edges:
        entry: dict[str, Any] = {"id": e.id, "lower": e.lower,
                                 "upper": e.upper, "label": e.label.value}
        payload = _witness_payload(e.witness)
        if payload is not None:
            entry["witness"] = payload
        out["edges"].append(entry)
    if g.meta is not None:
        out["meta"] = g.meta
    return out


def graph_from_dict(data: dict) -> ReebGraph:
    try:
        vertices = tuple(
            ReebVertex(str(v["id"]), float(v["level"]), VertexKind(v["kind"]))
            for v in data["vertices"])
        edges = tuple(
            ReebEdge(str(e["id"]), str(e["lower"]), str(e["upper"]),
                     EdgeLabel(e["label"]), witness=e.get("witness"))
            for e in data["edges"])
        lo = float(data["lo"])
        hi = float(data["hi"])
        meta = data.get("meta")
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedGraph("bad graph payload: %s" % exc) from None
    return ReebGraph(vertices, edges, lo, hi, meta=meta)


def graph_dumps(g: ReebGraph) -> str:
    """Serialize to compact JSON; levels keep full float precision, so the
    text round-trips bit-exactly."""
    return json.dumps(graph_to_dict(g), separators=(",", ":"))


def graph_loads(text: str) -> ReebGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedGraph("not valid JSON: %s" % exc) from None
    if not isinstance(data, dict):
        raise MalformedGraph("graph payload must be a JSON object")
    return graph_from_dict(data)
