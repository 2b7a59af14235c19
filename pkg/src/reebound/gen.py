"""Random valid graphs, and a deliberately naive assignment oracle.

random_reeb grows a graph left to right as a set of live strands.  Every
event is one of the legal local patterns at a saddle (split or merge,
with the essential/inessential labels of the three ends drawn from the
allowed combinations), or a center birth/death on an inessential strand.
At least one essential strand is kept alive at every level, which makes
the coverage rule hold by construction; saddle parity and the center
rule hold because only legal patterns are emitted.

naive_assign re-derives the assignment with none of the sweep's
bookkeeping: every round it rescans all vertices (in a randomized order)
for valency-two copies, recomputes eligibility and the frontier from
scratch, and asserts that exactly one vertex is eligible.  Its output map
must coincide with assign_all's.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    BrokenUniqueness,
    GenerationFailed,
    NonConsecutiveFrontier,
    NoLowerBoundary,
    UnassignedFrontier,
)
from .assign import (
    STEP0,
    STEP1,
    STEP2,
    PartialAssignment,
    TraceEntry,
)
from .graph import (
    EdgeLabel,
    EssentialSubgraph,
    ReebEdge,
    ReebGraph,
    ReebVertex,
    VertexKind,
)

MAX_SADDLES = 10_000

# Saddle patterns as (consumed labels, produced labels); E essential,
# I inessential.  Splits consume one strand, merges consume two.
_PATTERNS = {
    "E>EE": (("E",), ("E", "E")),
    "I>EE": (("I",), ("E", "E")),
    "E>EI": (("E",), ("E", "I")),
    "I>II": (("I",), ("I", "I")),
    "EE>E": (("E", "E"), ("E",)),
    "EE>I": (("E", "E"), ("I",)),
    "EI>E": (("E", "I"), ("E",)),
    "II>I": (("I", "I"), ("I",)),
}


@dataclass(frozen=True)
class GenParams:
    seed: int
    saddle_count: int
    parallel_edge_bias: float = 0.25
    inessential_bias: float = 0.35

    def __post_init__(self):
        if not 0 <= self.saddle_count <= MAX_SADDLES:
            raise GenerationFailed(
                "saddle_count %d outside [0, %d]" % (self.saddle_count, MAX_SADDLES))
        for name in ("parallel_edge_bias", "inessential_bias"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise GenerationFailed("%s %r outside [0, 1]" % (name, p))


class _Strand:
    """A live edge being grown rightwards."""

    __slots__ = ("edge_id", "label", "lower", "twin")

    def __init__(self, edge_id: str, label: str, lower: str,
                 twin: "_Strand | None" = None):
        self.edge_id = edge_id
        self.label = label
        self.lower = lower
        self.twin = twin


def _distinct_levels(rng: random.Random, count: int) -> list[float]:
    levels: set[float] = set()
    while len(levels) < count:
        levels.add(rng.uniform(0.02, 0.98))
    return sorted(levels)


def _pattern_weights(n_ess: int, n_ine: int, ines_bias: float) -> dict[str, float]:
    grow_i = 0.2 + 0.8 * ines_bias
    grow_e = 0.2 + 0.8 * (1.0 - ines_bias)
    w = {"E>EE": 1.0}
    if n_ine >= 1:
        w["I>EE"] = grow_e
        w["I>II"] = 0.5 * grow_i
        w["EI>E"] = 0.6
    w["E>EI"] = grow_i
    if n_ess >= 2:
        w["EE>E"] = 1.0
    if n_ess >= 3:
        # consuming two essential strands must leave one alive
        w["EE>I"] = 0.7 * grow_i
    if n_ine >= 2:
        w["II>I"] = 0.3 * grow_i
    return w


def random_reeb(params: GenParams) -> ReebGraph:
    """Deterministic-in-seed generator of graphs that pass validation."""
    rng = random.Random(params.seed)
    lo, hi = 0.0, 1.0

    births = sum(rng.random() < params.inessential_bias
                 for _ in range(params.saddle_count // 2))
    deaths = sum(rng.random() < params.inessential_bias
                 for _ in range(params.saddle_count // 3))
    kinds = (["saddle"] * params.saddle_count + ["birth"] * births
             + ["death"] * deaths)
    rng.shuffle(kinds)
    levels = _distinct_levels(rng, len(kinds))

    vertices: list[ReebVertex] = []
    edges: list[ReebEdge] = []
    vertex_n = 0
    edge_n = 0

    def new_vertex(level: float, kind: VertexKind) -> str:
        nonlocal vertex_n
        vid = "v%d" % vertex_n
        vertex_n += 1
        vertices.append(ReebVertex(vid, level, kind))
        return vid

    def open_strand(label: str, lower: str,
                    twin: _Strand | None = None) -> _Strand:
        nonlocal edge_n
        s = _Strand("e%d" % edge_n, label, lower, twin)
        edge_n += 1
        return s

    def close_strand(s: _Strand, upper: str) -> None:
        label = (EdgeLabel.ESSENTIAL if s.label == "E"
                 else EdgeLabel.INESSENTIAL)
        edges.append(ReebEdge(s.edge_id, s.lower, upper, label))

    live: list[_Strand] = [open_strand("E", new_vertex(lo, VertexKind.BOUNDARY_MINUS))]

    def pick(label: str) -> _Strand:
        pool = [s for s in live if s.label == label]
        return pool[rng.randrange(len(pool))]

    def pick_pair(la: str, lb: str) -> tuple[_Strand, _Strand]:
        if la == lb:
            twins = [s for s in live
                     if s.label == la and s.twin in live and s.twin.label == lb
                     and s.twin is not s]
            if twins and rng.random() < params.parallel_edge_bias:
                s = twins[rng.randrange(len(twins))]
                return s, s.twin
            pool = [s for s in live if s.label == la]
            a, b = rng.sample(pool, 2)
            return a, b
        return pick(la), pick(lb)

    for level, kind in zip(levels, kinds):
        n_ine = sum(1 for s in live if s.label == "I")
        if kind == "death" and n_ine == 0:
            kind = "birth"
        if kind == "birth":
            vid = new_vertex(level, VertexKind.CENTER)
            live.append(open_strand("I", vid))
            continue
        if kind == "death":
            s = pick("I")
            vid = new_vertex(level, VertexKind.CENTER)
            close_strand(s, vid)
            live.remove(s)
            continue
        n_ess = len(live) - n_ine
        weights = _pattern_weights(n_ess, n_ine, params.inessential_bias)
        names = sorted(weights)
        name = rng.choices(names, weights=[weights[n] for n in names])[0]
        consumed_labels, produced_labels = _PATTERNS[name]
        vid = new_vertex(level, VertexKind.SADDLE)
        if len(consumed_labels) == 1:
            consumed = [pick(consumed_labels[0])]
        else:
            consumed = list(pick_pair(*consumed_labels))
        for s in consumed:
            close_strand(s, vid)
            live.remove(s)
        produced = [open_strand(lb, vid) for lb in produced_labels]
        if len(produced) == 2:
            produced[0].twin = produced[1]
            produced[1].twin = produced[0]
        live.extend(produced)

    for s in live:
        close_strand(s, new_vertex(hi, VertexKind.BOUNDARY_PLUS))

    meta = {
        "generator": {
            "seed": params.seed,
            "saddle_count": params.saddle_count,
            "parallel_edge_bias": params.parallel_edge_bias,
            "inessential_bias": params.inessential_bias,
        }
    }
    return ReebGraph(tuple(vertices), tuple(edges), lo, hi, meta=meta)


def naive_assign(g: EssentialSubgraph,
                 rng: random.Random | None = None) -> PartialAssignment:
    """Reference assignment by brute rescanning; see the module docstring.

    ``rng`` only shuffles scan orders; the resulting map must not depend
    on it.
    """
    rng = rng if rng is not None else random.Random(0)
    if not g.boundary_minus:
        raise NoLowerBoundary("no lower-boundary vertex in the subgraph")
    assigned: dict[str, int] = {}
    trace: list[TraceEntry] = []

    seeded = sorted({eid for vid in g.boundary_minus for eid in g.incident(vid)})
    for eid in seeded:
        assigned[eid] = 1
    trace.append(TraceEntry(STEP0, None, tuple(seeded), 1))

    all_edges = [e.id for e in g.edges]
    all_levels = sorted({v.level for v in g.vertices} | {g.lo})

    def spanning_at(probe: float) -> list[str]:
        return [eid for eid in all_edges
                if g.span(eid)[0] < probe < g.span(eid)[1]]

    while True:
        changed = True
        while changed:
            changed = False
            order = [v.id for v in g.vertices if g.degree(v.id) == 2]
            rng.shuffle(order)
            for vid in order:
                e1, e2 = g.incident(vid)
                have1, have2 = e1 in assigned, e2 in assigned
                if have1 == have2:
                    continue
                src, dst = (e1, e2) if have1 else (e2, e1)
                assigned[dst] = assigned[src]
                trace.append(TraceEntry(STEP1, vid, (dst,), assigned[src]))
                changed = True

        if all(eid in assigned for eid in all_edges):
            break

        eligible = []
        for vid in g.interior:
            if all(eid in assigned for eid in g.incident(vid)):
                continue
            left_done = all(
                eid in assigned for eid in all_edges
                if g.span(eid)[0] < g.level(vid))
            if left_done:
                eligible.append(vid)
        if len(eligible) != 1:
            raise BrokenUniqueness(
                "eligible vertices: %s" % (", ".join(sorted(eligible)) or "none"))
        vid = eligible[0]
        prev = max(lv for lv in all_levels if lv < g.level(vid))
        probe = (prev + g.level(vid)) / 2.0
        frontier = spanning_at(probe)
        if any(eid not in assigned for eid in frontier):
            raise UnassignedFrontier("unassigned frontier at %s" % vid)
        values = sorted({assigned[eid] for eid in frontier})
        if len(values) == 1:
            value = values[0] + 1
        elif len(values) == 2 and values[1] - values[0] == 1:
            value = values[1]
        else:
            raise NonConsecutiveFrontier("frontier of %s carries %r" % (vid, values))
        todo = [eid for eid in g.incident(vid) if eid not in assigned]
        rng.shuffle(todo)
        for eid in todo:
            assigned[eid] = value
        trace.append(TraceEntry(STEP2, vid, tuple(sorted(todo)), value))

    return PartialAssignment(assigned, tuple(trace))
