"""Scalar fields on triangulated closed orientable surfaces.

The front-end turns an OFF mesh plus a per-vertex scalar file into a
labeled Reeb graph: a level sweep in increasing field order tracks the
connected components of the level sets, emitting a center vertex at every
local extremum and a saddle vertex wherever two components merge or one
splits.  Each graph edge gets a witness level cycle sampled inside its
span, and is labeled essential or inessential by cutting the surface
along the witness and asking whether either side is a disk.

Ties between field values are broken symbolically by vertex index, so
every comparison the sweep makes is decided; criticality is the standard
lower-link rule (empty lower link: minimum; empty upper link: maximum;
two lower arcs: saddle; three or more: rejected as degenerate).  Cutting
is exact integer bookkeeping on a re-triangulated complex; no geometric
tolerances anywhere.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from math import isfinite, nextafter

from .errors import (
    DegenerateField,
    MissingWitness,
    NotAManifold,
    NotOrientable,
    OpenCycle,
    ParseError,
)
from .graph import EdgeLabel, ReebEdge, ReebGraph, ReebVertex, VertexKind

Edge = tuple[int, int]


@dataclass(frozen=True)
class LevelCycle:
    """One contour of a level set, as triangle crossings.

    ``crossings`` lists (triangle id, entry edge, exit edge) around the
    loop; edges are sorted vertex-index pairs.  The exit of each crossing
    is the entry of the next, cyclically.
    """

    level: float
    crossings: tuple[tuple[int, Edge, Edge], ...]

    def edge_pairs(self) -> set[Edge]:
        out: set[Edge] = set()
        for _, entry, exit_ in self.crossings:
            out.add(entry)
            out.add(exit_)
        return out

    def to_payload(self) -> dict:
        return {
            "level": self.level,
            "crossings": [[t, list(a), list(b)] for t, a, b in self.crossings],
        }

    @classmethod
    def from_payload(cls, data: dict) -> "LevelCycle":
        try:
            crossings = tuple(
                (int(t), (int(a[0]), int(a[1])), (int(b[0]), int(b[1])))
                for t, a, b in data["crossings"])
            return cls(float(data["level"]), crossings)
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise ParseError("bad level-cycle payload: %s" % exc) from None


def _edge_key(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class TriangulatedSurface:
    """A closed, connected, orientable triangulated surface.

    Construction validates everything: every edge borders exactly two
    triangles, every vertex link is a single cycle, the triangles admit a
    consistent orientation (re-orienting as needed), and the triangle
    adjacency graph is connected.  Positions are carried but never enter
    any computation here; all the topology is combinatorial.
    """

    def __init__(self, positions, triangles):
        self.positions = tuple(tuple(float(x) for x in p) for p in positions)
        n = len(self.positions)
        tris: list[tuple[int, int, int]] = []
        for t in triangles:
            a, b, c = (int(t[0]), int(t[1]), int(t[2]))
            if len(set((a, b, c))) != 3:
                raise ValueError("degenerate triangle %r" % (t,))
            if not all(0 <= x < n for x in (a, b, c)):
                raise ValueError("triangle %r references missing vertex" % (t,))
            tris.append((a, b, c))
        if not tris:
            raise NotAManifold("no triangles")

        edge_tris: dict[Edge, list[int]] = {}
        for ti, (a, b, c) in enumerate(tris):
            for u, v in ((a, b), (b, c), (c, a)):
                edge_tris.setdefault(_edge_key(u, v), []).append(ti)
        for e, owners in edge_tris.items():
            if len(owners) != 2:
                raise NotAManifold(
                    "edge %r borders %d triangles, expected 2" % (e, len(owners)))

        self.triangles = self._orient(tris, edge_tris)

        self.edges: list[Edge] = sorted(edge_tris)
        self.edge_index: dict[Edge, int] = {e: i for i, e in enumerate(self.edges)}
        self.edge_tris: list[tuple[int, int]] = [
            (edge_tris[e][0], edge_tris[e][1]) for e in self.edges]

        self._tri_edges: list[tuple[int, int, int]] = []
        for a, b, c in self.triangles:
            self._tri_edges.append((
                self.edge_index[_edge_key(a, b)],
                self.edge_index[_edge_key(b, c)],
                self.edge_index[_edge_key(c, a)],
            ))

        self.vertex_tri: list[int] = [-1] * n
        for ti, (a, b, c) in enumerate(self.triangles):
            for u in (a, b, c):
                if self.vertex_tri[u] < 0:
                    self.vertex_tri[u] = ti
        if any(t < 0 for t in self.vertex_tri):
            raise NotAManifold("isolated vertex present")

        self.links: list[tuple[int, ...]] = self._build_links()

    @staticmethod
    def _orient(tris, edge_tris) -> tuple[tuple[int, int, int], ...]:
        adj: dict[int, list[int]] = {i: [] for i in range(len(tris))}
        for owners in edge_tris.values():
            a, b = owners
            adj[a].append(b)
            adj[b].append(a)
        oriented: list[tuple[int, int, int] | None] = [None] * len(tris)
        oriented[0] = tris[0]
        stack = [0]
        while stack:
            ti = stack.pop()
            a, b, c = oriented[ti]
            directed = {(a, b), (b, c), (c, a)}
            for tj in adj[ti]:
                x, y, z = tris[tj] if oriented[tj] is None else oriented[tj]
                shared_same = {(x, y), (y, z), (z, x)} & directed
                want = (x, y, z) if not shared_same else (x, z, y)
                if oriented[tj] is None:
                    oriented[tj] = want
                    stack.append(tj)
                elif oriented[tj] != want and oriented[tj] not in (
                        (want[1], want[2], want[0]), (want[2], want[0], want[1])):
                    raise NotOrientable("triangles %d and %d disagree" % (ti, tj))
        if any(t is None for t in oriented):
            raise NotAManifold("surface is not connected")
        return tuple(oriented)

    def _build_links(self) -> list[tuple[int, ...]]:
        succ: list[dict[int, int]] = [dict() for _ in self.positions]
        for a, b, c in self.triangles:
            for v, x, y in ((a, b, c), (b, c, a), (c, a, b)):
                if x in succ[v]:
                    raise NotAManifold("pinched link at vertex %d" % v)
                succ[v][x] = y
        links: list[tuple[int, ...]] = []
        for v, nxt in enumerate(succ):
            start = min(nxt)
            ring = [start]
            cur = nxt[start]
            while cur != start:
                ring.append(cur)
                if cur not in nxt or len(ring) > len(nxt):
                    raise NotAManifold("broken link at vertex %d" % v)
                cur = nxt[cur]
            if len(ring) != len(nxt):
                raise NotAManifold("link of vertex %d is not a single cycle" % v)
            links.append(tuple(ring))
        return links

    @property
    def n_vertices(self) -> int:
        return len(self.positions)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_triangles(self) -> int:
        return len(self.triangles)

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_triangles

    def to_off_text(self) -> str:
        lines = ["OFF", "%d %d %d" % (self.n_vertices, self.n_triangles, 0)]
        for p in self.positions:
            lines.append(" ".join(repr(x) for x in p))
        for a, b, c in self.triangles:
            lines.append("3 %d %d %d" % (a, b, c))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_off_text(cls, text: str) -> "TriangulatedSurface":
        tokens = []
        for line in text.splitlines():
            body = line.split("#", 1)[0]
            tokens.extend(body.split())
        it = iter(tokens)

        def take(what):
            try:
                return next(it)
            except StopIteration:
                raise ParseError("OFF data ends early, expected %s" % what) from None

        header = take("header")
        if header != "OFF":
            raise ParseError("not an OFF file (header %r)" % header)
        try:
            nv, nf = int(take("vertex count")), int(take("face count"))
            int(take("edge count"))
            positions = [tuple(float(take("coordinate")) for _ in range(3))
                         for _ in range(nv)]
            faces = []
            for _ in range(nf):
                k = int(take("face size"))
                if k != 3:
                    raise ParseError("face with %d sides; only triangles supported" % k)
                faces.append(tuple(int(take("vertex index")) for _ in range(3)))
        except ValueError as exc:
            raise ParseError("bad OFF token: %s" % exc) from None
        return cls(positions, faces)

    @classmethod
    def load_off(cls, path) -> "TriangulatedSurface":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_off_text(fh.read())


@dataclass(frozen=True)
class ScalarField:
    """One value per surface vertex; ties are broken by vertex index."""

    values: tuple[float, ...]

    def __post_init__(self):
        for i, v in enumerate(self.values):
            if not isfinite(v):
                raise DegenerateField("non-finite value %r at vertex %d" % (v, i))

    def key(self, i: int) -> tuple[float, int]:
        return (self.values[i], i)

    @classmethod
    def from_text(cls, text: str) -> "ScalarField":
        vals = []
        for line in text.splitlines():
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            for tok in body.split():
                try:
                    vals.append(float(tok))
                except ValueError:
                    raise ParseError("bad scalar value %r" % tok) from None
        return cls(tuple(vals))

    @classmethod
    def load(cls, path) -> "ScalarField":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_text(fh.read())

    def to_text(self) -> str:
        return "\n".join(repr(v) for v in self.values) + "\n"


def _check_pair(surface: TriangulatedSurface, field: ScalarField) -> None:
    if len(field.values) != surface.n_vertices:
        raise ValueError("field has %d values for %d vertices"
                         % (len(field.values), surface.n_vertices))


def pl_criticality(surface: TriangulatedSurface,
                   field: ScalarField) -> tuple[list[int], list[int], list[int]]:
    """(minima, saddles, maxima) vertex indices by the lower-link rule.

    Raises DegenerateField on a monkey saddle (three or more lower-link
    arcs); subdividing the star resolves those.
    """
    _check_pair(surface, field)
    mins: list[int] = []
    saddles: list[int] = []
    maxes: list[int] = []
    for v in range(surface.n_vertices):
        ring = surface.links[v]
        kv = field.key(v)
        low = [field.key(u) < kv for u in ring]
        arcs = sum(1 for i in range(len(ring)) if low[i] and not low[i - 1])
        if arcs == 0:
            (maxes if all(low) else mins).append(v)
        elif arcs == 2:
            saddles.append(v)
        elif arcs > 2:
            raise DegenerateField(
                "monkey saddle at vertex %d (%d descending sectors); "
                "subdivide the mesh around it" % (v, arcs))
    return mins, saddles, maxes


def _lower_arcs(ring, low) -> list[list[int]]:
    """Maximal runs of ring positions whose ``low`` flag is set."""
    n = len(ring)
    if all(low):
        return [list(range(n))]
    start = next(i for i in range(n) if not low[i])
    arcs: list[list[int]] = []
    cur: list[int] = []
    for off in range(1, n + 1):
        i = (start + off) % n
        if low[i]:
            cur.append(i)
        elif cur:
            arcs.append(cur)
            cur = []
    return arcs


class _ContourTracker:
    """Level-set components during the sweep, as explicit edge sets."""

    def __init__(self):
        self.owner: dict[int, int] = {}
        self.members: dict[int, set[int]] = {}
        self._next = 0

    def new(self, edges: set[int]) -> int:
        cid = self._next
        self._next += 1
        self.members[cid] = set(edges)
        for e in edges:
            self.owner[e] = cid
        return cid

    def drop(self, cid: int) -> None:
        for e in self.members.pop(cid):
            del self.owner[e]

    def splice(self, cid: int, dead: set[int], born: set[int]) -> None:
        m = self.members[cid]
        for e in dead:
            m.discard(e)
            del self.owner[e]
        for e in born:
            m.add(e)
            self.owner[e] = cid

    def absorb(self, keep: int, gone: int) -> None:
        for e in self.members[gone]:
            self.owner[e] = keep
        self.members[keep] |= self.members.pop(gone)


def _trace(surface: TriangulatedSurface, crossed, start_edge: int):
    """Walk one contour; ``crossed(eid)`` decides which edges it meets.

    Returns the crossings as (triangle, entry eid, exit eid), starting at
    ``start_edge`` through its lower-numbered triangle.
    """
    def other_crossed(tri: int, eid: int) -> int:
        hits = [x for x in surface._tri_edges[tri] if x != eid and crossed(x)]
        if len(hits) != 1:
            raise OpenCycle("triangle %d has %d other crossed edges"
                            % (tri, len(hits)))
        return hits[0]

    t0 = min(surface.edge_tris[start_edge])
    out = []
    e, t = start_edge, t0
    while True:
        x = other_crossed(t, e)
        out.append((t, e, x))
        ta, tb = surface.edge_tris[x]
        e, t = x, (tb if ta == t else ta)
        if (e, t) == (start_edge, t0):
            return out


def _normalize_crossings(crossings):
    k = min(range(len(crossings)), key=lambda i: crossings[i])
    return crossings[k:] + crossings[:k]


def _cycle_from_crossings(surface: TriangulatedSurface, level: float,
                          crossings) -> LevelCycle:
    pairs = tuple((t, surface.edges[a], surface.edges[b])
                  for t, a, b in _normalize_crossings(crossings))
    return LevelCycle(level, pairs)


def level_cycles(surface: TriangulatedSurface, field: ScalarField,
                 level: float) -> list[LevelCycle]:
    """All contours of the level set at a non-vertex level."""
    _check_pair(surface, field)
    if level in set(field.values):
        raise ValueError("level %r hits a vertex value; pick another" % level)

    def crossed(eid: int) -> bool:
        a, b = surface.edges[eid]
        va, vb = field.values[a], field.values[b]
        return min(va, vb) < level < max(va, vb)

    todo = sorted(eid for eid in range(surface.n_edges) if crossed(eid))
    seen: set[int] = set()
    out: list[LevelCycle] = []
    for eid in todo:
        if eid in seen:
            continue
        crossings = _trace(surface, crossed, eid)
        for _, e1, e2 in crossings:
            seen.add(e1)
            seen.add(e2)
        out.append(_cycle_from_crossings(surface, level, crossings))
    return out


def _pick_witness_level(a: float, b: float, fraction: float,
                        sorted_values: list[float]) -> float:
    """A level strictly inside (a, b) avoiding every vertex value.

    Works gap by gap between the vertex values inside (a, b), starting at
    the gap containing the requested fraction and spiralling outward;
    gaps too narrow to hold a representable float are skipped.
    """
    inside = sorted_values[bisect_right(sorted_values, a):
                           bisect_left(sorted_values, b)]
    bounds = [a] + inside + [b]
    t0 = a + (b - a) * fraction
    if not a < t0 < b:
        t0 = (a + b) / 2.0
    k = min(max(bisect_right(bounds, t0) - 1, 0), len(bounds) - 2)
    order = [k]
    for d in range(1, len(bounds) - 1):
        if k + d <= len(bounds) - 2:
            order.append(k + d)
        if k - d >= 0:
            order.append(k - d)
    for idx in order:
        lo, hi = bounds[idx], bounds[idx + 1]
        mid = (lo + hi) / 2.0
        if lo < mid < hi:
            return mid
        step = nextafter(lo, hi)
        if lo < step < hi:
            return step
    raise DegenerateField("no representable level strictly inside (%r, %r)"
                          % (a, b))


def build_reeb(surface: TriangulatedSurface, field: ScalarField,
               witness_fraction: float = 0.5) -> ReebGraph:
    """Reeb graph of the field by an increasing-order level sweep.

    Vertices are the PL-critical mesh vertices (ids ``v<mesh index>``,
    centers at extrema, saddles where components merge or split), at their
    field values; edges are the contour classes in between, created in
    sweep order (ids ``e0``, ``e1``, ...), each carrying a witness cycle
    sampled at ``witness_fraction`` of its span (nudged off vertex
    values).  Labels are left inessential; run :func:`label_reeb` to
    classify.  The window is padded slightly past the extreme values so
    every vertex is interior.
    """
    _check_pair(surface, field)
    if not 0.0 < witness_fraction < 1.0:
        raise ValueError("witness_fraction must be inside (0, 1)")
    mins, saddles, maxes = pl_criticality(surface, field)
    crit_values = sorted(field.values[v] for v in mins + saddles + maxes)
    for x, y in zip(crit_values, crit_values[1:]):
        if x == y:
            raise DegenerateField(
                "two critical vertices share the value %r; perturb the field" % x)

    key = field.key
    order = sorted(range(surface.n_vertices), key=key)
    star_edge = [
        {u: surface.edge_index[_edge_key(u, v)] for u in surface.links[v]}
        for v in range(surface.n_vertices)
    ]

    tracker = _ContourTracker()
    vertices: list[ReebVertex] = []
    arcs: list[dict] = []
    arc_of: dict[int, int] = {}

    def pick_rep(candidates, event_value: float) -> int:
        # A witness representative must still be crossed at value levels
        # above the event; edges whose upper endpoint only wins the
        # index tie-break die at the same value and cannot serve.  When
        # every candidate is flat, the segment is value-degenerate and a
        # later segment at the same value will be used instead.
        rising = [e for e in candidates
                  if max(field.values[surface.edges[e][0]],
                         field.values[surface.edges[e][1]]) > event_value]
        return min(rising) if rising else min(candidates)

    def open_arc(cid: int, vid: str, v: int) -> None:
        rep = pick_rep(tracker.members[cid], field.values[v])
        arcs.append({"lower_vid": vid, "lower_val": field.values[v],
                     "upper_vid": None, "upper_val": None,
                     "segments": [(key(v), rep)]})
        arc_of[cid] = len(arcs) - 1

    def close_arc(cid: int, vid: str, v: int) -> None:
        arc = arcs[arc_of.pop(cid)]
        arc["upper_vid"] = vid
        arc["upper_val"] = field.values[v]

    for v in order:
        ring = surface.links[v]
        kv = key(v)
        low = [key(u) < kv for u in ring]
        lower_arcs = _lower_arcs(ring, low)
        upper_arcs = _lower_arcs(ring, [not x for x in low])
        n_lo, n_up = len(lower_arcs), len(upper_arcs)
        dead = {star_edge[v][u] for i, u in enumerate(ring) if low[i]}
        born = {star_edge[v][u] for i, u in enumerate(ring) if not low[i]}

        if n_lo == 0:
            vid = "v%d" % v
            vertices.append(ReebVertex(vid, field.values[v], VertexKind.CENTER))
            cid = tracker.new(born)
            open_arc(cid, vid, v)
            continue
        if n_up == 0:
            vid = "v%d" % v
            vertices.append(ReebVertex(vid, field.values[v], VertexKind.CENTER))
            cid = tracker.owner[next(iter(dead))]
            if tracker.members[cid] != dead:
                raise AssertionError("contour at maximum %d is not its star" % v)
            close_arc(cid, vid, v)
            tracker.drop(cid)
            continue
        if n_lo == 1 and n_up == 1:
            cid = tracker.owner[next(iter(dead))]
            if any(tracker.owner[e] != cid for e in dead):
                raise AssertionError("torn contour at regular vertex %d" % v)
            tracker.splice(cid, dead, born)
            arcs[arc_of[cid]]["segments"].append(
                (kv, pick_rep(born, field.values[v])))
            continue
        if n_lo != 2 or n_up != 2:
            raise DegenerateField(
                "monkey saddle at vertex %d; subdivide the mesh around it" % v)

        vid = "v%d" % v
        vertices.append(ReebVertex(vid, field.values[v], VertexKind.SADDLE))
        c1 = tracker.owner[star_edge[v][ring[lower_arcs[0][0]]]]
        c2 = tracker.owner[star_edge[v][ring[lower_arcs[1][0]]]]
        if c1 != c2:
            close_arc(c1, vid, v)
            close_arc(c2, vid, v)
            keep, gone = (c1, c2) if (len(tracker.members[c1])
                                      >= len(tracker.members[c2])) else (c2, c1)
            tracker.absorb(keep, gone)
            tracker.splice(keep, dead, born)
            open_arc(keep, vid, v)
        else:
            close_arc(c1, vid, v)
            tracker.splice(c1, dead, born)

            def crossed_above(eid: int, _kv=kv) -> bool:
                a, b = surface.edges[eid]
                ka, kb = key(a), key(b)
                if kb < ka:
                    ka, kb = kb, ka
                return ka <= _kv < kb

            rep1 = star_edge[v][ring[upper_arcs[0][0]]]
            rep2 = star_edge[v][ring[upper_arcs[1][0]]]
            side_a: set[int] = set()
            for _, entry, exit_ in _trace(surface, crossed_above, rep1):
                side_a.add(entry)
                side_a.add(exit_)
            if rep2 in side_a or not side_a <= tracker.members[c1]:
                raise AssertionError("level cycle failed to split at vertex %d" % v)
            side_b = tracker.members[c1] - side_a
            cid_a = tracker.new(side_a)
            tracker.members[c1] = side_b
            for e in side_b:
                tracker.owner[e] = c1
            open_arc(cid_a, vid, v)
            open_arc(c1, vid, v)

    if tracker.members:
        raise AssertionError("sweep finished with live contours")

    sorted_values = sorted(set(field.values))
    lo_val, hi_val = sorted_values[0], sorted_values[-1]
    pad = (hi_val - lo_val) / 16.0
    edges: list[ReebEdge] = []
    for i, arc in enumerate(arcs):
        a, b = arc["lower_val"], arc["upper_val"]
        t = _pick_witness_level(a, b, witness_fraction, sorted_values)
        rep = None
        for seg_key, seg_rep in reversed(arc["segments"]):
            if seg_key[0] < t:
                rep = seg_rep
                break
        if rep is None:
            raise AssertionError("no witness segment below level %r" % t)

        def crossed(eid: int, _t=t) -> bool:
            x, y = surface.edges[eid]
            vx, vy = field.values[x], field.values[y]
            return min(vx, vy) < _t < max(vx, vy)

        witness = _cycle_from_crossings(surface, t,
                                        _trace(surface, crossed, rep))
        edges.append(ReebEdge("e%d" % i, arc["lower_vid"], arc["upper_vid"],
                              EdgeLabel.INESSENTIAL, witness=witness))

    meta = {"builder": {"witness_fraction": witness_fraction,
                        "triangles": surface.n_triangles}}
    return ReebGraph(tuple(vertices), tuple(edges),
                     lo_val - pad, hi_val + pad, meta=meta)


# -- cutting along a cycle ----------------------------------------------------

def _resolve_cycle(surface: TriangulatedSurface, field: ScalarField,
                   cycle: LevelCycle):
    """Validate a cycle against the surface; return (tris, entry eids)."""
    if not cycle.crossings:
        raise OpenCycle("empty cycle")
    level = cycle.level
    tris: list[int] = []
    eids: list[int] = []
    n = len(cycle.crossings)
    for i, (t, entry, exit_) in enumerate(cycle.crossings):
        nxt = cycle.crossings[(i + 1) % n]
        if entry == exit_:
            raise ValueError("crossing %d enters and exits edge %r"
                             % (i, entry))
        if exit_ != nxt[1]:
            raise OpenCycle("crossing %d exits %r but the next enters %r"
                            % (i, exit_, nxt[1]))
        for pair in (entry, exit_):
            if pair not in surface.edge_index:
                raise ValueError("cycle references missing edge %r" % (pair,))
            va, vb = field.values[pair[0]], field.values[pair[1]]
            if not min(va, vb) < level < max(va, vb):
                raise ValueError(
                    "edge %r is not crossed at level %r" % (pair, level))
        te = set(surface._tri_edges[t])
        if not {surface.edge_index[entry], surface.edge_index[exit_]} <= te:
            raise ValueError("triangle %d does not contain both crossing edges" % t)
        tris.append(t)
        eids.append(surface.edge_index[entry])
    if len(set(tris)) != len(tris):
        raise ValueError("cycle visits a triangle twice")
    return tris, eids


def cut_along(surface: TriangulatedSurface, field: ScalarField,
              cycle: LevelCycle) -> tuple[tuple[int, int], ...]:
    """Cut the surface along the cycle; per-component (Euler, circles).

    Crossed triangles split into the piece below and the piece above the
    cycle's level; the two seam copies stay boundary.  Returns one
    (Euler characteristic, boundary-circle count) pair per component of
    the cut surface, sorted.  The pairs always sum to (Euler of the whole
    surface, 2).
    """
    _check_pair(surface, field)
    tris, eids = _resolve_cycle(surface, field, cycle)
    level = cycle.level
    crossed_tris = set(tris)
    cyc_edges = set(eids)

    pid: dict[tuple[int, str], int] = {}
    n_pieces = 0
    for t in range(surface.n_triangles):
        if t in crossed_tris:
            pid[(t, "b")] = n_pieces
            pid[(t, "a")] = n_pieces + 1
            n_pieces += 2
        else:
            pid[(t, "w")] = n_pieces
            n_pieces += 1

    parent = list(range(n_pieces))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    def piece_for(t: int, value: float) -> int:
        if t in crossed_tris:
            return pid[(t, "b" if value < level else "a")]
        return pid[(t, "w")]

    for eid, (a, b) in enumerate(surface.edges):
        t1, t2 = surface.edge_tris[eid]
        if eid in cyc_edges:
            union(pid[(t1, "b")], pid[(t2, "b")])
            union(pid[(t1, "a")], pid[(t2, "a")])
        else:
            union(piece_for(t1, field.values[a]), piece_for(t2, field.values[a]))

    v_count: dict[int, int] = {}
    e_count: dict[int, int] = {}
    f_count: dict[int, int] = {}

    def bump(counter, root, by=1):
        counter[root] = counter.get(root, 0) + by

    for p in range(n_pieces):
        bump(f_count, find(p))
    for eid, (a, b) in enumerate(surface.edges):
        t1, _ = surface.edge_tris[eid]
        if eid in cyc_edges:
            bump(e_count, find(pid[(t1, "b")]))
            bump(e_count, find(pid[(t1, "a")]))
            bump(v_count, find(pid[(t1, "b")]))
            bump(v_count, find(pid[(t1, "a")]))
        else:
            bump(e_count, find(piece_for(t1, field.values[a])))
    for t in crossed_tris:
        bump(e_count, find(pid[(t, "b")]))
        bump(e_count, find(pid[(t, "a")]))
    for u in range(surface.n_vertices):
        bump(v_count, find(piece_for(surface.vertex_tri[u], field.values[u])))

    below_root = find(pid[(tris[0], "b")])
    above_root = find(pid[(tris[0], "a")])
    out = []
    for root in sorted(f_count):
        chi = v_count.get(root, 0) - e_count.get(root, 0) + f_count[root]
        circles = (root == below_root) + (root == above_root)
        out.append((chi, circles))
    total_chi = sum(c for c, _ in out)
    if total_chi != surface.euler_characteristic() or sum(
            b for _, b in out) != 2:
        raise AssertionError("cut bookkeeping lost cells")
    return tuple(sorted(out))


def classify_essential(surface: TriangulatedSurface, field: ScalarField,
                       cycle: LevelCycle) -> EdgeLabel:
    """Inessential iff cutting along the cycle leaves a disk component."""
    pieces = cut_along(surface, field, cycle)
    for chi, circles in pieces:
        if chi == 1:
            if circles != 1:
                raise AssertionError("disk piece with %d boundary circles" % circles)
            return EdgeLabel.INESSENTIAL
    return EdgeLabel.ESSENTIAL


def label_reeb(surface: TriangulatedSurface, field: ScalarField,
               g: ReebGraph) -> ReebGraph:
    """Label every edge by classifying its witness cycle."""
    edges = []
    for e in g.edges:
        w = e.witness
        if w is None:
            raise MissingWitness("edge %s has no witness cycle" % e.id)
        if isinstance(w, dict):
            w = LevelCycle.from_payload(w)
        label = classify_essential(surface, field, w)
        edges.append(ReebEdge(e.id, e.lower, e.upper, label, witness=w))
    return ReebGraph(g.vertices, tuple(edges), g.lo, g.hi, meta=g.meta)
