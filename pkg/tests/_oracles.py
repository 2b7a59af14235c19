"""Independent test oracles, deliberately written with different machinery
than the production code: explicit named cells and BFS instead of indexed
union-find, and direct level-set component counting."""
from __future__ import annotations

from collections import deque


def naive_cut_euler(surface, field, cycle):
    """Per-component (Euler characteristic, boundary circles) after cutting
    along the cycle, recomputed from an explicitly named cell complex."""
    level = cycle.level
    vals = field.values
    crossed_edges = {tuple(sorted(p)) for p in cycle.edge_pairs()}
    crossed_tris = {t for t, _, _ in cycle.crossings}

    def side(value):
        return "lo" if value < level else "hi"

    # faces and their boundary edge cells
    face_edges: dict[tuple, list[tuple]] = {}
    for t, (a, b, c) in enumerate(surface.triangles):
        pairs = [tuple(sorted(p)) for p in ((a, b), (b, c), (c, a))]
        if t not in crossed_tris:
            cells = []
            for p in pairs:
                cells.append(("E", p, "all"))
            face_edges[("F", t, "all")] = cells
        else:
            for s in ("lo", "hi"):
                cells = [("C", t, s)]
                for p in pairs:
                    if p in crossed_edges:
                        cells.append(("E", p, s))
                    elif side(vals[p[0]]) == s and side(vals[p[1]]) == s:
                        cells.append(("E", p, "all"))
                face_edges[("F", t, s)] = cells

    # edge cells and their vertex cells
    edge_verts: dict[tuple, list[tuple]] = {}
    for cell_list in face_edges.values():
        for cell in cell_list:
            if cell in edge_verts:
                continue
            kind = cell[0]
            if kind == "E" and cell[2] == "all":
                _, (a, b), _ = cell
                edge_verts[cell] = [("V", a), ("V", b)]
            elif kind == "E":
                _, (a, b), s = cell
                base = a if side(vals[a]) == s else b
                edge_verts[cell] = [("V", base), ("X", (a, b), s)]
            else:
                _, t, s = cell
                xs = [p for p in
                      (tuple(sorted(q)) for q in _tri_pairs(surface, t))
                      if p in crossed_edges]
                edge_verts[cell] = [("X", p, s) for p in xs]

    adjacency: dict[tuple, set[tuple]] = {}

    def link(x, y):
        adjacency.setdefault(x, set()).add(y)
        adjacency.setdefault(y, set()).add(x)

    for face, cells in face_edges.items():
        for cell in cells:
            link(face, cell)
    for edge, cells in edge_verts.items():
        for cell in cells:
            link(edge, cell)

    seen: set[tuple] = set()
    out = []
    for start in sorted(adjacency):
        if start in seen:
            continue
        counts = {"F": 0, "E": 0, "C": 0, "V": 0, "X": 0}
        sides = set()
        queue = deque([start])
        seen.add(start)
        while queue:
            cell = queue.popleft()
            counts[cell[0]] += 1
            if cell[0] == "C":
                sides.add(cell[2])
            for nxt in adjacency[cell]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        chi = (counts["V"] + counts["X"]) - (counts["E"] + counts["C"]) \
            + counts["F"]
        out.append((chi, len(sides)))
    return tuple(sorted(out))


def _tri_pairs(surface, t):
    a, b, c = surface.triangles[t]
    return ((a, b), (b, c), (c, a))


def naive_is_inessential(surface, field, cycle) -> bool:
    return any(chi == 1 for chi, _ in naive_cut_euler(surface, field, cycle))


def count_level_components(surface, field, level) -> int:
    """Components of the level set, from scratch via edge adjacency."""
    vals = field.values
    crossed = set()
    for eid, (a, b) in enumerate(surface.edges):
        if min(vals[a], vals[b]) < level < max(vals[a], vals[b]):
            crossed.add(eid)
    adjacency: dict[int, set[int]] = {e: set() for e in crossed}
    for t in range(surface.n_triangles):
        hits = [e for e in surface._tri_edges[t] if e in crossed]
        if len(hits) == 2:
            adjacency[hits[0]].add(hits[1])
            adjacency[hits[1]].add(hits[0])
    comps = 0
    seen: set[int] = set()
    for e in sorted(crossed):
        if e in seen:
            continue
        comps += 1
        queue = deque([e])
        seen.add(e)
        while queue:
            cur = queue.popleft()
            for nxt in adjacency[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return comps
