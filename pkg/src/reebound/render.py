"""DOT and SVG renderings of a (possibly assigned) graph.

Both layouts put the level on the x axis, reproducing the usual
left-to-right pictures: essential edges are solid blue, inessential ones
dashed gray, and assigned integers annotate the edges.  The SVG uses a
simple strand tracker for the y coordinates: strands occupy slots in a
list, splits insert the sibling next to the parent, merges free a slot,
which keeps crossings low without any real optimization.
"""
from __future__ import annotations

from .graph import EdgeLabel, ReebGraph, VertexKind

_NODE_SHAPE = {
    VertexKind.BOUNDARY_MINUS: "square",
    VertexKind.BOUNDARY_PLUS: "square",
    VertexKind.CENTER: "circle",
    VertexKind.SADDLE: "diamond",
    VertexKind.REGULAR: "point",
}


def _quote(s: str) -> str:
    return '"%s"' % s.replace('"', '\\"')


def to_dot(g: ReebGraph, assignment: dict[str, int] | None = None) -> str:
    """Graphviz text; vertices at the same level share a rank."""
    lines = ["digraph reeb {", "  rankdir=LR;", "  node [fontsize=10];"]
    by_level: dict[float, list[str]] = {}
    for v in g.vertices:
        by_level.setdefault(v.level, []).append(v.id)
        lines.append("  %s [label=%s, shape=%s];"
                     % (_quote(v.id),
                        _quote("%s\\n%g" % (v.id, v.level)),
                        _NODE_SHAPE[v.kind]))
    for level in sorted(by_level):
        lines.append("  { rank=same; %s }"
                     % " ".join("%s;" % _quote(i) for i in sorted(by_level[level])))
    for e in g.edges:
        attrs = []
        if e.label is EdgeLabel.ESSENTIAL:
            attrs.append('color="#1f6fb4"')
            attrs.append("penwidth=2")
        else:
            attrs.append('color="#999999"')
            attrs.append('style="dashed"')
        label = e.id
        if assignment and e.id in assignment:
            label = "%s: %d" % (e.id, assignment[e.id])
        attrs.append("label=%s" % _quote(label))
        lines.append("  %s -> %s [%s];"
                     % (_quote(e.lower), _quote(e.upper), ", ".join(attrs)))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _strand_layout(g: ReebGraph) -> dict[str, float]:
    """y coordinate per vertex from a left-to-right strand sweep."""
    order = sorted(g.vertices, key=lambda v: (v.level, v.id))
    slots: list[str] = []          # open edge ids, bottom to top
    y: dict[str, float] = {}
    starts: dict[str, list[str]] = {}
    for v in order:
        for eid in g.incident(v.id):
            if g.edge(eid).lower == v.id:
                starts.setdefault(v.id, []).append(eid)
    for v in order:
        ins = [eid for eid in g.incident(v.id) if g.edge(eid).upper == v.id]
        outs = sorted(starts.get(v.id, ()))
        positions = sorted(slots.index(eid) for eid in ins if eid in slots)
        if positions:
            y[v.id] = sum(positions) / len(positions)
            anchor = positions[0]
            for eid in sorted(ins, key=slots.index, reverse=True):
                slots.remove(eid)
            for k, eid in enumerate(outs):
                slots.insert(min(anchor + k, len(slots)), eid)
        else:
            y[v.id] = float(len(slots))
            slots.extend(outs)
    return y


def to_svg(g: ReebGraph, assignment: dict[str, int] | None = None,
           width: int = 900, height: int = 480) -> str:
    """Standalone SVG with straight edges: x is the level."""
    y = _strand_layout(g)
    pad = 50.0
    span = g.hi - g.lo
    ymax = max(y.values()) if y else 1.0

    def sx(level: float) -> float:
        return pad + (level - g.lo) / span * (width - 2 * pad)

    def sy(value: float) -> float:
        if ymax == 0:
            return height / 2.0
        return height - pad - value / ymax * (height - 2 * pad)

    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
             'viewBox="0 0 %d %d">' % (width, height, width, height),
             '<rect width="100%" height="100%" fill="white"/>']
    for e in g.edges:
        x1, y1 = sx(g.level(e.lower)), sy(y[e.lower])
        x2, y2 = sx(g.level(e.upper)), sy(y[e.upper])
        if e.label is EdgeLabel.ESSENTIAL:
            style = 'stroke="#1f6fb4" stroke-width="2.5"'
        else:
            style = 'stroke="#999999" stroke-width="1.5" stroke-dasharray="6 4"'
        parts.append('<line x1="%.1f" y1="%.1f" x2="%.1f" y2="%.1f" %s/>'
                     % (x1, y1, x2, y2, style))
        label = e.id
        if assignment and e.id in assignment:
            label = "%s: %d" % (e.id, assignment[e.id])
        parts.append('<text x="%.1f" y="%.1f" font-size="11" fill="#333" '
                     'text-anchor="middle">%s</text>'
                     % ((x1 + x2) / 2, (y1 + y2) / 2 - 5, label))
    for v in g.vertices:
        cx, cy = sx(v.level), sy(y[v.id])
        fill = "#d08436" if v.kind is VertexKind.SADDLE else "#444444"
        parts.append('<circle cx="%.1f" cy="%.1f" r="4" fill="%s"/>'
                     % (cx, cy, fill))
        parts.append('<text x="%.1f" y="%.1f" font-size="10" fill="#000" '
                     'text-anchor="middle">%s</text>' % (cx, cy - 8, v.id))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
