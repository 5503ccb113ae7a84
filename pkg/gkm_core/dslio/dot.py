from __future__ import annotations

import fractions

from graphviz import Digraph

from gkm_core.moment_graph.models import MomentGraph


def _coordinate(q: fractions.Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return format(float(q), ".6g")


def moment_digraph(g: MomentGraph, name: str = "moment_graph") -> Digraph:
    """One node per vertex and one labelled edge south -> north. Positioned
    vertices are pinned at their first two coordinates (the first one only, on
    a line, for rank 1)."""
    dot = Digraph(name=name)
    for v in g.vertices:
        attributes = {}
        if v.position is not None:
            x = v.position[0]
            y = v.position[1] if len(v.position) > 1 else fractions.Fraction(0)
            attributes["pos"] = f"{_coordinate(x)},{_coordinate(y)}!"
        dot.node(v.name, label=v.name, **attributes)
    for e in g.edges:
        dot.edge(e.south, e.north, label=str(e.direction))
    return dot


def emit_dot(g: MomentGraph) -> str:
    return moment_digraph(g).source
