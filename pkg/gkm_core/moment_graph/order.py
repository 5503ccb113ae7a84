"""The partial order on vertices: orientation, down-degrees, up-sets and the
processing order used by the flow-up construction."""

from __future__ import annotations

import fractions

import networkx as nx

from gkm_core.exceptions import GKMOrientationError
from gkm_core.moment_graph.models import Edge, MomentGraph
from gkm_core.moment_graph.validation import as_digraph


def down_degree(g: MomentGraph, v: str) -> int:
    g.require(v)
    return sum(1 for e in g.edges if e.north == v)


def down_degrees(g: MomentGraph) -> dict[str, int]:
    degrees = {name: 0 for name in g.names}
    for e in g.edges:
        degrees[e.north] += 1
    return degrees


def orient_from_xi(g: MomentGraph) -> MomentGraph:
    """Points every edge towards the endpoint with larger <position, xi>.

    Directions are kept as lines; an edge that gets reversed stores the negated
    form so north - south stays a positive multiple of it.
    """
    if g.xi is None:
        raise GKMOrientationError("orienting a graph needs xi")
    if not g.has_positions():
        missing = [v.name for v in g.vertices if v.position is None]
        raise GKMOrientationError(f"vertices without positions: {', '.join(missing)}")

    edges = []
    for e in g.edges:
        rise = g.height(e.north) - g.height(e.south)
        if e.direction.pair(g.xi) == 0 or rise == 0:
            raise GKMOrientationError(f"xi is not generic on edge {e}")
        if rise > 0:
            edges.append(e)
        else:
            edges.append(Edge(south=e.north, north=e.south, direction=-e.direction))
    return g.model_copy(update={"edges": tuple(edges)})


def palais_smale_check(g: MomentGraph) -> tuple[bool, list[Edge]]:
    """Along every edge the north pole must have strictly more downward edges
    than the south pole."""
    degrees = down_degrees(g)
    violating = [e for e in g.edges if degrees[e.north] <= degrees[e.south]]
    return not violating, violating


def up_set(g: MomentGraph, v: str) -> set[str]:
    """All w with w >= v."""
    g.require(v)
    return nx.descendants(as_digraph(g), v) | {v}


def is_above(g: MomentGraph, w: str, v: str) -> bool:
    return w in up_set(g, v)


def linear_extension(g: MomentGraph) -> list[str]:
    """A linear extension of the partial order, preferring smaller down-degree,
    then smaller <position, xi>, then name."""
    degrees = down_degrees(g)

    def key(name: str):
        height = g.height(name)
        return (
            degrees[name],
            height if height is not None else fractions.Fraction(0),
            name,
        )

    return list(nx.lexicographical_topological_sort(as_digraph(g), key=key))
