from __future__ import annotations

import fractions
import functools
import typing

import annotated_types
import pydantic

from gkm_core.exceptions import GKMUnknownVertexError
from gkm_core.models_base import FrozenModel, Rational
from gkm_core.polyring import LinearForm

# Largest torus rank accepted from any input.
MAX_RANK = 32


class Vertex(FrozenModel):
    """A torus-fixed point. `position` is its image in t* under the moment map."""

    name: typing.Annotated[str, annotated_types.MinLen(1)]
    position: typing.Optional[tuple[Rational, ...]] = None


class Edge(FrozenModel):
    """The closure of a one-dimensional orbit, oriented from its south pole to
    its north pole and carrying the annihilator of its stabiliser."""

    south: str
    north: str
    direction: LinearForm

    @pydantic.model_validator(mode="after")
    def no_self_loop(self):
        if self.south == self.north:
            raise ValueError(f"self-loop at vertex '{self.south}'")
        return self

    def other(self, vertex: str) -> str:
        return self.north if vertex == self.south else self.south

    def __str__(self):
        return f"{self.south}->{self.north} [{self.direction}]"


class MomentGraph(FrozenModel):
    rank: typing.Annotated[int, annotated_types.Interval(ge=1, le=MAX_RANK)]
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...] = ()
    xi: typing.Optional[tuple[Rational, ...]] = None

    @pydantic.model_validator(mode="after")
    def dimensions_match_rank(self):
        for vertex in self.vertices:
            if vertex.position is not None and len(vertex.position) != self.rank:
                raise ValueError(
                    f"vertex '{vertex.name}' has a position with {len(vertex.position)} "
                    f"coordinates in a rank {self.rank} graph"
                )
        for edge in self.edges:
            if edge.direction.var_count != self.rank:
                raise ValueError(
                    f"edge {edge} has a direction in {edge.direction.var_count} "
                    f"variables in a rank {self.rank} graph"
                )
        if self.xi is not None and len(self.xi) != self.rank:
            raise ValueError(f"xi has {len(self.xi)} coordinates in a rank {self.rank} graph")
        return self

    @functools.cached_property
    def names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.vertices)

    @functools.cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def vertex(self, name: str) -> Vertex:
        try:
            return self.vertices[self.index[name]]
        except KeyError:
            raise GKMUnknownVertexError(name)

    def require(self, name: str) -> str:
        if name not in self.index:
            raise GKMUnknownVertexError(name)
        return name

    def incident(self, name: str) -> list[Edge]:
        return [e for e in self.edges if name in (e.south, e.north)]

    def edges_below(self, name: str) -> list[Edge]:
        """Edges whose north pole is `name`."""
        return [e for e in self.edges if e.north == name]

    def has_positions(self) -> bool:
        return all(v.position is not None for v in self.vertices)

    def height(self, name: str) -> fractions.Fraction | None:
        """<position, xi>, when both are known."""
        position = self.vertex(name).position
        if self.xi is None or position is None:
            return None
        return sum((p * x for p, x in zip(position, self.xi)), fractions.Fraction(0))

    def structurally_equal(self, other: MomentGraph) -> bool:
        return self.model_dump() == other.model_dump()
