"""JSON interchange for moment graphs. Rationals travel as strings ("3/2")
and array order is the stored vertex and edge order."""

from __future__ import annotations

import typing

import annotated_types
import pydantic

from gkm_core.exceptions import GKMParseError, GKMValidationError
from gkm_core.models_base import Rational
from gkm_core.moment_graph.models import MAX_RANK, Edge, MomentGraph, Vertex
from gkm_core.moment_graph.validation import validate as validate_graph
from gkm_core.polyring import LinearForm


class VertexEntry(pydantic.BaseModel):
    name: str
    pos: typing.Optional[list[Rational]] = None


class EdgeEntry(pydantic.BaseModel):
    south: str
    north: str
    direction: list[Rational]


class GraphFile(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(extra="forbid")

    format: typing.Literal[1] = 1
    rank: typing.Annotated[int, annotated_types.Interval(ge=1, le=MAX_RANK)]
    vertices: list[VertexEntry]
    edges: list[EdgeEntry] = []
    xi: typing.Optional[list[Rational]] = None

    @classmethod
    def from_graph(cls, g: MomentGraph) -> GraphFile:
        return cls(
            rank=g.rank,
            vertices=[
                VertexEntry(name=v.name, pos=list(v.position) if v.position else None)
                for v in g.vertices
            ],
            edges=[
                EdgeEntry(south=e.south, north=e.north, direction=list(e.direction.coefficients))
                for e in g.edges
            ],
            xi=list(g.xi) if g.xi is not None else None,
        )

    def to_graph(self) -> MomentGraph:
        return MomentGraph(
            rank=self.rank,
            vertices=tuple(
                Vertex(name=v.name, position=tuple(v.pos) if v.pos is not None else None)
                for v in self.vertices
            ),
            edges=tuple(
                Edge(
                    south=e.south,
                    north=e.north,
                    direction=LinearForm(coefficients=tuple(e.direction)),
                )
                for e in self.edges
            ),
            xi=tuple(self.xi) if self.xi is not None else None,
        )


def _first_error(error: pydantic.ValidationError) -> str:
    details = error.errors()[0]
    where = ".".join(str(part) for part in details["loc"])
    return f"{where}: {details['msg']}" if where else details["msg"]


def emit_json(g: MomentGraph) -> str:
    return GraphFile.from_graph(g).model_dump_json(indent=2, exclude_none=True) + "\n"


def parse_graph_json(text: str, validate: bool = True) -> MomentGraph:
    try:
        graph = GraphFile.model_validate_json(text).to_graph()
    except pydantic.ValidationError as e:
        raise GKMParseError(_first_error(e))
    if validate:
        for failure in validate_graph(graph).failures:
            raise GKMValidationError(failure.name, failure.offending)
    return graph
