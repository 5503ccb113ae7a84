"""Tuples of polynomials indexed by the vertices of a moment graph, and the
edge relations that make such a tuple an equivariant class."""

from __future__ import annotations

import typing

import pydantic

from gkm_core.exceptions import GKMClassError, GKMUnknownVertexError
from gkm_core.models_base import FrozenModel
from gkm_core.moment_graph.models import Edge, MomentGraph
from gkm_core.polyring import Polynomial, divides_linear


class GKMClass(FrozenModel):
    """A homogeneous degree `degree` assignment vertex -> polynomial in `rank`
    variables. Absent vertices carry zero; zero values are not stored."""

    rank: int
    degree: int
    values: dict[str, Polynomial] = {}

    @pydantic.model_validator(mode="before")
    @classmethod
    def homogeneous_values(cls, data: typing.Any) -> typing.Any:
        if not isinstance(data, dict):
            return data
        rank, degree = data["rank"], data["degree"]
        if degree < 0:
            raise GKMClassError(f"class degree must be nonnegative, got {degree}")
        cleaned = {}
        for vertex, value in data.get("values", {}).items():
            if value.var_count != rank:
                raise GKMClassError(
                    f"value at '{vertex}' has {value.var_count} variables, expected {rank}"
                )
            if value.is_zero:
                continue
            if not value.is_homogeneous(degree):
                raise GKMClassError(
                    f"value {value} at '{vertex}' is not homogeneous of degree {degree}"
                )
            cleaned[vertex] = value
        return {**data, "values": cleaned}

    @classmethod
    def ones(cls, g: MomentGraph) -> GKMClass:
        return cls(rank=g.rank, degree=0, values={name: Polynomial.one(g.rank) for name in g.names})

    @classmethod
    def from_tuple(
        cls, g: MomentGraph, degree: int, values: typing.Sequence[Polynomial]
    ) -> GKMClass:
        if len(values) != len(g.vertices):
            raise GKMClassError(f"{len(values)} values for {len(g.vertices)} vertices")
        return cls(rank=g.rank, degree=degree, values=dict(zip(g.names, values)))

    def value(self, vertex: str) -> Polynomial:
        return self.values.get(vertex) or Polynomial.zero(self.rank)

    def as_tuple(self, g: MomentGraph) -> tuple[Polynomial, ...]:
        return tuple(self.value(name) for name in g.names)

    @property
    def is_zero(self) -> bool:
        return not self.values

    def support(self) -> set[str]:
        return set(self.values)

    def scale(self, p: Polynomial) -> GKMClass:
        if p.is_zero:
            return GKMClass(rank=self.rank, degree=self.degree)
        if not p.is_homogeneous():
            raise GKMClassError(f"cannot scale a class by the inhomogeneous {p}")
        return GKMClass(
            rank=self.rank,
            degree=self.degree + int(p.degree),
            values={v: p * f for v, f in self.values.items()},
        )

    def __add__(self, other: GKMClass) -> GKMClass:
        if other.degree != self.degree or other.rank != self.rank:
            raise GKMClassError(
                f"cannot add classes of degree {self.degree} and {other.degree}"
            )
        values = dict(self.values)
        for v, f in other.values.items():
            values[v] = values[v] + f if v in values else f
        return GKMClass(rank=self.rank, degree=self.degree, values=values)

    def __eq__(self, other):
        if not isinstance(other, GKMClass):
            return NotImplemented
        return (self.rank, self.degree, self.values) == (other.rank, other.degree, other.values)

    def __hash__(self):
        return hash((self.rank, self.degree, frozenset(self.values.items())))

    def to_text(self, g: MomentGraph, factored: bool = True) -> str:
        """`(0,t1,t2)` in stored vertex order."""
        parts = []
        for value in self.as_tuple(g):
            parts.append(value.factored() if factored else value.to_text(compact=True))
        return "(" + ",".join(parts) + ")"


def _require_vertices(g: MomentGraph, c: GKMClass):
    for vertex in c.values:
        if vertex not in g.index:
            raise GKMUnknownVertexError(vertex)


def check_class(g: MomentGraph, c: GKMClass) -> tuple[bool, list[Edge]]:
    """Every value homogeneous of the class degree, and for every edge the
    difference across it divisible by the edge direction."""
    _require_vertices(g, c)
    if c.rank != g.rank:
        raise GKMClassError(f"class in {c.rank} variables on a rank {g.rank} graph")
    homogeneous = all(f.is_homogeneous(c.degree) for f in c.values.values())
    violated = [
        e
        for e in g.edges
        if not divides_linear(e.direction, c.value(e.north) - c.value(e.south))
    ]
    return homogeneous and not violated, violated


def require_class(g: MomentGraph, c: GKMClass, label: str = "class"):
    ok, violated = check_class(g, c)
    if not ok:
        raise GKMClassError(
            f"{label} fails the edge relations on {', '.join(str(e) for e in violated)}"
        )


def multiply(g: MomentGraph, a: GKMClass, b: GKMClass) -> GKMClass:
    """Coordinatewise product."""
    require_class(g, a, "first factor")
    require_class(g, b, "second factor")
    return GKMClass(
        rank=g.rank,
        degree=a.degree + b.degree,
        values={v: a.value(v) * b.value(v) for v in g.names if v in a.values and v in b.values},
    )
