"""Class files: `{"degree": d, "values": {"<vertex>": "<poly>", ...}}`.

Vertices left out carry zero. Without a degree the class takes the degree of
its nonzero values (0 when there are none).
"""

from __future__ import annotations

import typing

import annotated_types
import pydantic

from gkm_core.cohomology.classes import GKMClass
from gkm_core.dslio.polynomial_syntax import parse_polynomial
from gkm_core.exceptions import GKMClassFileError, GKMParseError, GKMUnknownVertexError
from gkm_core.moment_graph.models import MomentGraph


class ClassDocument(pydantic.BaseModel):
    model_config = pydantic.ConfigDict(extra="forbid")

    degree: typing.Optional[typing.Annotated[int, annotated_types.Ge(0)]] = None
    values: dict[str, str] = {}

    @classmethod
    def from_class(cls, g: MomentGraph, c: GKMClass) -> ClassDocument:
        return cls(
            degree=c.degree,
            values={v: c.value(v).to_text(compact=True) for v in g.names if v in c.values},
        )


def read_class_document(text: str) -> ClassDocument:
    try:
        return ClassDocument.model_validate_json(text)
    except pydantic.ValidationError as e:
        details = e.errors()[0]
        where = ".".join(str(part) for part in details["loc"])
        raise GKMClassFileError(f"{where}: {details['msg']}" if where else details["msg"])


def parse_class(text: str, g: MomentGraph) -> GKMClass:
    document = read_class_document(text)

    values = {}
    for vertex, source in document.values.items():
        if vertex not in g.index:
            raise GKMUnknownVertexError(vertex)
        try:
            values[vertex] = parse_polynomial(source, g.rank)
        except GKMParseError as e:
            raise GKMParseError(f"value at '{vertex}': {e.detail}", e.line, e.column)

    for vertex, value in values.items():
        if not value.is_homogeneous():
            raise GKMClassFileError(f"value {value} at '{vertex}' is not homogeneous")

    degrees = {int(v.degree) for v in values.values() if not v.is_zero}
    if document.degree is None:
        if len(degrees) > 1:
            raise GKMClassFileError(
                f"values have different degrees {sorted(degrees)} and no degree is declared"
            )
        degree = degrees.pop() if degrees else 0
    else:
        degree = document.degree
        wrong = [v for v, f in values.items() if not f.is_zero and f.degree != degree]
        if wrong:
            raise GKMClassFileError(
                f"degree {degree} declared, but the value at '{wrong[0]}' has degree "
                f"{int(values[wrong[0]].degree)}"
            )

    return GKMClass(rank=g.rank, degree=degree, values=values)


def emit_class(g: MomentGraph, c: GKMClass) -> str:
    return ClassDocument.from_class(g, c).model_dump_json(indent=2) + "\n"
