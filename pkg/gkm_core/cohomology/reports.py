"""JSON shapes of command results. Polynomials are written expanded in the
compact polynomial syntax, rationals as "a/b" strings."""

from __future__ import annotations

import typing

import pydantic

from gkm_core.cohomology.classes import GKMClass
from gkm_core.cohomology.expansion import Expansion, OrdinaryTable
from gkm_core.cohomology.generators import GeneratorSet
from gkm_core.cohomology.sections import HilbertData
from gkm_core.models_base import CamelModel
from gkm_core.moment_graph.models import MomentGraph
from gkm_core.moment_graph.validation import ValidationReport


def class_values(g: MomentGraph, c: GKMClass) -> dict[str, str]:
    return {v: c.value(v).to_text(compact=True) for v in g.names}


class HilbertReport(CamelModel):
    dims: list[int]
    betti: typing.Optional[list[int]]
    free: bool

    @classmethod
    def from_data(cls, data: HilbertData) -> HilbertReport:
        return cls(dims=data.dims, betti=data.betti, free=data.free)


class BettiReport(CamelModel):
    betti: typing.Optional[list[int]]
    free: bool
    poincare_polynomial: typing.Optional[str] = None
    euler_characteristic: typing.Optional[int] = None
    diagnostic: str = ""


class GeneratorReport(CamelModel):
    base: str
    degree: int
    ambiguity: int
    values: dict[str, str]


GeneratorsReport = pydantic.TypeAdapter(list[GeneratorReport])


def generator_reports(g: MomentGraph, gens: GeneratorSet) -> list[GeneratorReport]:
    return [
        GeneratorReport(
            base=gen.base,
            degree=gen.degree,
            ambiguity=gen.ambiguity,
            values=class_values(g, gen.gkm_class),
        )
        for gen in gens
    ]


class ClassReport(CamelModel):
    degree: int
    values: dict[str, str]
    valid: bool
    violated_edges: list[str] = []
    expansion: typing.Optional[list[str]] = None

    @classmethod
    def build(
        cls,
        g: MomentGraph,
        c: GKMClass,
        valid: bool,
        violated: typing.Sequence = (),
        expansion: Expansion | None = None,
    ) -> ClassReport:
        return cls(
            degree=c.degree,
            values=class_values(g, c),
            valid=valid,
            violated_edges=[str(e) for e in violated],
            expansion=(
                [p.to_text(compact=True) for p in expansion.coefficients]
                if expansion is not None
                else None
            ),
        )


class OrdinaryTableReport(CamelModel):
    generators: list[int]
    table: list[list[list[tuple[int, str]]]]

    @classmethod
    def from_table(cls, table: OrdinaryTable) -> OrdinaryTableReport:
        return cls(
            generators=list(table.degrees),
            table=[[[(l, str(q)) for l, q in entry] for entry in row] for row in table.table],
        )


class ValidationSummary(CamelModel):
    valid: bool
    checks: ValidationReport
    connected: bool
    palais_smale: bool
    palais_smale_violations: list[str]


def dump(model: pydantic.BaseModel) -> str:
    return model.model_dump_json(by_alias=True, indent=2) + "\n"


class GenericSectionReport(CamelModel):
    values: dict[str, str]
