"""Module generators by flowing up from each vertex.

For a base vertex v of down-degree d, every vertex not above v gets 0, v gets
the product of its downward edge labels, and every later vertex w above v gets
the degree-d polynomial agreeing with each lower neighbour u modulo the label
of the edge u -> w. When that polynomial is not unique the free parameters of
the reduced echelon solution are set to zero and counted as ambiguity.
"""

from __future__ import annotations

import collections
import fractions
import logging
import typing

from gkm_core.cohomology.classes import GKMClass
from gkm_core.cohomology.linear_algebra import Row, solve_affine
from gkm_core.cohomology.sections import hilbert, restriction_rows
from gkm_core.exceptions import GKMDegreeError, GKMInfeasibleError
from gkm_core.models_base import FrozenModel
from gkm_core.moment_graph.models import MomentGraph
from gkm_core.moment_graph.order import down_degree, linear_extension, up_set
from gkm_core.polyring import Polynomial, monomial_basis, restrict_to_hyperplane

logger = logging.getLogger(__name__)


def base_value(g: MomentGraph, v: str) -> Polynomial:
    value = Polynomial.one(g.rank)
    for e in g.edges_below(v):
        value = value * e.direction.to_polynomial()
    return value


def _solve_vertex(
    g: MomentGraph, w: str, d: int, labelled: dict[str, Polynomial]
) -> tuple[Polynomial, int]:
    monomials = monomial_basis(g.rank, d)
    rows: list[Row] = []
    rhs: list[fractions.Fraction] = []
    constraints = []
    for e in g.edges_below(w):
        target = restrict_to_hyperplane(labelled[e.south], e.direction)
        constraints.append(f"f({w}) = f({e.south}) mod {e.direction}")
        images = restriction_rows(monomials, e.direction)
        for image, coefficients in images.items():
            rows.append(coefficients)
            rhs.append(target.coefficient(image))
        # Terms of the neighbour's value no unknown reaches.
        for image, c in target.terms.items():
            if image not in images:
                rows.append({})
                rhs.append(c)

    solution = solve_affine(rows, rhs, len(monomials))
    if solution is None:
        raise GKMInfeasibleError(
            f"no degree {d} value at '{w}' satisfies {'; '.join(constraints)}", vertex=w
        )
    value = Polynomial.from_terms(
        g.rank, {monomials[j]: c for j, c in solution.values.items()}
    )
    return value, solution.free


def flow_up_generator(g: MomentGraph, v: str) -> tuple[GKMClass, int]:
    """The flow-up class at v and the number of free parameters met on the way."""
    d = down_degree(g, v)
    above = up_set(g, v)
    labelled: dict[str, Polynomial] = {}
    ambiguity = 0

    for w in linear_extension(g):
        if w not in above:
            labelled[w] = Polynomial.zero(g.rank)
        elif w == v:
            labelled[w] = base_value(g, v)
        else:
            labelled[w], free = _solve_vertex(g, w, d, labelled)
            if free:
                logger.debug("flow-up from '%s': %d free parameters at '%s'", v, free, w)
            ambiguity += free

    return GKMClass(rank=g.rank, degree=d, values=labelled), ambiguity


class Generator(FrozenModel):
    base: str
    degree: int
    gkm_class: GKMClass
    ambiguity: int


class GeneratorSet(FrozenModel):
    """Flow-up generators in processing order. `consistent` records whether the
    generator degrees agree with the Betti numbers of the section module."""

    generators: tuple[Generator, ...]
    consistent: bool = True
    diagnostic: str = ""

    def __iter__(self) -> typing.Iterator[Generator]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, i: int) -> Generator:
        return self.generators[i]

    @property
    def degrees(self) -> list[int]:
        return [gen.degree for gen in self.generators]

    @property
    def classes(self) -> list[GKMClass]:
        return [gen.gkm_class for gen in self.generators]

    def for_vertex(self, v: str) -> Generator:
        for gen in self.generators:
            if gen.base == v:
                return gen
        raise KeyError(v)


def degree_counts(degrees: typing.Iterable[int]) -> list[int]:
    counts = collections.Counter(degrees)
    top = max(counts, default=-1)
    return [counts[n] for n in range(top + 1)]


def all_generators(
    g: MomentGraph, max_degree: int | None = None, threads: int | None = None
) -> GeneratorSet:
    generators = []
    for v in linear_extension(g):
        c, ambiguity = flow_up_generator(g, v)
        generators.append(Generator(base=v, degree=c.degree, gkm_class=c, ambiguity=ambiguity))

    degrees = degree_counts(gen.degree for gen in generators)
    try:
        data = hilbert(g, max_degree, threads)
    except GKMDegreeError as e:
        return GeneratorSet(generators=tuple(generators), consistent=False, diagnostic=e.message)

    if not data.free:
        diagnostic = f"sections are not a free module: {data.diagnostic}"
    elif data.betti != degrees:
        diagnostic = f"generator degrees {degrees} differ from Betti numbers {data.betti}"
    else:
        logger.debug("generator degrees match Betti numbers %s", degrees)
        return GeneratorSet(generators=tuple(generators))

    logger.warning(diagnostic)
    return GeneratorSet(generators=tuple(generators), consistent=False, diagnostic=diagnostic)


def _is_sum(text: str) -> bool:
    depth = 0
    for position, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif char in "+-" and depth == 0 and position > 0:
            return True
    return False


def _parameter_term(coefficient: Polynomial, parameter: str) -> tuple[bool, str]:
    """(negative, text) for coefficient * parameter."""
    text = coefficient.factored()
    if _is_sum(text):
        return False, f"({text})*{parameter}"
    negative = text.startswith("-")
    if negative:
        text = text[1:]
    if text == "1":
        return negative, parameter
    return negative, f"{text}*{parameter}"


def generic_section(g: MomentGraph, gens: GeneratorSet) -> dict[str, str]:
    """The general section sum_i p_i g_i written out at every vertex, with
    parameters p1..pm following the generator order."""
    labels = {}
    for v in g.names:
        parts = []
        for i, gen in enumerate(gens, start=1):
            value = gen.gkm_class.value(v)
            if value.is_zero:
                continue
            negative, text = _parameter_term(value, f"p{i}")
            if not parts:
                parts.append(f"-{text}" if negative else text)
            else:
                parts.append(f" - {text}" if negative else f" + {text}")
        labels[v] = "".join(parts) or "0"
    return labels
