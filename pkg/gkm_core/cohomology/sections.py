"""Degree-by-degree sections of a moment graph: the tuples (f_v) with every
f_north - f_south divisible by its edge direction, and the Hilbert function and
Betti numbers they determine."""

from __future__ import annotations

import asyncio
import collections
import fractions
import logging
import math
import typing

import pydantic

from gkm_core.cohomology.classes import GKMClass
from gkm_core.cohomology.linear_algebra import Row, nullspace, rank
from gkm_core.exceptions import GKMDegreeError
from gkm_core.moment_graph.models import MomentGraph
from gkm_core.moment_graph.order import down_degrees
from gkm_core.polyring import Monomial, Polynomial, from_qq, monomial_basis, restrict_monomial
from gkm_core.settings import get_settings

logger = logging.getLogger(__name__)


def restriction_rows(
    monomials: typing.Sequence[Monomial], alpha
) -> dict[Monomial, dict[int, fractions.Fraction]]:
    """For each monomial of the restricted ring, the coefficients with which the
    input monomials contribute to it after restricting along alpha = 0."""
    rows: dict[Monomial, dict[int, fractions.Fraction]] = collections.defaultdict(dict)
    for j, m in enumerate(monomials):
        for image, c in restrict_monomial(m, alpha).terms():
            rows[image][j] = from_qq(c)
    return rows


def constraint_rows(g: MomentGraph, d: int) -> tuple[list[Row], int]:
    """The linear system of the degree-d sections. Unknowns are ordered vertex
    by vertex, and within a vertex by `monomial_basis` order."""
    monomials = monomial_basis(g.rank, d)
    width = len(monomials)
    rows: list[Row] = []
    for e in g.edges:
        north, south = g.index[e.north] * width, g.index[e.south] * width
        for coefficients in restriction_rows(monomials, e.direction).values():
            row = {}
            for j, c in coefficients.items():
                row[north + j] = c
                row[south + j] = -c
            rows.append(row)
    return rows, width * len(g.vertices)


def vector_to_class(g: MomentGraph, d: int, vector: Row) -> GKMClass:
    monomials = monomial_basis(g.rank, d)
    width = len(monomials)
    terms: dict[str, dict[Monomial, fractions.Fraction]] = collections.defaultdict(dict)
    for column, c in vector.items():
        vertex, j = divmod(column, width)
        terms[g.names[vertex]][monomials[j]] = c
    return GKMClass(
        rank=g.rank,
        degree=d,
        values={v: Polynomial.from_terms(g.rank, t) for v, t in terms.items()},
    )


def section_basis(g: MomentGraph, d: int) -> tuple[int, list[GKMClass]]:
    """An exact basis of the degree-d sections, in reduced echelon form for the
    (vertex, monomial) coordinate order."""
    if d < 0:
        raise GKMDegreeError(f"degree must be nonnegative, got {d}")
    rows, ncols = constraint_rows(g, d)
    logger.debug("degree %d: %d equations in %d unknowns", d, len(rows), ncols)
    basis = [vector_to_class(g, d, v) for v in nullspace(rows, ncols)]
    return len(basis), basis


def section_dimension(g: MomentGraph, d: int) -> int:
    if d < 0:
        raise GKMDegreeError(f"degree must be nonnegative, got {d}")
    rows, ncols = constraint_rows(g, d)
    dimension = ncols - rank(rows, ncols)
    logger.debug("degree %d: %d equations in %d unknowns, dimension %d", d, len(rows), ncols, dimension)
    return dimension


def polynomial_ring_dimension(k: int, d: int) -> int:
    """Dimension of the degree-d part of a polynomial ring in k variables."""
    if d < 0:
        return 0
    return math.comb(d + k - 1, k - 1)


class HilbertData(pydantic.BaseModel):
    max_degree: int
    dims: list[int]
    betti: typing.Optional[list[int]] = None
    free: bool
    first_bad_degree: typing.Optional[int] = None
    diagnostic: str = ""


def deconvolve(dims: typing.Sequence[int], k: int) -> list[int]:
    """b_n = sum_j (-1)^j C(k, j) dims[n - j]: undoes multiplication by the
    Hilbert series 1/(1-q)^k of the polynomial ring."""
    return [
        sum((-1) ** j * math.comb(k, j) * dims[n - j] for j in range(min(k, n) + 1))
        for n in range(len(dims))
    ]


def _trim(values: list[int]) -> list[int]:
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return values


def betti_from_dims(dims: typing.Sequence[int], k: int, vertex_count: int) -> HilbertData:
    D = len(dims) - 1
    raw = deconvolve(dims, k)

    negative = [n for n, b in enumerate(raw) if b < 0]
    if negative:
        n = negative[0]
        return HilbertData(
            max_degree=D,
            dims=list(dims),
            free=False,
            first_bad_degree=n,
            diagnostic=f"deconvolved Betti number {raw[n]} in degree {n} is negative",
        )

    for d in range(D + 1):
        rebuilt = sum(raw[i] * polynomial_ring_dimension(k, d - i) for i in range(d + 1))
        if rebuilt != dims[d]:
            return HilbertData(
                max_degree=D,
                dims=list(dims),
                free=False,
                first_bad_degree=d,
                diagnostic=f"Betti numbers rebuild {rebuilt} sections in degree {d}, not {dims[d]}",
            )

    betti = _trim(raw)
    if sum(betti) != vertex_count:
        return HilbertData(
            max_degree=D,
            dims=list(dims),
            betti=betti,
            free=False,
            first_bad_degree=D,
            diagnostic=f"Betti numbers sum to {sum(betti)}, not to the {vertex_count} vertices",
        )
    return HilbertData(max_degree=D, dims=list(dims), betti=betti, free=True)


def default_max_degree(g: MomentGraph) -> int:
    return max(down_degrees(g).values(), default=0) + get_settings().DEGREE_WINDOW


def minimum_max_degree(g: MomentGraph) -> int:
    return max(down_degrees(g).values(), default=0) + 1


async def _dimensions_concurrently(g: MomentGraph, D: int, threads: int) -> list[int]:
    semaphore = asyncio.Semaphore(threads)

    async def one(d: int) -> int:
        async with semaphore:
            return await asyncio.to_thread(section_dimension, g, d)

    return list(await asyncio.gather(*(one(d) for d in range(D + 1))))


def hilbert_dimensions(g: MomentGraph, D: int, threads: int = 1) -> list[int]:
    if threads > 1:
        return asyncio.run(_dimensions_concurrently(g, D, threads))
    return [section_dimension(g, d) for d in range(D + 1)]


def hilbert(g: MomentGraph, D: int | None = None, threads: int | None = None) -> HilbertData:
    """Section dimensions in degrees 0..D and the Betti numbers they imply when
    the sections form a free module."""
    if D is None:
        D = default_max_degree(g)
    lowest = minimum_max_degree(g)
    if D < lowest:
        raise GKMDegreeError(
            f"maximum degree {D} hides generators; it must be at least {lowest}"
        )
    threads = threads or get_settings().THREADS

    dims = hilbert_dimensions(g, D, threads)
    data = betti_from_dims(dims, g.rank, len(g.vertices))
    if data.free:
        logger.debug("Betti numbers %s", data.betti)
    else:
        logger.warning("sections do not look free: %s", data.diagnostic)
    return data
