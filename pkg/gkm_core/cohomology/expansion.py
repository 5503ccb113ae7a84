"""Writing classes in a generator basis, and the ordinary cohomology ring that
remains once every t_i is set to zero."""

from __future__ import annotations

import collections
import fractions
import logging
import typing

from gkm_core.cohomology.classes import GKMClass, multiply, require_class
from gkm_core.cohomology.generators import GeneratorSet
from gkm_core.cohomology.linear_algebra import Row, solve_affine
from gkm_core.exceptions import GKMInfeasibleError, GKMNonUniqueError
from gkm_core.models_base import FrozenModel
from gkm_core.moment_graph.models import MomentGraph
from gkm_core.polyring import Monomial, Polynomial, eval_at_zero, monomial_basis

logger = logging.getLogger(__name__)


class Expansion(FrozenModel):
    """Coefficients c_i with sum_i c_i * g_i equal to the expanded class."""

    coefficients: tuple[Polynomial, ...]

    def __getitem__(self, i: int) -> Polynomial:
        return self.coefficients[i]

    def to_text(self, factored: bool = True) -> str:
        parts = [c.factored() if factored else c.to_text(compact=True) for c in self.coefficients]
        return "(" + ",".join(parts) + ")"


def _add_monomials(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def expand(g: MomentGraph, gens: GeneratorSet, c: GKMClass) -> Expansion:
    """Solves sum_i c_i * g_i = c in one linear system over every vertex at once."""
    require_class(g, c)
    d = c.degree

    columns: list[tuple[int, Monomial]] = []
    for i, gen in enumerate(gens):
        if gen.degree <= d:
            columns.extend((i, m) for m in monomial_basis(g.rank, d - gen.degree))

    equations: dict[tuple[str, Monomial], Row] = collections.defaultdict(dict)
    for column, (i, m) in enumerate(columns):
        for v, value in gens[i].gkm_class.values.items():
            for monomial, a in value.terms.items():
                equations[(v, _add_monomials(m, monomial))][column] = a

    target = {(v, m): a for v, value in c.values.items() for m, a in value.terms.items()}
    keys = list(equations) + [key for key in target if key not in equations]
    rows = [equations.get(key, {}) for key in keys]
    rhs = [target.get(key, fractions.Fraction(0)) for key in keys]
    logger.debug("expansion in degree %d: %d equations in %d unknowns", d, len(rows), len(columns))

    solution = solve_affine(rows, rhs, len(columns))
    if solution is None:
        raise GKMInfeasibleError(
            f"the degree {d} class {c.to_text(g)} is not in the span of the generators"
        )
    if solution.free:
        raise GKMNonUniqueError(
            f"the generators are not independent in degree {d}: "
            f"{solution.free} free parameters"
        )

    terms: dict[int, dict[Monomial, fractions.Fraction]] = collections.defaultdict(dict)
    for column, a in solution.values.items():
        i, m = columns[column]
        terms[i][m] = a
    return Expansion(
        coefficients=tuple(Polynomial.from_terms(g.rank, terms.get(i, {})) for i in range(len(gens)))
    )


Entry = list[tuple[int, fractions.Fraction]]


class OrdinaryTable(FrozenModel):
    """Structure constants of ordinary cohomology: u_i * u_j = sum_l q * u_l
    for every (l, q) in table[i][j]."""

    degrees: tuple[int, ...]
    table: tuple[tuple[Entry, ...], ...]

    def constant(self, i: int, j: int, l: int) -> fractions.Fraction:
        return dict(self.table[i][j]).get(l, fractions.Fraction(0))

    def product(
        self,
        a: typing.Sequence[fractions.Fraction | int],
        b: typing.Sequence[fractions.Fraction | int],
    ) -> list[fractions.Fraction]:
        """Multiplies two ordinary classes given by their coordinates in the
        generator basis."""
        result = [fractions.Fraction(0)] * len(self.degrees)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                for l, q in self.table[i][j]:
                    result[l] += x * y * q
        return result

    def unit(self, i: int) -> list[fractions.Fraction]:
        return [fractions.Fraction(int(j == i)) for j in range(len(self.degrees))]


def ordinary_table(g: MomentGraph, gens: GeneratorSet) -> OrdinaryTable:
    n = len(gens)
    table: list[list[Entry]] = [[[] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            product = multiply(g, gens[i].gkm_class, gens[j].gkm_class)
            expansion = expand(g, gens, product)
            entry = [
                (l, q)
                for l, coefficient in enumerate(expansion.coefficients)
                if (q := eval_at_zero(coefficient))
            ]
            table[i][j] = table[j][i] = entry
    return OrdinaryTable(
        degrees=tuple(gen.degree for gen in gens),
        table=tuple(tuple(row) for row in table),
    )


def poincare_polynomial(betti: typing.Sequence[int], variable: str = "q") -> str:
    """sum_n betti[n] * q^n, with q of cohomological degree two."""
    parts = []
    for n, b in enumerate(betti):
        if not b:
            continue
        power = "" if n == 0 else variable if n == 1 else f"{variable}^{n}"
        if not power:
            parts.append(str(b))
        elif b == 1:
            parts.append(power)
        else:
            parts.append(f"{b}*{power}")
    return " + ".join(parts) or "0"


def euler_characteristic(betti: typing.Sequence[int]) -> int:
    return sum(betti)
