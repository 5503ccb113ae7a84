"""Exact sparse linear algebra over the rationals on top of sympy's
`DomainMatrix`. Rows are dicts column -> Fraction; zero entries are dropped.

Each row is scaled to integers before elimination and the fraction-free
`rref_den` does the work over ZZ; only the final echelon form is divided out."""

from __future__ import annotations

import fractions
import math
import typing

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from gkm_core.models_base import FrozenModel

Row = dict[int, fractions.Fraction]


def integer_row(row: Row) -> dict[int, int]:
    """`row` times the lcm of its denominators."""
    clean = {j: fractions.Fraction(c) for j, c in row.items() if c}
    scale = math.lcm(*(c.denominator for c in clean.values())) if clean else 1
    return {j: int(c * scale) for j, c in clean.items()}


def domain_matrix(rows: typing.Sequence[Row], ncols: int) -> DomainMatrix:
    entries = {}
    for i, row in enumerate(rows):
        if scaled := integer_row(row):
            entries[i] = {j: ZZ(c) for j, c in scaled.items()}
    return DomainMatrix(entries, (len(rows), ncols), ZZ)


def echelon(rows: typing.Sequence[Row], ncols: int) -> tuple[list[Row], tuple[int, ...]]:
    reduced, denominator, pivots = domain_matrix(rows, ncols).rref_den()
    sparse = reduced.to_sparse().rep
    den = int(denominator)
    result = [
        {
            j: fractions.Fraction(int(c), den)
            for j, c in sorted(sparse.get(i, {}).items())
            if c
        }
        for i in range(len(pivots))
    ]
    return result, tuple(pivots)


def rref(rows: typing.Sequence[Row], ncols: int) -> tuple[list[Row], tuple[int, ...]]:
    """Nonzero rows of the reduced row echelon form, and the pivot columns."""
    if ncols == 0 or not any(rows):
        return [], ()
    return echelon(rows, ncols)


def rank(rows: typing.Sequence[Row], ncols: int) -> int:
    if ncols == 0 or not any(rows):
        return 0
    _, _, pivots = domain_matrix(rows, ncols).rref_den()
    return len(pivots)


def nullspace(rows: typing.Sequence[Row], ncols: int) -> list[Row]:
    """A basis of {x : A x = 0}, itself in reduced row echelon form."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = {free: fractions.Fraction(1)}
        for row, pivot in zip(reduced, pivots):
            if c := row.get(free):
                vector[pivot] = -c
        basis.append(vector)
    if not basis:
        return []
    echelon_basis, _ = rref(basis, ncols)
    return echelon_basis


class AffineSolution(FrozenModel):
    """One solution of A x = b (free parameters set to zero) and the number of
    free parameters."""

    values: Row
    free: int


def solve_affine(
    rows: typing.Sequence[Row], rhs: typing.Sequence[fractions.Fraction], ncols: int
) -> AffineSolution | None:
    """Solves A x = b exactly. None when the system is inconsistent."""
    if len(rows) != len(rhs):
        raise ValueError(f"{len(rows)} rows but {len(rhs)} right-hand sides")
    augmented = []
    for row, b in zip(rows, rhs):
        extended = dict(row)
        if b:
            extended[ncols] = fractions.Fraction(b)
        augmented.append(extended)

    reduced, pivots = rref(augmented, ncols + 1)
    if ncols in pivots:
        return None
    values = {}
    for row, pivot in zip(reduced, pivots):
        if c := row.get(ncols):
            values[pivot] = c
    return AffineSolution(values=values, free=ncols - len(pivots))
