"""Built-in moment graphs: projective spaces, flag varieties, Grassmannians and
the worked examples of the flag variety of C^3, the quadric in CP^5 and the
non-Palais-Smale Hessenberg variety.

Each builder is registered by name with `builtin_graph`; `builtin(name, ...)`
looks it up and checks its parameters.
"""

from __future__ import annotations

import fractions
import itertools
import typing

from gkm_core.exceptions import GKMConfigError
from gkm_core.moment_graph.models import MAX_RANK, Edge, MomentGraph, Vertex
from gkm_core.polyring import LinearForm
from gkm_core.registry import BuiltinRegistry, builtin_graph


def _unit(k: int, i: int) -> tuple[fractions.Fraction, ...]:
    """e_i for 1 <= i <= k; the zero vector for i == 0."""
    return tuple(fractions.Fraction(int(j == i)) for j in range(1, k + 1))


def _difference(k: int, j: int, i: int) -> LinearForm:
    """t_j - t_i with the convention t_0 = 0."""
    coefficients = [fractions.Fraction(0)] * k
    if j:
        coefficients[j - 1] += 1
    if i:
        coefficients[i - 1] -= 1
    return LinearForm(coefficients=tuple(coefficients))


def _label(values: typing.Iterable[int], n: int) -> str:
    separator = "" if n < 10 else "."
    return separator.join(str(v) for v in values)


def _edge(south: str, north: str, coefficients: tuple[int, ...]) -> Edge:
    return Edge(south=south, north=north, direction=LinearForm.of(*coefficients))


@builtin_graph
def cp1() -> MomentGraph:
    """CP^1 with C* acting by t.[x0, x1] = [x0, t x1]."""
    return MomentGraph(
        rank=1,
        vertices=(
            Vertex(name="S", position=(fractions.Fraction(0),)),
            Vertex(name="N", position=(fractions.Fraction(1),)),
        ),
        edges=(_edge("S", "N", (1,)),),
        xi=(fractions.Fraction(1),),
    )


@builtin_graph(parameters=("n",))
def cpn(n: int) -> MomentGraph:
    """CP^n with (C*)^n scaling the last n homogeneous coordinates.

    Vertices p1 .. p{n+1}; p{i+1} sits at e_i (p1 at the origin) and the edge
    p{i+1} -> p{j+1}, i < j, is labelled t_j - t_i with t_0 = 0.
    """
    if n < 1:
        raise GKMConfigError(f"cpn needs n >= 1, got {n}")
    vertices = tuple(Vertex(name=f"p{i + 1}", position=_unit(n, i)) for i in range(n + 1))
    edges = tuple(
        Edge(south=f"p{i + 1}", north=f"p{j + 1}", direction=_difference(n, j, i))
        for i, j in itertools.combinations(range(n + 1), 2)
    )
    xi = tuple(fractions.Fraction(i) for i in range(1, n + 1))
    return MomentGraph(rank=n, vertices=vertices, edges=edges, xi=xi)


def _inversions(w: tuple[int, ...]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])


@builtin_graph(parameters=("n",))
def flag(n: int) -> MomentGraph:
    """Complete flags in C^n under the diagonal torus.

    Vertices are permutations in one-line notation. Swapping two values a < b
    that appear in increasing order raises the length; that edge is labelled
    t_a - t_b. Positions are sum_i i*e_{w(i)} and xi = (n, ..., 1).
    """
    if n < 1:
        raise GKMConfigError(f"flag needs n >= 1, got {n}")
    permutations = sorted(
        itertools.permutations(range(1, n + 1)), key=lambda w: (_inversions(w), w)
    )

    def position(w: tuple[int, ...]) -> tuple[fractions.Fraction, ...]:
        coordinates = [fractions.Fraction(0)] * n
        for i, value in enumerate(w, start=1):
            coordinates[value - 1] = fractions.Fraction(i)
        return tuple(coordinates)

    vertices = tuple(Vertex(name=_label(w, n), position=position(w)) for w in permutations)
    edges = []
    for w in permutations:
        for i, j in itertools.combinations(range(n), 2):
            a, b = w[i], w[j]
            if a < b:
                u = list(w)
                u[i], u[j] = b, a
                edges.append(
                    Edge(
                        south=_label(w, n),
                        north=_label(u, n),
                        direction=_difference(n, a, b),
                    )
                )
    xi = tuple(fractions.Fraction(n + 1 - i) for i in range(1, n + 1))
    return MomentGraph(rank=n, vertices=vertices, edges=tuple(edges), xi=xi)


@builtin_graph(parameters=("k", "n"))
def grassmannian(k: int, n: int) -> MomentGraph:
    """k-planes in C^n under the diagonal torus.

    Vertices are k-subsets of {1..n}; exchanging i in S for j > i not in S is an
    edge labelled t_j - t_i, oriented towards the subset containing j.
    """
    if n < 2 or not 1 <= k < n:
        raise GKMConfigError(f"grassmannian needs 1 <= k < n, got k={k}, n={n}")
    subsets = list(itertools.combinations(range(1, n + 1), k))
    vertices = tuple(
        Vertex(
            name=_label(s, n),
            position=tuple(fractions.Fraction(int(i in s)) for i in range(1, n + 1)),
        )
        for s in subsets
    )
    edges = []
    for s in subsets:
        for i in s:
            for j in range(i + 1, n + 1):
                if j in s:
                    continue
                t = tuple(sorted((set(s) - {i}) | {j}))
                edges.append(
                    Edge(south=_label(s, n), north=_label(t, n), direction=_difference(n, j, i))
                )
    xi = tuple(fractions.Fraction(i) for i in range(1, n + 1))
    return MomentGraph(rank=n, vertices=vertices, edges=tuple(edges), xi=xi)


FLAG3_VERTICES = ("bottom", "lower-left", "lower-right", "upper-left", "upper-right", "top")

FLAG3_HEXAGON = (
    ("bottom", "lower-left", (1, 0)),
    ("bottom", "lower-right", (0, 1)),
    ("lower-left", "upper-left", (1, -1)),
    ("lower-right", "upper-right", (1, -1)),
    ("upper-left", "top", (0, 1)),
    ("upper-right", "top", (1, 0)),
)

FLAG3_DIAGONALS = (
    ("bottom", "top", (1, -1)),
    ("lower-left", "upper-right", (0, 1)),
    ("lower-right", "upper-left", (1, 0)),
)


@builtin_graph(name="paper-flag3")
def paper_flag3() -> MomentGraph:
    """The flag variety of C^3 under a rank 2 torus, drawn as a hexagon with
    three long edges.

    The two diagonals are labelled t2 (lower-left to upper-right) and t1
    (lower-right to upper-left); these are the labels for which the tuples
    (0, t1, 0, t1, t1-t2, t1-t2) and (0, 0, t2, t2-t1, t2, t2-t1) are
    sections.
    """
    edges = [
        _edge(*FLAG3_HEXAGON[0]),
        _edge(*FLAG3_HEXAGON[1]),
        _edge(*FLAG3_DIAGONALS[0]),
        _edge(*FLAG3_HEXAGON[2]),
        _edge(*FLAG3_HEXAGON[3]),
        _edge(*FLAG3_DIAGONALS[1]),
        _edge(*FLAG3_DIAGONALS[2]),
        _edge(*FLAG3_HEXAGON[4]),
        _edge(*FLAG3_HEXAGON[5]),
    ]
    return MomentGraph(
        rank=2,
        vertices=tuple(Vertex(name=name) for name in FLAG3_VERTICES),
        edges=tuple(edges),
    )


@builtin_graph(name="paper-hessenberg")
def paper_hessenberg() -> MomentGraph:
    """The hexagon of paper-flag3 without its three long edges: the moment graph
    of a Hessenberg variety, which is not Palais-Smale."""
    return MomentGraph(
        rank=2,
        vertices=tuple(Vertex(name=name) for name in FLAG3_VERTICES),
        edges=tuple(_edge(*e) for e in FLAG3_HEXAGON),
    )


QUADRIC_POSITIONS = {
    "x1": (0, 0, 0),
    "x2": (0, 0, 1),
    "x3": (0, 1, 0),
    "y3": (-1, 0, 1),
    "y2": (-1, 1, 0),
    "y1": (-1, 1, 1),
}

# Every pair of coordinate points except {xi, yi} spans a one-dimensional
# orbit. Up to sign the labels are forced by the generic sections
#   x1: p1
#   x2: p1 + t3 p2
#   x3: p1 + t2 p2 + t2(t2-t3) p3
#   y3: p1 + (t3-t1) p2 + t1(t1-t3) p4
#   y2: p1 + (t2-t1) p2 + (t2-t1)(t2-t3) p3 + t1(t1-t2) p4 + t1(t1-t2)(t2-t3) p5
#   y1: p1 + (t3+t2-t1) p2 + t2(t2-t1) p3 + (t1-t3)(t1-t2) p4
#          + t2(t1-t2)(t1-t3) p5 + t2 t3 (t1-t2)(t1-t3) p6
# since the difference of the two endpoint sections must be divisible by the
# label for every choice of p1..p6; e.g. y3 - x2 = -t1 p2 + t1(t1-t3) p4 gives
# t1. The orbit with x1, x3 (or y1, y3) nonzero has stabiliser C* x 1 x C*,
# hence label t2, in agreement. Signs are chosen so that north - south is a
# positive multiple of the label for the positions above.
QUADRIC_EDGES = (
    ("x1", "x2", (0, 0, 1)),
    ("x1", "x3", (0, 1, 0)),
    ("x2", "x3", (0, 1, -1)),
    ("x1", "y3", (-1, 0, 1)),
    ("x2", "y3", (-1, 0, 0)),
    ("x1", "y2", (-1, 1, 0)),
    ("x3", "y2", (-1, 0, 0)),
    ("y3", "y2", (0, 1, -1)),
    ("x2", "y1", (-1, 1, 0)),
    ("x3", "y1", (-1, 0, 1)),
    ("y3", "y1", (0, 1, 0)),
    ("y2", "y1", (0, 0, 1)),
)


@builtin_graph(name="paper-quadric")
def paper_quadric() -> MomentGraph:
    """The quadric x1y1 + x2y2 + x3y3 = 0 in CP^5 (the Grassmannian Gr(2,4))
    under a rank 3 torus, vertices in the order x1, x2, x3, y3, y2, y1."""
    return MomentGraph(
        rank=3,
        vertices=tuple(
            Vertex(name=name, position=tuple(fractions.Fraction(c) for c in position))
            for name, position in QUADRIC_POSITIONS.items()
        ),
        edges=tuple(_edge(*e) for e in QUADRIC_EDGES),
        xi=(fractions.Fraction(-4), fractions.Fraction(5), fractions.Fraction(2)),
    )


def builtin_names() -> list[str]:
    return list(BuiltinRegistry)


def builtin(name: str, **parameters: int | None) -> MomentGraph:
    """Builds the named graph. Parameters the builder does not take must be
    absent (or None); the ones it takes are required."""
    try:
        item = BuiltinRegistry[name]
    except KeyError:
        raise GKMConfigError(
            f"unknown builtin '{name}', expected one of {', '.join(BuiltinRegistry)}"
        )

    given = {k: v for k, v in parameters.items() if v is not None}
    unexpected = set(given) - set(item["parameters"])
    if unexpected:
        raise GKMConfigError(
            f"builtin '{name}' does not take {', '.join(sorted(unexpected))}"
        )
    missing = [p for p in item["parameters"] if p not in given]
    if missing:
        raise GKMConfigError(f"builtin '{name}' needs {', '.join(missing)}")
    for parameter, value in given.items():
        if value > MAX_RANK:
            raise GKMConfigError(f"{parameter}={value} is above the largest rank {MAX_RANK}")
    return item["function"](**given)
