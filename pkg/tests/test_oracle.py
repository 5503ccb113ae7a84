"""Section dimensions of random rank 2 graphs against a dense brute-force count.

In two variables a homogeneous f is divisible by a*t1 + b*t2 exactly when
f(b, -a) = 0, so each edge gives one linear equation on the coefficients.
"""

import itertools
import random

import pytest
import sympy

from gkm_core.cohomology import section_dimension
from gkm_core.moment_graph import Edge, MomentGraph, Vertex, validate
from gkm_core.polyring import LinearForm

FORMS = [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1), (1, 2), (1, -2), (3, -1)]


def random_graph(seed: int) -> MomentGraph:
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    names = [f"v{i}" for i in range(n)]
    pairs = list(itertools.combinations(range(n), 2))
    chosen = rng.sample(pairs, rng.randint(1, min(5, len(pairs))))

    used: dict[int, set] = {i: set() for i in range(n)}
    edges = []
    for i, j in sorted(chosen):
        options = [f for f in FORMS if f not in used[i] and f not in used[j]]
        form = rng.choice(options)
        used[i].add(form)
        used[j].add(form)
        edges.append(Edge(south=names[i], north=names[j], direction=LinearForm.of(*form)))
    return MomentGraph(rank=2, vertices=tuple(Vertex(name=v) for v in names), edges=tuple(edges))


def brute_force_dimension(g: MomentGraph, d: int) -> int:
    width = d + 1
    index = {name: i for i, name in enumerate(g.names)}
    rows = []
    for e in g.edges:
        a, b = e.direction.coefficients
        row = [sympy.Rational(0)] * (width * len(g.names))
        for j in range(width):
            value = sympy.Rational(b) ** (d - j) * sympy.Rational(-a) ** j
            row[index[e.north] * width + j] += value
            row[index[e.south] * width + j] -= value
        rows.append(row)
    unknowns = width * len(g.names)
    return unknowns - (sympy.Matrix(rows).rank() if rows else 0)


@pytest.mark.parametrize("seed", range(25))
def test_random_graphs_match_brute_force(seed):
    g = random_graph(seed)
    assert len(g.vertices) <= 4 and len(g.edges) <= 5
    assert validate(g).valid
    for d in range(4):
        assert section_dimension(g, d) == brute_force_dimension(g, d), (seed, d)


def test_brute_force_on_cp1_line():
    g = MomentGraph(
        rank=2,
        vertices=(Vertex(name="S"), Vertex(name="N")),
        edges=(Edge(south="S", north="N", direction=LinearForm.of(1, 0)),),
    )
    assert [brute_force_dimension(g, d) for d in range(3)] == [1, 3, 5]
    assert section_dimension(g, 2) == 5
