import functools

import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from gkm_core.cohomology import (
    GKMClass,
    all_generators,
    check_class,
    expand,
    hilbert,
    multiply,
    section_basis,
    section_dimension,
)
from gkm_core.cohomology.generators import base_value
from gkm_core.cohomology.sections import polynomial_ring_dimension
from gkm_core.moment_graph import down_degree, down_degrees, palais_smale_check, up_set
from gkm_core.polyring import Polynomial, monomial_basis

from .helpers import cached_builtin

BUILTINS = [
    ("cp1", {}),
    ("cpn", {"n": 2}),
    ("cpn", {"n": 3}),
    ("cpn", {"n": 4}),
    ("flag", {"n": 3}),
    ("grassmannian", {"k": 2, "n": 4}),
    ("paper-flag3", {}),
    ("paper-hessenberg", {}),
    ("paper-quadric", {}),
]

every_builtin = pytest.mark.parametrize(
    "name, parameters", BUILTINS, ids=[f"{n}{''.join(map(str, p.values()))}" for n, p in BUILTINS]
)


@functools.cache
def generators_of(name, **parameters):
    return all_generators(cached_builtin(name, **parameters))


@every_builtin
def test_generators_are_classes(name, parameters):
    g = cached_builtin(name, **parameters)
    for gen in generators_of(name, **parameters):
        ok, violated = check_class(g, gen.gkm_class)
        assert ok, (gen.base, violated)


@every_builtin
def test_generators_follow_their_base(name, parameters):
    g = cached_builtin(name, **parameters)
    for gen in generators_of(name, **parameters):
        assert gen.degree == down_degree(g, gen.base)
        assert gen.gkm_class.support() <= up_set(g, gen.base)
        assert gen.gkm_class.value(gen.base) == base_value(g, gen.base)


@every_builtin
def test_one_generator_per_vertex(name, parameters):
    g = cached_builtin(name, **parameters)
    assert sorted(gen.base for gen in generators_of(name, **parameters)) == sorted(g.names)


@every_builtin
def test_unique_generators_on_palais_smale_graphs(name, parameters):
    g = cached_builtin(name, **parameters)
    ambiguities = [gen.ambiguity for gen in generators_of(name, **parameters)]
    if palais_smale_check(g)[0]:
        assert not any(ambiguities)
    else:
        assert any(ambiguities)


@every_builtin
def test_constants_are_the_only_degree_zero_sections(name, parameters):
    assert section_dimension(cached_builtin(name, **parameters), 0) == 1


@every_builtin
def test_down_degrees_count_edges(name, parameters):
    g = cached_builtin(name, **parameters)
    assert sum(down_degrees(g).values()) == len(g.edges)


@every_builtin
def test_betti_numbers_rebuild_dimensions(name, parameters):
    g = cached_builtin(name, **parameters)
    data = hilbert(g)
    assert data.free
    assert sum(data.betti) == len(g.vertices)
    for d, dimension in enumerate(data.dims):
        rebuilt = sum(
            b * polynomial_ring_dimension(g.rank, d - i) for i, b in enumerate(data.betti)
        )
        assert rebuilt == dimension
    assert generators_of(name, **parameters).consistent


@every_builtin
def test_section_bases_are_classes(name, parameters):
    g = cached_builtin(name, **parameters)
    _, basis = section_basis(g, 1)
    assert all(check_class(g, c)[0] for c in basis)


def linear_polynomials(k):
    basis = monomial_basis(k, 1)
    return st.lists(st.integers(-3, 3), min_size=k, max_size=k).map(
        lambda c: Polynomial.from_terms(k, dict(zip(basis, c)))
    )


@hypothesis_settings(max_examples=25, deadline=None)
@given(
    st.lists(st.integers(0, 5), min_size=3, max_size=3),
    st.lists(linear_polynomials(2), min_size=3, max_size=3),
)
def test_multiplication_is_commutative_and_associative(indices, scalars):
    g = cached_builtin("paper-flag3")
    gens = generators_of("paper-flag3")
    a, b, c = (gens[i].gkm_class.scale(p) for i, p in zip(indices, scalars))
    assert multiply(g, a, b) == multiply(g, b, a)
    assert multiply(g, multiply(g, a, b), c) == multiply(g, a, multiply(g, b, c))


def homogeneous_coefficients(k, degrees, top):
    """One homogeneous polynomial of degree top - d for each generator degree d."""
    sizes = [len(monomial_basis(k, top - d)) if d <= top else 0 for d in degrees]
    return st.lists(st.integers(-3, 3), min_size=sum(sizes), max_size=sum(sizes)).map(
        lambda flat: _split(k, degrees, top, flat)
    )


def _split(k, degrees, top, flat):
    coefficients, position = [], 0
    for d in degrees:
        basis = monomial_basis(k, top - d) if d <= top else ()
        chunk = flat[position : position + len(basis)]
        position += len(basis)
        coefficients.append(Polynomial.from_terms(k, dict(zip(basis, chunk))))
    return coefficients


@hypothesis_settings(max_examples=25, deadline=None)
@given(homogeneous_coefficients(2, (0, 1, 1, 2, 2, 3), 3))
def test_expanding_a_combination_recovers_its_coefficients(coefficients):
    g = cached_builtin("paper-flag3")
    gens = generators_of("paper-flag3")
    assert gens.degrees == [0, 1, 1, 2, 2, 3]
    combination = GKMClass(rank=g.rank, degree=3)
    for gen, p in zip(gens, coefficients):
        if not p.is_zero:
            combination = combination + gen.gkm_class.scale(p)
    assert expand(g, gens, combination).coefficients == tuple(coefficients)
