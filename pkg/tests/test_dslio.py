import json
import re

import pytest
from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st

from gkm_core.cohomology import GKMClass
from gkm_core.dslio import (
    emit_class,
    emit_dot,
    emit_json,
    format_polynomial,
    parse_class,
    parse_graph,
    parse_graph_document,
    parse_graph_json,
    parse_linear_form,
    parse_polynomial,
    read_graph,
    serialize_graph,
)
from gkm_core.exceptions import (
    GKMClassFileError,
    GKMError,
    GKMParseError,
    GKMUnknownVertexError,
    GKMValidationError,
)
from gkm_core.polyring import LinearForm

from .helpers import cached_builtin, class_of, poly

CP1 = """\
# CP^1
rank 1
vertex S pos 0
vertex N pos 1
edge S N : t1
xi 1
"""

BUILTINS = [
    ("cp1", {}),
    ("cpn", {"n": 3}),
    ("flag", {"n": 3}),
    ("grassmannian", {"k": 2, "n": 4}),
    ("paper-flag3", {}),
    ("paper-hessenberg", {}),
    ("paper-quadric", {}),
]


def test_parse_cp1(cp1):
    g = parse_graph(CP1)
    assert g.structurally_equal(cp1)
    assert g.names == ("S", "N")


def test_document_spans():
    document = parse_graph_document(CP1)
    assert document.rank_span == (2, 1)
    assert document.vertex_spans == {"S": (3, 8), "N": (4, 8)}
    assert document.edge_spans == {"S->N [t1]": (5, 1)}
    assert document.xi_span == (6, 1)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("vertex A\n", 1, 1),
        ("rank 2\nvertex A pos 0 x\n", 2, 16),
        ("rank 2\nvertex A pos 0\n", 2, 10),
        ("rank 2\nvertex A\nvertex B\nedge A B : t1 + t3\n", 4, 17),
        ("rank 2\nvertex A\nvertex B\nedge A B t1\n", 4, 1),
        ("rank 2\nrank 2\n", 2, 1),
        ("rank 0\n", 1, 6),
        ("rank 33\n", 1, 6),
        ("rank 100000000\n", 1, 6),
        ("rank 1\nface A\n", 2, 1),
        ("rank 1\nvertex A!\n", 2, 8),
        ("", 1, 1),
    ],
)
def test_parse_errors_carry_locations(text, line, column):
    with pytest.raises(GKMParseError) as info:
        parse_graph(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_self_loop_is_a_validation_error():
    with pytest.raises(GKMValidationError) as info:
        parse_graph("rank 1\nvertex A\nedge A A : t1\n")
    assert info.value.check == "acyclic-orientation"
    assert info.value.location == (3, 6)


def test_failed_checks_point_at_declarations():
    text = "rank 1\nvertex S\nvertex N\nedge S N : t1\nedge N S : 2*t1\n"
    with pytest.raises(GKMValidationError) as info:
        parse_graph(text)
    assert info.value.check == "acyclic-orientation"
    assert info.value.location in {(2, 8), (3, 8)}

    text = "rank 2\nvertex S\nvertex N\nvertex W\nedge S N : t1\nedge S W : 2*t1\n"
    with pytest.raises(GKMValidationError) as info:
        parse_graph(text)
    assert info.value.check == "distinct-directions-at-vertex"
    assert info.value.location == (2, 8)


def test_validation_can_be_skipped():
    g = parse_graph("rank 1\nvertex S\nedge S N : t1\n", validate=False)
    assert [str(e) for e in g.edges] == ["S->N [t1]"]
    with pytest.raises(GKMValidationError) as info:
        parse_graph("rank 1\nvertex S\nedge S N : t1\n")
    assert info.value.check == "endpoints-exist"


@pytest.mark.parametrize("name, parameters", BUILTINS)
def test_serialized_graphs_read_back(name, parameters):
    g = cached_builtin(name, **parameters)
    text = serialize_graph(g)
    assert parse_graph(text).structurally_equal(g)
    assert serialize_graph(parse_graph(text)) == text


@pytest.mark.parametrize("name, parameters", BUILTINS)
def test_json_reads_back(name, parameters):
    g = cached_builtin(name, **parameters)
    assert parse_graph_json(emit_json(g)).structurally_equal(g)
    assert read_graph(emit_json(g)).structurally_equal(g)
    assert read_graph(serialize_graph(g)).structurally_equal(g)


def test_json_shape(cp1):
    data = json.loads(emit_json(cp1))
    assert data == {
        "format": 1,
        "rank": 1,
        "vertices": [{"name": "S", "pos": ["0"]}, {"name": "N", "pos": ["1"]}],
        "edges": [{"south": "S", "north": "N", "direction": ["1"]}],
        "xi": ["1"],
    }


def test_json_accepts_numbers_and_fractions():
    g = parse_graph_json(
        '{"rank": 1, "vertices": [{"name": "S", "pos": [0]}, {"name": "N", "pos": ["1/2"]}],'
        ' "edges": [{"south": "S", "north": "N", "direction": [3]}], "xi": [1]}'
    )
    assert g.edges[0].direction == LinearForm.of(3)
    assert str(g.vertices[1].position[0]) == "1/2"


@pytest.mark.parametrize(
    "text",
    [
        "{",
        '{"rank": 1, "vertices": [], "colour": "red"}',
        '{"format": 2, "rank": 1, "vertices": []}',
        '{"rank": 1, "vertices": [{"name": "S", "pos": [0.5]}]}',
        '{"rank": 1, "vertices": [{"name": "S"}], "edges": [{"south": "S", "north": "N", "direction": [0]}]}',
        '{"rank": 2, "vertices": [{"name": "S", "pos": [0]}]}',
        '{"rank": 100000000, "vertices": []}',
    ],
)
def test_bad_json_is_a_parse_error(text):
    with pytest.raises(GKMParseError):
        parse_graph_json(text)


def test_invalid_json_graph_fails_validation():
    text = '{"rank": 1, "vertices": [{"name": "S"}], "edges": [{"south": "S", "north": "N", "direction": [1]}]}'
    with pytest.raises(GKMValidationError):
        parse_graph_json(text)
    assert len(parse_graph_json(text, validate=False).edges) == 1


def test_polynomial_syntax():
    assert parse_polynomial("-(t1+t2)^2", 2) == poly("-t1^2 - 2*t1*t2 - t2^2", 2)
    assert parse_polynomial("t1/2 + 3/4", 1) == poly("1/2*t1 + 3/4", 1)
    assert parse_linear_form("t2 - t1", 2) == LinearForm.of(-1, 1)
    assert format_polynomial(poly("t2^2 - t1*t2", 2)) == "-t1*t2+t2^2"
    assert format_polynomial(poly("t2^2 - t1*t2", 2), factored=True) == "t2*(t2-t1)"


def test_long_sign_runs():
    assert parse_polynomial("-" * 5000 + "t1", 1) == poly("t1", 1)
    assert parse_polynomial("-" * 5001 + "t1", 1) == poly("-t1", 1)
    assert parse_polynomial("+-+" * 2000 + "t1", 1) == poly("t1", 1)


@pytest.mark.parametrize(
    "text, column",
    [
        ("t1 +", 5),
        ("t1 $ t2", 4),
        ("t3", 1),
        ("(t1", 4),
        ("t1/0", 3),
        ("t1^999", 3),
        ("", 1),
        ("(" * 5000 + "t1" + ")" * 5000, 65),
        ("7^400000000", 2),
        ("t1*" * 70 + "t1", 192),
        ("1" * 500, 1),
        ("t" + "1" * 500, 1),
    ],
)
def test_polynomial_errors(text, column):
    with pytest.raises(GKMParseError) as info:
        parse_polynomial(text, 2)
    assert info.value.column == column


def test_linear_forms_must_be_linear():
    with pytest.raises(GKMParseError):
        parse_linear_form("t1*t2", 2)
    with pytest.raises(GKMParseError):
        parse_linear_form("t1 - t1", 2)


def test_class_file(cp2):
    c = parse_class('{"degree": 1, "values": {"p2": "t1", "p3": "t2"}}', cp2)
    assert c == class_of(cp2, 1, "0", "t1", "t2")
    assert c.degree == 1


def test_class_degree_is_inferred(cp2):
    assert parse_class('{"values": {"p3": "t2^2 - t1*t2"}}', cp2).degree == 2
    assert parse_class('{"values": {}}', cp2).degree == 0
    assert parse_class('{"degree": 3, "values": {"p1": "0"}}', cp2).degree == 3


def test_omitted_vertices_equal_explicit_zeros(cp2):
    omitted = parse_class('{"values": {"p2": "t1", "p3": "t2"}}', cp2)
    explicit = parse_class('{"degree": 1, "values": {"p1": "0", "p2": "t1", "p3": "t2"}}', cp2)
    assert omitted == explicit


@pytest.mark.parametrize(
    "text, error",
    [
        ('{"values": {"p2": "t1 + 1"}}', GKMClassFileError),
        ('{"values": {"p2": "t1", "p3": "t2^2"}}', GKMClassFileError),
        ('{"degree": 2, "values": {"p2": "t1"}}', GKMClassFileError),
        ('{"degree": -1, "values": {}}', GKMClassFileError),
        ('{"values": {}, "rank": 2}', GKMClassFileError),
        ('{"values": {"p9": "t1"}}', GKMUnknownVertexError),
        ('{"values": {"p2": "t1 +"}}', GKMParseError),
    ],
)
def test_bad_class_files(cp2, text, error):
    with pytest.raises(error):
        parse_class(text, cp2)


def test_value_errors_name_the_vertex(cp2):
    with pytest.raises(GKMParseError) as info:
        parse_class('{"values": {"p2": "t7"}}', cp2)
    assert "p2" in info.value.message


def test_emitted_class_reads_back(quadric):
    c = class_of(quadric, 1, "0", "t3", "t2", "t3-t1", "t2-t1", "t3+t2-t1")
    assert parse_class(emit_class(quadric, c), quadric) == c
    assert json.loads(emit_class(quadric, GKMClass.ones(quadric)))["degree"] == 0


def test_dot_output(flag3, cp1):
    source = emit_dot(flag3)
    assert source.count("->") == 9
    nodes = [line for line in source.splitlines() if "[label=" in line and "->" not in line]
    assert len(nodes) == 6
    assert re.search(r'"?lower-left"? -> "?upper-left"? \[label="?t1-t2"?\]', source)

    assert 'pos="1,0!"' in emit_dot(cp1)


keyword_lines = st.one_of(
    st.builds(lambda k: f"rank {k}", st.integers(0, 4)),
    st.builds(
        lambda name, coordinates: f"vertex {name} pos {' '.join(coordinates)}",
        st.sampled_from("ABC"),
        st.lists(st.sampled_from(["0", "1", "-1", "1/2", "x", "1/0"]), max_size=3),
    ),
    st.builds(
        lambda s, n, form: f"edge {s} {n} : {form}",
        st.sampled_from("ABC"),
        st.sampled_from("ABC"),
        st.sampled_from(["t1", "t2", "t1-t2", "2*t1", "t1*t2", "t3", "0", "(", ""]),
    ),
    st.builds(lambda x: f"xi {x}", st.sampled_from(["1", "1 2", "0 0", "a"])),
    st.text(max_size=20),
)


@hypothesis_settings(max_examples=200, deadline=None)
@given(st.lists(keyword_lines, max_size=8).map("\n".join))
def test_reading_never_crashes(text):
    try:
        read_graph(text)
    except GKMError:
        pass


@hypothesis_settings(max_examples=200, deadline=None)
@given(st.text(alphabet="t123+-*/^() 0", max_size=20))
def test_polynomial_parsing_never_crashes(text):
    try:
        parse_polynomial(text, 3)
    except GKMParseError:
        pass
