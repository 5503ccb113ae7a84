import json

import pytest
from typer.testing import CliRunner

from gkm_core.cli.main import cli_app, run
from gkm_core.dslio import serialize_graph

from .helpers import cached_builtin

runner = CliRunner()


def invoke(*args):
    return runner.invoke(cli_app, [str(a) for a in args])


@pytest.fixture
def class_file(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path

    return write


def test_builtin_list():
    result = invoke("builtin", "--list")
    assert result.exit_code == 0
    assert "cpn --n N" in result.stdout
    assert "grassmannian --k N --n N" in result.stdout


def test_builtin_prints_the_graph():
    result = invoke("builtin", "cpn", "--n", 2)
    assert result.exit_code == 0
    assert result.stdout == serialize_graph(cached_builtin("cpn", n=2))

    result = invoke("builtin", "cp1", "--json")
    assert json.loads(result.stdout)["rank"] == 1


def test_unknown_builtin_is_a_usage_error():
    assert invoke("builtin", "nope").exit_code == 2
    assert invoke("betti", "--builtin", "cpn").exit_code == 2


def test_graph_source_is_required(tmp_path):
    assert invoke("betti").exit_code == 2
    path = tmp_path / "cp1.gkm"
    path.write_text(serialize_graph(cached_builtin("cp1")))
    assert invoke("betti", path, "--builtin", "cp1").exit_code == 2
    assert invoke("betti", path, "--n", 2).exit_code == 2


def test_validate():
    result = invoke("validate", "--builtin", "paper-hessenberg")
    assert result.exit_code == 0
    assert "palais-smale: FAIL" in result.stdout
    assert "xi-generic: skipped (no xi)" in result.stdout
    assert result.stdout.rstrip().endswith("valid")

    result = invoke("validate", "--builtin", "paper-flag3", "--json")
    data = json.loads(result.stdout)
    assert data["valid"] and data["palaisSmale"] and data["connected"]


def test_validate_reports_invalid_files(tmp_path):
    path = tmp_path / "cycle.gkm"
    path.write_text("rank 1\nvertex S\nvertex N\nedge S N : t1\nedge N S : 2*t1\n")
    result = invoke("validate", path)
    assert result.exit_code == 1
    assert "acyclic-orientation: fail" in result.stdout
    assert result.stdout.rstrip().endswith("invalid")


def test_parse_errors_exit_2(tmp_path):
    path = tmp_path / "broken.gkm"
    path.write_text("rank 1\nvertex S pos x\n")
    assert invoke("validate", path).exit_code == 2
    assert invoke("hilbert", path).exit_code == 2


def test_graphs_failing_checks_exit_1(tmp_path):
    path = tmp_path / "cycle.gkm"
    path.write_text("rank 1\nvertex S\nvertex N\nedge S N : t1\nedge N S : 2*t1\n")
    assert invoke("hilbert", path).exit_code == 1


def test_hilbert():
    result = invoke("hilbert", "--builtin", "cp1", "--max-degree", 4)
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["dims: 1 2 2 2 2", "betti: 1 1", "free: yes"]

    result = invoke("hilbert", "--builtin", "cpn", "--n", 2, "--max-degree", 4, "--json")
    assert json.loads(result.stdout) == {"dims": [1, 3, 6, 9, 12], "betti": [1, 1, 1], "free": True}


def test_small_max_degree_is_a_usage_error():
    assert invoke("hilbert", "--builtin", "cpn", "--n", 2, "--max-degree", 1).exit_code == 2
    assert invoke("generators", "--builtin", "cpn", "--n", 2, "--max-degree", 1).exit_code == 2


def test_betti():
    result = invoke("betti", "--builtin", "paper-quadric")
    assert result.exit_code == 0
    assert result.stdout == "1 1 2 1 1\n"

    result = invoke("betti", "--builtin", "cpn", "--n", 2, "--json", "--threads", 2)
    data = json.loads(result.stdout)
    assert data["betti"] == [1, 1, 1]
    assert data["poincarePolynomial"] == "1 + q + q^2"
    assert data["eulerCharacteristic"] == 3


def test_generators():
    result = invoke("generators", "--builtin", "cpn", "--n", 2)
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "p1  degree 0  (1,1,1)",
        "p2  degree 1  (0,t1,t2)",
        "p3  degree 2  (0,0,t2*(t2-t1))",
    ]


def test_generator_at_one_vertex():
    result = invoke("generators", "--builtin", "paper-hessenberg", "--vertex", "lower-right")
    assert result.exit_code == 0
    assert result.stdout == "lower-right  degree 1  (0,0,t2,0,t1,0)  ambiguity 1\n"

    assert invoke("generators", "--builtin", "cp1", "--vertex", "Q").exit_code == 2


def test_generators_json():
    result = invoke("generators", "--builtin", "cp1", "--json")
    assert json.loads(result.stdout) == [
        {"base": "S", "degree": 0, "ambiguity": 0, "values": {"S": "1", "N": "1"}},
        {"base": "N", "degree": 1, "ambiguity": 0, "values": {"S": "0", "N": "t1"}},
    ]


def test_generic_section():
    result = invoke("generators", "--builtin", "paper-quadric", "--generic")
    assert result.exit_code == 0
    assert "x2: p1 + t3*p2" in result.stdout.splitlines()


def test_check(class_file):
    good = class_file("u.json", '{"values": {"p2": "t1", "p3": "t2"}}')
    result = invoke("check", "--class", good, "--builtin", "cpn", "--n", 2)
    assert result.exit_code == 0
    assert result.stdout == "(0,t1,t2)\nvalid\n"

    bad = class_file("bad.json", '{"values": {"p2": "t2", "p3": "t2"}}')
    result = invoke("check", "--class", bad, "--builtin", "cpn", "--n", 2)
    assert result.exit_code == 1
    assert "invalid: p1->p2 [t1]" in result.stdout

    result = invoke("check", "--class", bad, "--builtin", "cpn", "--n", 2, "--json")
    assert json.loads(result.stdout)["violatedEdges"] == ["p1->p2 [t1]"]


def test_class_file_errors_exit_2(class_file):
    unknown = class_file("unknown.json", '{"values": {"p7": "t1"}}')
    assert invoke("check", "--class", unknown, "--builtin", "cpn", "--n", 2).exit_code == 2
    mixed = class_file("mixed.json", '{"values": {"p2": "t1 + 1"}}')
    assert invoke("check", "--class", mixed, "--builtin", "cpn", "--n", 2).exit_code == 2


def test_multiply(class_file):
    u = class_file("u.json", '{"values": {"p2": "t1", "p3": "t2"}}')
    result = invoke("multiply", "--class", u, "--class", u, "--builtin", "cpn", "--n", 2, "--expand")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["(0,t1^2,t2^2)", "expansion: (0,t1,1)"]

    assert invoke("multiply", "--class", u, "--builtin", "cpn", "--n", 2).exit_code == 2


def test_multiply_refuses_non_classes(class_file):
    u = class_file("u.json", '{"values": {"p2": "t1", "p3": "t2"}}')
    bad = class_file("bad.json", '{"values": {"p2": "t2", "p3": "t2"}}')
    assert invoke("multiply", "--class", u, "--class", bad, "--builtin", "cpn", "--n", 2).exit_code == 1


def test_ordinary():
    result = invoke("ordinary", "--builtin", "cpn", "--n", 2)
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert "g1 = [p1]  degree 0" in lines
    assert "g2*g2 = g3" in lines
    assert "g2*g3 = 0" in lines

    data = json.loads(invoke("ordinary", "--builtin", "cpn", "--n", 2, "--json").stdout)
    assert data["generators"] == [0, 1, 2]
    assert data["table"][1][1] == [[2, "1"]]


def test_render(tmp_path):
    output = tmp_path / "flag3.dot"
    result = invoke("render", "--builtin", "paper-flag3", "-o", output)
    assert result.exit_code == 0
    assert output.read_text().count("->") == 9


def test_render_into_missing_directory(tmp_path):
    output = tmp_path / "missing" / "graph.dot"
    assert invoke("render", "--builtin", "cp1", "-o", output).exit_code == 1
    assert not output.exists()


def test_run_returns_exit_codes(capsys):
    assert run(["betti", "--builtin", "cp1"]) == 0
    assert capsys.readouterr().out == "1 1\n"
    assert run(["builtin", "nope"]) == 2
