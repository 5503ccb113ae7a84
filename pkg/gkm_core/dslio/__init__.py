from gkm_core.dslio.class_files import ClassDocument, emit_class, parse_class
from gkm_core.dslio.dot import emit_dot
from gkm_core.dslio.graph_dsl import (
    GraphDocument,
    parse_graph,
    parse_graph_document,
    serialize_graph,
)
from gkm_core.dslio.json_format import emit_json, parse_graph_json
from gkm_core.dslio.polynomial_syntax import (
    format_polynomial,
    parse_linear_form,
    parse_polynomial,
)


def read_graph(text: str, validate: bool = True):
    """DSL or JSON, told apart by the first non-blank character."""
    if text.lstrip().startswith("{"):
        return parse_graph_json(text, validate=validate)
    return parse_graph(text, validate=validate)


__all__ = [
    "ClassDocument",
    "GraphDocument",
    "emit_class",
    "emit_dot",
    "emit_json",
    "format_polynomial",
    "parse_class",
    "parse_graph",
    "parse_graph_document",
    "parse_graph_json",
    "parse_linear_form",
    "parse_polynomial",
    "read_graph",
    "serialize_graph",
]
