"""The line-oriented moment-graph language.

    # CP^1
    rank 1
    vertex S pos 0
    vertex N pos 1
    edge S N : t1
    xi 1

`rank` comes first. Vertices keep their declaration order, edges are oriented
south -> north as written and `#` starts a comment.
"""

from __future__ import annotations

import dataclasses
import fractions
import logging
import re

from gkm_core.exceptions import GKMParseError, GKMValidationError
from gkm_core.models_base import to_fraction
from gkm_core.moment_graph.models import MAX_RANK, Edge, MomentGraph, Vertex
from gkm_core.moment_graph.validation import validate as validate_graph
from gkm_core.dslio.polynomial_syntax import parse_linear_form

logger = logging.getLogger(__name__)

WORD = re.compile(r"[^\s:]+|:")
NAME = re.compile(r"[A-Za-z0-9_.\-]+")

Span = tuple[int, int]


@dataclasses.dataclass(frozen=True)
class GraphDocument:
    """A parsed graph with the (line, column) of every declaration. Vertices are
    keyed by name, edges by their text `S->N [form]`."""

    graph: MomentGraph
    rank_span: Span
    vertex_spans: dict[str, Span]
    edge_spans: dict[str, Span]
    xi_span: Span | None = None

    def locate(self, element: str) -> Span | None:
        candidates = [element, element.removeprefix("self-loop ")]
        candidates.append(element.split(":")[0].strip())
        candidates.append(element.removeprefix("cycle ").split(" -> ")[0].strip())
        for candidate in candidates:
            if candidate in self.edge_spans:
                return self.edge_spans[candidate]
            if candidate in self.vertex_spans:
                return self.vertex_spans[candidate]
        return None


def _words(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in WORD.finditer(line)]


def _rationals(
    words: list[tuple[str, int]], k: int, line: int, what: str, anchor: int
) -> tuple[fractions.Fraction, ...]:
    if len(words) != k:
        raise GKMParseError(f"{what} needs {k} coordinates, got {len(words)}", line, anchor)
    values = []
    for text, column in words:
        try:
            values.append(to_fraction(text))
        except ValueError:
            raise GKMParseError(f"not a rational number: {text!r}", line, column)
    return tuple(values)


class GraphParser:
    def __init__(self, text: str):
        self.text = text
        self.rank: int | None = None
        self.rank_span: Span | None = None
        self.vertices: list[Vertex] = []
        self.vertex_spans: dict[str, Span] = {}
        self.edges: list[Edge] = []
        self.edge_spans: dict[str, Span] = {}
        self.xi: tuple[fractions.Fraction, ...] | None = None
        self.xi_span: Span | None = None

    def need_rank(self, line: int, column: int) -> int:
        if self.rank is None:
            raise GKMParseError("'rank' must be declared first", line, column)
        return self.rank

    def parse(self) -> GraphDocument:
        for number, raw in enumerate(self.text.splitlines(), start=1):
            line = raw.split("#", 1)[0]
            words = _words(line)
            if not words:
                continue
            keyword, column = words[0]
            match keyword:
                case "rank":
                    self.parse_rank(words, number)
                case "vertex":
                    self.parse_vertex(words, number)
                case "edge":
                    self.parse_edge(line, words, number)
                case "xi":
                    self.parse_xi(words, number)
                case _:
                    raise GKMParseError(f"unknown declaration {keyword!r}", number, column)

        if self.rank is None:
            raise GKMParseError("missing 'rank' declaration", 1, 1)

        graph = MomentGraph(
            rank=self.rank,
            vertices=tuple(self.vertices),
            edges=tuple(self.edges),
            xi=self.xi,
        )
        return GraphDocument(
            graph=graph,
            rank_span=self.rank_span,
            vertex_spans=self.vertex_spans,
            edge_spans=self.edge_spans,
            xi_span=self.xi_span,
        )

    def parse_rank(self, words: list[tuple[str, int]], line: int):
        _, column = words[0]
        if self.rank is not None:
            raise GKMParseError("'rank' declared twice", line, column)
        if len(words) != 2 or not words[1][0].isdecimal():
            raise GKMParseError("expected 'rank <k>'", line, column)
        text, rank_column = words[1]
        if len(text) > 3 or not 1 <= int(text) <= MAX_RANK:
            raise GKMParseError(f"rank must be between 1 and {MAX_RANK}", line, rank_column)
        rank = int(text)
        self.rank, self.rank_span = rank, (line, column)

    def parse_vertex(self, words: list[tuple[str, int]], line: int):
        k = self.need_rank(line, words[0][1])
        if len(words) < 2:
            raise GKMParseError("expected 'vertex <name>'", line, words[0][1])
        name, column = words[1]
        if not NAME.fullmatch(name):
            raise GKMParseError(f"invalid vertex name {name!r}", line, column)

        position = None
        if len(words) > 2:
            if words[2][0] != "pos":
                raise GKMParseError(f"expected 'pos', found {words[2][0]!r}", line, words[2][1])
            position = _rationals(words[3:], k, line, "pos", words[2][1])

        self.vertices.append(Vertex(name=name, position=position))
        # A repeated name keeps its second span; validation reports it there.
        self.vertex_spans[name] = (line, column)

    def parse_edge(self, text: str, words: list[tuple[str, int]], line: int):
        k = self.need_rank(line, words[0][1])
        colon = text.find(":")
        head = [w for w in words if w[1] <= colon + 1] if colon >= 0 else words
        if colon < 0 or len(head) != 4 or head[3][0] != ":":
            raise GKMParseError("expected 'edge <south> <north> : <form>'", line, words[0][1])
        (south, south_column), (north, north_column) = head[1], head[2]
        for name, column in ((south, south_column), (north, north_column)):
            if not NAME.fullmatch(name):
                raise GKMParseError(f"invalid vertex name {name!r}", line, column)
        if south == north:
            raise GKMValidationError(
                "acyclic-orientation", [f"self-loop at vertex '{south}'"], (line, south_column)
            )

        form_text = text[colon + 1 :]
        if not form_text.strip():
            raise GKMParseError("missing edge direction", line, colon + 2)
        direction = parse_linear_form(form_text, k, line, colon + 2)
        edge = Edge(south=south, north=north, direction=direction)
        self.edges.append(edge)
        self.edge_spans[str(edge)] = (line, words[0][1])

    def parse_xi(self, words: list[tuple[str, int]], line: int):
        k = self.need_rank(line, words[0][1])
        if self.xi is not None:
            raise GKMParseError("'xi' declared twice", line, words[0][1])
        self.xi = _rationals(words[1:], k, line, "xi", words[0][1])
        self.xi_span = (line, words[0][1])


def parse_graph_document(text: str, validate: bool = True) -> GraphDocument:
    """Parses DSL text. With `validate`, the first failed GKM check is raised as
    a GKMValidationError located at the offending declaration."""
    document = GraphParser(text).parse()
    if validate:
        report = validate_graph(document.graph)
        for failure in report.failures:
            location = document.locate(failure.offending[0]) if failure.offending else None
            logger.debug("check %s failed on %s", failure.name, failure.offending)
            raise GKMValidationError(failure.name, failure.offending, location)
    return document


def parse_graph(text: str, validate: bool = True) -> MomentGraph:
    return parse_graph_document(text, validate=validate).graph


def serialize_graph(g: MomentGraph) -> str:
    lines = [f"rank {g.rank}"]
    for v in g.vertices:
        if v.position is None:
            lines.append(f"vertex {v.name}")
        else:
            lines.append(f"vertex {v.name} pos {' '.join(map(str, v.position))}")
    for e in g.edges:
        lines.append(f"edge {e.south} {e.north} : {e.direction}")
    if g.xi is not None:
        lines.append(f"xi {' '.join(map(str, g.xi))}")
    return "\n".join(lines) + "\n"
