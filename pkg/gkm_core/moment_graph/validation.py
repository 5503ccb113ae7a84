"""GKM validity checks for moment graphs.

`validate` never raises for an invalid graph; it reports every check with the
elements that failed it. A check that cannot run (no xi, no positions) is
reported as skipped.
"""

from __future__ import annotations

import collections
import enum
import itertools
import sys
import typing

import networkx as nx
import pydantic

from gkm_core.moment_graph.models import MomentGraph


if sys.version_info >= (3, 11):
    _StrEnum = enum.StrEnum
else:

    class _StrEnum(str, enum.Enum):
        __str__ = str.__str__
        __format__ = str.__format__


class CheckStatus(_StrEnum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


CHECK_NAMES = (
    "unique-names",
    "endpoints-exist",
    "acyclic-orientation",
    "distinct-directions-at-vertex",
    "xi-generic",
    "positions-parallel-to-directions",
)


class CheckResult(pydantic.BaseModel):
    name: str
    status: CheckStatus
    offending: list[str] = []
    detail: str = ""


class ValidationReport(pydantic.BaseModel):
    checks: list[CheckResult]

    @property
    def valid(self) -> bool:
        return all(c.status != CheckStatus.FAIL for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == CheckStatus.FAIL]

    def __getitem__(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)


def _result(name: str, offending: typing.Sequence[str], detail: str = "") -> CheckResult:
    return CheckResult(
        name=name,
        status=CheckStatus.FAIL if offending else CheckStatus.PASS,
        offending=list(offending),
        detail=detail,
    )


def check_unique_names(g: MomentGraph) -> CheckResult:
    counts = collections.Counter(v.name for v in g.vertices)
    return _result("unique-names", sorted(name for name, n in counts.items() if n > 1))


def check_endpoints_exist(g: MomentGraph) -> CheckResult:
    names = set(g.names)
    offending = [
        str(e) for e in g.edges if e.south not in names or e.north not in names
    ]
    return _result("endpoints-exist", offending)


def as_digraph(g: MomentGraph) -> nx.MultiDiGraph:
    digraph = nx.MultiDiGraph()
    digraph.add_nodes_from(g.names)
    digraph.add_edges_from((e.south, e.north) for e in g.edges)
    return digraph


def check_acyclic_orientation(g: MomentGraph) -> CheckResult:
    offending = [f"self-loop {e}" for e in g.edges if e.south == e.north]
    digraph = as_digraph(g)
    digraph.remove_edges_from(list(nx.selfloop_edges(digraph)))
    if not nx.is_directed_acyclic_graph(digraph):
        cycle = nx.find_cycle(digraph)
        offending.append("cycle " + " -> ".join([u for u, *_ in cycle] + [cycle[0][0]]))
    return _result("acyclic-orientation", offending)


def check_distinct_directions(g: MomentGraph) -> CheckResult:
    offending = []
    for name in g.names:
        for a, b in itertools.combinations(g.incident(name), 2):
            if a.direction.is_proportional(b.direction):
                offending.append(f"{name}: {a} and {b}")
    return _result("distinct-directions-at-vertex", offending)


def check_xi_generic(g: MomentGraph) -> CheckResult:
    if g.xi is None:
        return CheckResult(name="xi-generic", status=CheckStatus.SKIPPED, detail="no xi")
    offending = [str(e) for e in g.edges if e.direction.pair(g.xi) == 0]
    return _result("xi-generic", offending)


def check_positions_parallel(g: MomentGraph) -> CheckResult:
    names = set(g.names)
    offending = []
    ran = False
    for e in g.edges:
        if e.south not in names or e.north not in names:
            continue
        south, north = g.vertex(e.south).position, g.vertex(e.north).position
        if south is None or north is None:
            continue
        ran = True
        delta = [n - s for n, s in zip(north, south)]
        coefficients = e.direction.coefficients
        p = e.direction.pivot
        ratio = delta[p] / coefficients[p]
        if ratio <= 0 or any(d != ratio * c for d, c in zip(delta, coefficients)):
            offending.append(str(e))
    if not ran:
        return CheckResult(
            name="positions-parallel-to-directions",
            status=CheckStatus.SKIPPED,
            detail="no edge has both endpoint positions",
        )
    return _result("positions-parallel-to-directions", offending)


def validate(g: MomentGraph) -> ValidationReport:
    return ValidationReport(
        checks=[
            check_unique_names(g),
            check_endpoints_exist(g),
            check_acyclic_orientation(g),
            check_distinct_directions(g),
            check_xi_generic(g),
            check_positions_parallel(g),
        ]
    )


def is_connected(g: MomentGraph) -> bool:
    if not g.vertices:
        return False
    return nx.is_weakly_connected(as_digraph(g))
