import functools

from gkm_core.cohomology import GKMClass
from gkm_core.dslio import parse_polynomial
from gkm_core.moment_graph import builtin


@functools.cache
def cached_builtin(name: str, n: int | None = None, k: int | None = None):
    return builtin(name, n=n, k=k)


def poly(text: str, k: int):
    return parse_polynomial(text, k)


def class_of(g, degree: int, *values: str) -> GKMClass:
    """A class from value texts listed in the graph's vertex order."""
    return GKMClass.from_tuple(g, degree, tuple(poly(v, g.rank) for v in values))
