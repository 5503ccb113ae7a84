from typing import (
    Callable,
    Optional,
    Union,
    overload,
    TypedDict,
    TYPE_CHECKING,
)
from functools import wraps

if TYPE_CHECKING:
    from gkm_core.moment_graph.models import MomentGraph


GraphBuilder = Callable[..., "MomentGraph"]


class BuiltinRegistryItem(TypedDict):
    name: str
    function: GraphBuilder
    parameters: tuple[str, ...]
    description: str


BuiltinRegistry: dict[str, BuiltinRegistryItem] = {}


def _register(func: GraphBuilder, name: str, parameters: tuple[str, ...]) -> GraphBuilder:
    function = wraps(func)(func)
    BuiltinRegistry[name] = {
        "name": name,
        "function": function,
        "parameters": parameters,
        "description": (func.__doc__ or "").strip().splitlines()[0] if func.__doc__ else "",
    }
    return function


@overload
def builtin_graph(func: GraphBuilder) -> GraphBuilder: ...


@overload
def builtin_graph(
    *, name: Optional[str] = None, parameters: tuple[str, ...] = ()
) -> Callable[[GraphBuilder], GraphBuilder]: ...


def builtin_graph(
    func: Optional[GraphBuilder] = None,
    *,
    name: Optional[str] = None,
    parameters: tuple[str, ...] = (),
) -> Union[Callable[[GraphBuilder], GraphBuilder], GraphBuilder]:
    """
    Registers a function building a named moment graph
    """

    # Without arguments `func` is passed directly to the decorator
    if func is not None:
        if not callable(func):
            raise TypeError("Not a callable. Did you use a non-keyword argument?")
        return _register(func, func.__name__.replace("_", "-"), ())

    # With arguments, we need to return a function that accepts the function
    def decorator(func: GraphBuilder) -> GraphBuilder:
        return _register(func, name or func.__name__.replace("_", "-"), parameters)

    return decorator
