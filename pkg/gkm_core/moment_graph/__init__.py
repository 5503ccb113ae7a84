from gkm_core.moment_graph.builtins import builtin, builtin_names
from gkm_core.moment_graph.models import Edge, MomentGraph, Vertex
from gkm_core.moment_graph.order import (
    down_degree,
    down_degrees,
    is_above,
    linear_extension,
    orient_from_xi,
    palais_smale_check,
    up_set,
)
from gkm_core.moment_graph.validation import (
    CheckResult,
    CheckStatus,
    ValidationReport,
    is_connected,
    validate,
)

__all__ = [
    "CheckResult",
    "CheckStatus",
    "Edge",
    "MomentGraph",
    "ValidationReport",
    "Vertex",
    "builtin",
    "builtin_names",
    "down_degree",
    "down_degrees",
    "is_above",
    "is_connected",
    "linear_extension",
    "orient_from_xi",
    "palais_smale_check",
    "up_set",
    "validate",
]
