from gkm_core.cohomology.classes import GKMClass, check_class, multiply
from gkm_core.cohomology.expansion import (
    Expansion,
    OrdinaryTable,
    euler_characteristic,
    expand,
    ordinary_table,
    poincare_polynomial,
)
from gkm_core.cohomology.generators import (
    Generator,
    GeneratorSet,
    all_generators,
    flow_up_generator,
    generic_section,
)
from gkm_core.cohomology.sections import (
    HilbertData,
    hilbert,
    section_basis,
    section_dimension,
)

__all__ = [
    "Expansion",
    "GKMClass",
    "Generator",
    "GeneratorSet",
    "HilbertData",
    "OrdinaryTable",
    "all_generators",
    "check_class",
    "euler_characteristic",
    "expand",
    "flow_up_generator",
    "generic_section",
    "hilbert",
    "multiply",
    "ordinary_table",
    "poincare_polynomial",
    "section_basis",
    "section_dimension",
]
