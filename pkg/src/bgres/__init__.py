"""Exact mod-2 homological algebra toolkit.

Computes injective resolutions built from Brown-Gitler modules, Ext charts
of spheres, the Lambda algebra and its homology, and Poincaré series of
canonical strict polynomial functor resolutions, all over GF(2) with exact
arithmetic.
"""

__version__ = "0.1.0"

from .f2linalg import F2Matrix
from .steenrod import SteenrodOp, adem_reduce, admissible_basis, dim_free, excess, lucas_binom_mod2

__all__ = [
    "F2Matrix",
    "SteenrodOp",
    "adem_reduce",
    "admissible_basis",
    "dim_free",
    "excess",
    "lucas_binom_mod2",
    "BGModule",
    "BGMorphism",
    "BGComplex",
    "dim_j",
    "mahowald",
    "assemble_psr",
    "suspend_complex",
    "build_graph",
    "minimal_reduce",
    "ext_complex",
    "poincare",
    "sphere_min_resolution",
    "ext_table",
    "__version__",
]

from .browngitler import BGComplex, BGModule, BGMorphism, dim_j, mahowald
from .psr import (
    assemble_psr,
    build_graph,
    ext_complex,
    minimal_reduce,
    poincare,
    suspend_complex,
)
from .spheres import ext_table, sphere_min_resolution
