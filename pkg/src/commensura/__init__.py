"""Exact decision procedures for weak commensurability and friends.

The package answers, with certificates instead of floating point:
whether two semisimple matrices share a nontrivial multiplicative
eigenvalue relation, whether an element (or a random-walk sample) is
generic in the sense that its torus sees the full Weyl group, what the
geodesic lengths attached to SL_2 words are, and whether a B_n/C_n
pair of groups over Q are twins place by place.  The `commensura`
console script exposes all of it on JSON problem files.
"""

from ._kernels import BACKEND_NAME
from .arithlocal import (
    PlaceQ,
    QuadraticFormQ,
    QuaternionAlgebraQ,
    bc_torus_correspondence,
    fixed_dimension,
    hilbert_symbol,
    quaternion_splits,
    twins,
    witt_index,
)
from .errors import CommensuraError
from .exactnum import AlgebraicNumber, PolyQ
from .genericity import (
    certify_generic_poly,
    dichotomy_check,
    generates_mod_p,
    is_generic_element,
    random_walk_sample,
)
from .rootsys import (
    RootSystemType,
    casimir_constant,
    conjugacy_classes,
    minus_one_in_weyl,
    quadratic_sum,
    weyl_order,
)
from .spectra import (
    bc_scaling_check,
    hyperbolic_length,
    lambda_gamma,
    rational_length_spectrum,
)
from .weakcomm import (
    CommensurabilityVerdict,
    RelationLattice,
    SemisimpleElement,
    relation_lattice,
    weakly_commensurable,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND_NAME",
    "PlaceQ",
    "QuadraticFormQ",
    "QuaternionAlgebraQ",
    "bc_torus_correspondence",
    "fixed_dimension",
    "hilbert_symbol",
    "quaternion_splits",
    "twins",
    "witt_index",
    "CommensuraError",
    "AlgebraicNumber",
    "PolyQ",
    "certify_generic_poly",
    "dichotomy_check",
    "generates_mod_p",
    "is_generic_element",
    "random_walk_sample",
    "RootSystemType",
    "casimir_constant",
    "conjugacy_classes",
    "minus_one_in_weyl",
    "quadratic_sum",
    "weyl_order",
    "bc_scaling_check",
    "hyperbolic_length",
    "lambda_gamma",
    "rational_length_spectrum",
    "CommensurabilityVerdict",
    "RelationLattice",
    "SemisimpleElement",
    "relation_lattice",
    "weakly_commensurable",
    "__version__",
]
