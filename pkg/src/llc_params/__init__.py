"""Exact-arithmetic invariants of tame elliptic parameter components.

The package computes, in integer arithmetic only:

* Smith normal form and the derived abelian-group calculus (`lattice`,
  `abgroups`),
* diagonalizable groups via character groups (`diag`),
* root data of the dual groups with their standard twists (`rootdata`),
* the component structure of spaces of tame torus-valued cocycles
  (`cocycles`),
* tame regular elliptic GL_n parameters as exponent matrices (`glparams`),
* the block-side invariants and the matcher that certifies both sides agree
  (`blocks`).

The command line front end lives in `cli` (entry point ``llc-params``).
"""

from .abgroups import FinGenAbGroup, cokernel, group_order
from .blocks import (
    ApplicabilityFlag,
    BlockDescriptor,
    CategoricalSummary,
    MatchReport,
    categorical_summary,
    ell_block_invariant,
    finite_torus,
    gln_block_descriptor,
    match_sides,
    torus_block_descriptor,
)
from .cocycles import (
    CocycleSpace,
    ComponentDescriptor,
    FrobTorus,
    POINT_MOD_STABILIZER,
    TORUS_QUOTIENT,
    cocycle_space,
    component_descriptor,
    ellipticity_check,
    frob_fixed_scheme,
    mu_invariant,
    twisted_centralizer,
)
from .diag import (
    DiagGroup,
    DiagHom,
    component_group,
    geometric_points,
    identity_component,
    mu,
    product,
    torus,
    torus_hom_kernel,
)
from .errors import (
    CoefficientMismatch,
    DimensionMismatch,
    InfiniteGroup,
    InternalError,
    InvalidArgument,
    InvalidPrime,
    InvalidPrimePower,
    InvalidRank,
    LlcError,
    ShapeMismatch,
    TorusExpected,
    UnsupportedFamily,
)
from .glparams import (
    FBAR,
    ParamMatrices,
    TrselpGL,
    ZBAR,
    count_params,
    enumerate_params,
    equivalent,
    lifts_in_component,
    matrices,
    nilpotent_support_fixed_positions,
    reduction,
    verify_cocycle,
)
from .lattice import IntMatrix, kernel_basis, smith_normal_form
from .lattice import rank as matrix_rank
from .rootdata import (
    RootDatum,
    WeylTwist,
    center_char_group,
    coxeter_twist,
    identity_twist,
    preset,
    weyl_twist,
)
from .rootdata import validate as validate_root_datum

__version__ = "0.1.0"

__all__ = [
    "ApplicabilityFlag",
    "BlockDescriptor",
    "CategoricalSummary",
    "CocycleSpace",
    "CoefficientMismatch",
    "ComponentDescriptor",
    "DiagGroup",
    "DiagHom",
    "DimensionMismatch",
    "FBAR",
    "FinGenAbGroup",
    "FrobTorus",
    "InfiniteGroup",
    "IntMatrix",
    "InternalError",
    "InvalidArgument",
    "InvalidPrime",
    "InvalidPrimePower",
    "InvalidRank",
    "LlcError",
    "MatchReport",
    "POINT_MOD_STABILIZER",
    "ParamMatrices",
    "RootDatum",
    "ShapeMismatch",
    "TORUS_QUOTIENT",
    "TorusExpected",
    "TrselpGL",
    "UnsupportedFamily",
    "WeylTwist",
    "ZBAR",
    "categorical_summary",
    "center_char_group",
    "cokernel",
    "component_descriptor",
    "component_group",
    "cocycle_space",
    "count_params",
    "coxeter_twist",
    "ell_block_invariant",
    "ellipticity_check",
    "enumerate_params",
    "equivalent",
    "finite_torus",
    "frob_fixed_scheme",
    "geometric_points",
    "gln_block_descriptor",
    "group_order",
    "identity_component",
    "identity_twist",
    "kernel_basis",
    "lifts_in_component",
    "match_sides",
    "matrices",
    "matrix_rank",
    "mu",
    "mu_invariant",
    "nilpotent_support_fixed_positions",
    "preset",
    "product",
    "reduction",
    "smith_normal_form",
    "torus",
    "torus_block_descriptor",
    "torus_hom_kernel",
    "twisted_centralizer",
    "validate_root_datum",
    "verify_cocycle",
    "weyl_twist",
]
