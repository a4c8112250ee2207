"""Polyhedral-cone realization of extremal-weight crystals for rank-2 hyperbolic Cartan matrices.

The lattice model lives in a semi-infinite integer lattice indexed by Z with
the alternating color sequence (…,2,1,2,1 | 2,1,2,…); the cone is cut out by
affine functions with coefficients in Q(√D).  Everything is exact integer or
quadratic-field arithmetic; the command line drives the theorem-level checks
(cone closure under the crystal operators, extremality of starred cone
elements, cone = extremal-star locus, and the weight-orbit classification).
"""

from .cartan import (
    CartanData,
    LambdaConfig,
    OrbitVerdict,
    Weight,
    c_seq,
    classify_orbit,
    p_seq,
    validate_lambda_form,
    weyl_translate,
)
from .cone import (
    FAMILIES,
    LinFunc,
    beta_bar,
    s_bar,
    sigma_membership,
    verify_descent_identities,
    xi_generator,
)
from .enumeration import (
    CounterexampleError,
    EnumConfig,
    bfs_enumerate,
    box_enumerate_img,
    box_enumerate_sigma,
    export_graph,
    verify_equality,
    verify_shift_equivalences,
)
from .lattice import (
    CrystalElt,
    ImageMembershipError,
    LatticeError,
    MinusVec,
    PlusVec,
    apply_e,
    apply_f,
    elt_from_json,
    elt_to_json,
    eps_phi,
    img_membership,
    make_elt,
    sigma_k,
    star_full,
    star_minus,
    star_plus,
    weight_of,
    z_lambda,
)
from .quadfield import QuadNum, hyperbolic_radicand, make_alpha_beta
from .weyl import (
    ExtremalityReport,
    WeylDomainError,
    ef_max,
    is_extremal,
    sw_closed_form_check,
    weyl_S,
    weyl_Sw,
    weyl_walk,
    weyl_word,
)

__all__ = [
    "CartanData",
    "CounterexampleError",
    "CrystalElt",
    "EnumConfig",
    "ExtremalityReport",
    "FAMILIES",
    "ImageMembershipError",
    "LambdaConfig",
    "LatticeError",
    "LinFunc",
    "MinusVec",
    "OrbitVerdict",
    "PlusVec",
    "QuadNum",
    "Weight",
    "WeylDomainError",
    "apply_e",
    "apply_f",
    "beta_bar",
    "bfs_enumerate",
    "box_enumerate_img",
    "box_enumerate_sigma",
    "c_seq",
    "classify_orbit",
    "ef_max",
    "elt_from_json",
    "elt_to_json",
    "eps_phi",
    "export_graph",
    "hyperbolic_radicand",
    "img_membership",
    "is_extremal",
    "make_alpha_beta",
    "make_elt",
    "p_seq",
    "s_bar",
    "sigma_k",
    "sigma_membership",
    "star_full",
    "star_minus",
    "star_plus",
    "sw_closed_form_check",
    "validate_lambda_form",
    "verify_descent_identities",
    "verify_equality",
    "verify_shift_equivalences",
    "weight_of",
    "weyl_S",
    "weyl_Sw",
    "weyl_translate",
    "weyl_walk",
    "weyl_word",
    "xi_generator",
    "z_lambda",
]

__version__ = "0.1.0"
