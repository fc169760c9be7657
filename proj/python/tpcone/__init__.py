"""Exterior powers, total-positivity classification and spectral verification.

Thin wrapper over the compiled extension; matrices travel as 2D numpy
arrays, cones and reports as plain dicts.
"""

from ._core import (
    ClassificationError,
    InputError,
    NumericError,
    ResourceError,
    __version__,
    classify,
    compound,
    cone_adjoint,
    cone_contains,
    cone_max_angle,
    detect_js,
    eigen,
    generate,
    gk_verify,
    hodge,
    kronecker_eigs,
    m_membership,
    minor,
    perron_root,
    permutation_similar,
    random_stp,
    rotation3,
    sign_variation,
    signature_conjugate,
    subset_rank,
    subset_unrank,
    t_chain_membership,
    t_membership,
    vandermonde,
    vdp_check,
    wedge,
)

__all__ = [
    "ClassificationError",
    "InputError",
    "NumericError",
    "ResourceError",
    "__version__",
    "classify",
    "compound",
    "cone_adjoint",
    "cone_contains",
    "cone_max_angle",
    "detect_js",
    "eigen",
    "generate",
    "gk_verify",
    "hodge",
    "kronecker_eigs",
    "m_membership",
    "minor",
    "perron_root",
    "permutation_similar",
    "random_stp",
    "rotation3",
    "sign_variation",
    "signature_conjugate",
    "subset_rank",
    "subset_unrank",
    "t_chain_membership",
    "t_membership",
    "vandermonde",
    "vdp_check",
    "wedge",
]
