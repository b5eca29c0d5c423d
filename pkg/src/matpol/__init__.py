"""Exact computational algebra for matroid-attached polynomials.

Matroids as explicit basis families; sparse polynomials over Q or a prime
field; the basis-support / rank-generating / configuration / flag / graph
polynomial constructions with their deletion-contraction and handle-split
identities; jet prolongation with finite-field point counting; and
Frobenius-splitting certificates in positive characteristic.
"""

from .constructions import (
    SingletonData,
    configuration_poly,
    dc_split,
    handle_split,
    is_matroidal,
    maximal_rank_poly,
    min_part_is_msp_check,
    msp_build,
    normalize_coordinates,
    search_matroidal,
    singular_identity_check,
    tutte_identities,
    tutte_poly,
    verify_handle_formula,
)
from .errors import InputError, PreconditionError, ResourceError, StructureError
from .feynman import (
    FeynmanDiagram,
    FeynmanIntegrand,
    diagram_from_json,
    diagram_integrand,
    diagram_poly,
    diagram_to_json,
    euler_identity_check,
    feynman_handle_check,
    integrand_build,
    kinematics_check,
    mass_form,
    spanning_forests,
    support_quotient_check,
    symanzik_F,
    symanzik_U,
)
from .flags import (
    FlagMatroid,
    build_flag,
    flag_dc_split,
    flag_from_json,
    flag_handle_split,
    flag_poly,
    flag_to_json,
    truncation_flag,
)
from .fsing import (
    FregCertificate,
    fpure_check,
    frobenius_membership,
    predicted_witness,
    split_witness,
    strong_freg_certificate,
)
from .jets import (
    JetRing,
    boolean_jet_reference,
    count_points,
    dimension_probe,
    gamma_restriction_check,
    gamma_restriction_check_feynman,
    gamma_restriction_check_flag,
    jet_generators,
    product_cover_check,
    prolong,
    ring_for,
)
from .matroid import (
    Matroid,
    column_matroid,
    default_labels,
    edges_to_mask,
    graphic,
    is_quotient,
    mask_to_edges,
    matroid_from_json,
    matroid_to_json,
    uniform,
)
from .polyring import (
    FIELD_Q,
    Poly,
    Var,
    cremona,
    derivative,
    euler_apply,
    evaluate,
    is_multilinear,
    min_part,
    mkvar,
    poly_from_json,
    poly_to_json,
    reduce_mod,
    substitute,
    support_sets,
)

__version__ = "0.1.0"
