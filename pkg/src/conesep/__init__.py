"""conesep: exact-arithmetic separation of polyhedral cones by conical
surfaces, with certified LP, augmented dual cone oracles, and verification.
"""

__version__ = "0.1.0"

from .augdual import (
    AugDualClass,
    AugmentedFunctional,
    BPCone,
    bp_class,
    bp_cone,
    classify_augmented,
    is_dilating,
    level_set_cone,
    origin_exclusion_report,
    phi_eval,
    shrink_to_sharp,
    witness_a_plus,
)
from .numerics import (
    Functional,
    Infeasible,
    Optimal,
    Scalar,
    SeparatingHyperplane,
    Unbounded,
    Vector,
    nullspace_basis,
    point_in_hull,
    rat,
    rat_str,
    separate_polytopes,
    solve_lp,
    verify_lp_outcome,
)
from .polyhedra import (
    BaseClassification,
    BasePolytope,
    ConeUnion,
    ConvexConePiece,
    base_polytope,
    boundary_cone,
    classify_base,
    cone_generators_from_facets,
    double_description,
    dual_cone,
    in_K_amp,
    in_K_plus,
    in_K_sharp,
    interior_membership,
    vertex_enumeration,
)
from .seminorms import (
    PolyhedralSeminorm,
    SublinearFunction,
    abs_functional_seminorm,
    evaluate,
    gerstewitz_from_solid_cone,
    is_norm,
    l1_gauge,
    linf_gauge,
    minkowski_norm_from_ball,
    psi_max,
    psi_sum,
    regular_polygon_norm,
    sup_family,
)
from .separation import (
    SeparationCertificate,
    SeparationProblem,
    check_hypotheses,
    classify_separation,
    equivalence_report,
    separate_proper,
    separate_strict,
    separate_strict_boundary,
    separate_weak,
    verify_certificate,
)
