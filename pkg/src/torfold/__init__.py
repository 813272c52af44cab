"""Exact-arithmetic workbench for quiver mutation, periodic-quiver folding,
cluster-variable computation, and monomial folding maps."""

from .errors import (
    DomainError,
    FoldabilityViolationError,
    FoldingUndefinedError,
    FrozenVertexError,
    InexactDivisionError,
    InputError,
    SearchExhaustedError,
    TorfoldError,
    UnflippableArcError,
)
from .laurent import (
    FROZEN,
    MUT,
    LaurentPoly,
    VarKey,
    denominator_vector,
    exact_div,
    fold_substitute,
    leading_monomial,
    poly_from_json,
    poly_to_json,
    shift_substitute,
)
from .quiver import (
    IceQuiver,
    arr_count,
    mutate,
    normalize,
    quiver_from_json,
    quiver_from_path,
    quiver_to_json,
)
from .periodic import (
    PeriodicQuiver,
    admissibility_check,
    build_AQ,
    build_gamma_infinity,
    fold,
    foldability_search,
    orbit_mutate,
    periodic_from_json,
    periodic_from_path,
    periodic_to_json,
)
from .seeds import (
    OrbitSeed,
    RootInterval,
    Seed,
    build_window_seed,
    find_cluster_variable,
    fold_orbit_seed,
    initial_orbit_seed,
    initial_seed,
    is_orbit_cluster_root,
    mutate_seed,
    orbit_mutate_seed,
    seed_to_json,
)
from .ymono import (
    YMonomial,
    a_monomial,
    d_grade,
    is_mu_dominated,
    kr_monomial,
    m_alpha,
    m_alpha_simple,
    nakajima_leq,
    phi_fold,
    xi,
    y_var,
    ymono_from_json,
    ymono_to_json,
)
from .surface import (
    Arc,
    MarkedRibbon,
    SigmaTriangulation,
    check_no_virtual_2cycles,
    crosses,
    default_triangulation,
    flip,
    quiver_of,
    shift_arc,
    staircase_triangulation,
    triangulation_to_json,
)
from .exchange import (
    discover_frozen_monomials,
    verify_exchange_identities,
    verify_folded_identity,
    verify_identity,
)
from .suites import SUITES

__version__ = "0.1.0"
