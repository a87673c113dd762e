"""Exact-arithmetic toolkit for even lattices, elliptic K3 fibrations,
symplectic automorphism numerology, and nodal-chain stable-map calculus."""

from .enumeration import HAVE_COMPILED
from .lattice import (
    DiscriminantGroup,
    GlueVector,
    IntegralLattice,
    direct_sum,
    discriminant_group,
    is_primitive,
    lambda_d,
    lambda_tilde_d,
    make_lattice,
    orthogonal_complement,
    overlattice,
    short_vectors,
    standard_lattice,
    twist,
)
from .fibration import (
    FiberReport,
    NSClass,
    Place,
    WeierstrassModel,
    check_generic,
    classify_fibers,
    curve_class,
    euler_check,
    intersect,
    involution_action,
    make_model,
    ns_involution_split,
    ns_lattice,
    positivity_report,
    shioda_tate_rank,
    two_torsion_check,
)
from .autnum import (
    OrderPDatum,
    datum_for_order,
    lambda_pd_rank_data,
    lefschetz_fixed_points,
    moduli_dimension,
    quotient_euler_check,
)
from .stablemap import (
    ChainBundle,
    Component,
    StableMapConfig,
    arithmetic_genus,
    chain_cohomology_oracle,
    chain_normal_cohomology,
    dominates_base,
    expected_dim,
    peel_cohomology,
    standard_chain_config,
    validate_chain_config,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
