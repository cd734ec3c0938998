"""Gauge fields, dressing transformations and symmetry reduction on a periodic lattice."""

from .errors import (
    AlgebraProjectionError,
    BandLimitError,
    BranchCutError,
    ConsistencyError,
    DegenerateFit,
    GaugedressError,
    NoSplitError,
    ParseError,
    SpecMismatch,
    VacuumZeroError,
)
from .liegroup import (
    AlgebraVector,
    GroupElement,
    GroupId,
    GroupSpec,
    adjoint_algebra,
    adjoint_group,
    affine_plus,
    bracket,
    exp_map,
    get_group,
    group_split,
    identity,
    log_map,
    project_subalgebra,
    random_algebra,
    random_group_element,
    structure_constants,
    su2,
    su2xu1,
    u1,
)
from .lattice import (
    FieldKind,
    Lattice,
    LatticeField,
    convergence_order,
    field_difference,
    l2_norm,
    partial_derivative,
    random_smooth_field,
    sup_norm,
    zero_field,
)
from .gauge import (
    PointFrame,
    covariant_derivative,
    curvature,
    gauge_transform_connection,
    gauge_transform_curvature,
    pointframe_transform,
    scalar_gauge_transform,
)
from .dressing import (
    DressingField,
    dress_connection,
    dressing_from_scalar,
    dressing_transform,
    residual_transform_check,
)
from .jets import JetSample, jet_delta, jet_of_connection, pr1, pr2
from .reduction import (
    ConfigPair,
    MomentumSample,
    delta_ad,
    delta_connection,
    delta_momentum,
    make_config_pair,
    reduced_lagrangian_check,
    yang_mills_density,
    zeta,
)
from .fieldfile import parse_field, read_field, serialize_field, write_field
from .report import CheckResult, Report
from .verify import run_suites

__version__ = "0.1.0"
