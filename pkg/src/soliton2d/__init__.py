"""Two-dimensional gradient Ricci solitons from a single profile equation.

The warped-product metric g = dr^2 + b(r)^2 dtheta^2 of a rotationally
symmetric gradient Ricci soliton is governed, in the coordinate t = b^2/4,
by the autonomous equation a'(t) = 4 mu a^2 (a/gamma - 1) for a = 1/b'.
This package integrates and classifies the positive solutions, rebuilds the
metrics, reports their geometry (completeness, curvature range, ends),
verifies the soliton equations as numerical residuals, and checks the
variational characterization through the curvature entropy functional.
"""

from .errors import (
    DomainError,
    EdgeError,
    MuZeroError,
    NonpositiveAnchorError,
    NotSmoothOriginError,
    NotSteadyError,
    RangeError,
    SolitonError,
    StepFailureError,
    UnresolvedEndError,
    WindowEmptyError,
    WindowError,
    ZeroCurvatureError,
)
from .geometry import (
    EndDescriptor,
    GeometryReport,
    WarpedMetric,
    build_warped_metric,
    curvature_from_a,
    curvature_from_b,
    geodesic_curvature,
    geometry_report,
    metric_from_grid,
    radial_distance,
)
from .ode import (
    INFINITE,
    EndTag,
    ProfileA,
    Rescale,
    Scale,
    SolitonParams,
    Translate,
    apply_symmetry,
    blow_up_time_closed,
    closed_form_profile,
    constant_profile,
    integrate_profile,
    make_params,
    time_between_levels,
)
from .taxonomy import (
    CatalogEntry,
    FamilyLabel,
    catalog,
    catalog_listing,
    classify,
    disk_boundary_distance,
    entry_metric,
)
from .variational import (
    VariationField,
    bump_variation,
    energy,
    fd_variation,
    first_variation,
    lie_variation,
    noether_defect,
    total_curvature,
    variation_report,
)
from .verify import (
    ResidualReport,
    killing_check,
    potential_check,
    smooth_extension_check,
    soliton_residual,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "EndTag",
    "ProfileA",
    "Rescale",
    "Scale",
    "SolitonParams",
    "Translate",
    "apply_symmetry",
    "blow_up_time_closed",
    "closed_form_profile",
    "constant_profile",
    "integrate_profile",
    "make_params",
    "time_between_levels",
    "EndDescriptor",
    "GeometryReport",
    "WarpedMetric",
    "build_warped_metric",
    "curvature_from_a",
    "curvature_from_b",
    "geodesic_curvature",
    "geometry_report",
    "metric_from_grid",
    "radial_distance",
    "CatalogEntry",
    "FamilyLabel",
    "catalog",
    "catalog_listing",
    "classify",
    "disk_boundary_distance",
    "entry_metric",
    "VariationField",
    "bump_variation",
    "energy",
    "fd_variation",
    "first_variation",
    "lie_variation",
    "noether_defect",
    "total_curvature",
    "variation_report",
    "ResidualReport",
    "killing_check",
    "potential_check",
    "smooth_extension_check",
    "soliton_residual",
    "SolitonError",
    "MuZeroError",
    "NotSteadyError",
    "NonpositiveAnchorError",
    "StepFailureError",
    "DomainError",
    "NotSmoothOriginError",
    "WindowEmptyError",
    "EdgeError",
    "UnresolvedEndError",
    "ZeroCurvatureError",
    "RangeError",
    "WindowError",
    "__version__",
]
