"""Truncated power series and numerical stability (subordination) checks
for the Janowski-type family ((1+Az)/(1+Bz))**lambda."""

from .inequalities import (
    GridSpec,
    InequalityReport,
    InequalityViolation,
    check_alternating_identity,
    check_coeff_pair_inequality,
    check_coeff_positivity,
    check_weighted_pair_inequality,
    weighted_pair_value,
)
from .janowski import (
    CoeffSequence,
    JanowskiParams,
    coeff_convolution,
    coeff_recurrence,
    coeff_sequence,
    convolution_coeffs,
    falling_factorial,
    janowski_series,
    rising_factorial,
)
from .search import (
    SearchSpec,
    SweepCell,
    Violation,
    find_self_stability_violation,
    sweep_parameter_grid,
)
from .series import (
    BranchFailureError,
    TruncatedSeries,
    binomial_series,
    derivative,
    evaluate,
    multiply,
    partial_sum,
    real_power_on_ray,
)
from .subordination import (
    DiskSpec,
    KNOWN_COUNTEREXAMPLE,
    PoleError,
    SampleGrid,
    StabilityReport,
    check_cross_order_stability,
    check_derivative_modulus_bound,
    check_power_product_subordination,
    check_stability_vs_base,
    check_stability_vs_self,
    closed_form_disk,
    mobius_image_disk,
    mobius_target,
    reference_disk_comparison,
    self_margin_at,
    stability_defect,
    stability_ratio,
)

__version__ = "0.1.0"
