"""Toric Bernstein bases on real node sets, total-positivity verification,
and progressive iterative approximation of the curves they blend."""

from .basis import (
    BasisValues,
    NodeSet,
    bernstein_equivalent_nodeset,
    bernstein_reference,
    eval_gt_basis,
    eval_rational_basis,
    log_basis_matrix,
    rational_basis_matrix,
    validate_node_set,
    validate_weights,
)
from .curve import (
    GTBezierCurve,
    as_control_polygon,
    classical_bezier,
    curve_points,
    eval_curve,
    rational_bezier,
    sample_polyline,
)
from .pia import (
    DivergenceError,
    FitProblem,
    PiaState,
    adjustment_vectors,
    fitted_curve,
    iteration_spectrum,
    pia_init,
    pia_run,
    pia_step,
)
from .totalpos import (
    EXHAUSTIVE_LIMIT,
    GenVandermondeSpec,
    NtpSuiteReport,
    TpReport,
    collocation_matrix,
    generalized_vandermonde,
    is_totally_positive,
    minor_det,
    power_reduction,
    rational_collocation_matrix,
    verify_ntp_suite,
)

__version__ = "0.1.0"
