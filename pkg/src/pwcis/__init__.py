"""Tools for node sequences of band-limited interpolation: separation and
density diagnostics, discrete Muckenhoupt ratios, generating functions
with exact zero handling, branch-tracked logarithms and boundary traces,
node synthesis from prescribed tip heights, and Riesz-bound estimates for
the associated exponential systems."""

from pwcis.errors import (
    InvalidInput,
    NumericFailure,
    PoleEvaluation,
    PwcisError,
    SolverDiverged,
)
from pwcis.sequences import (
    DensityReport,
    IndexedSequence,
    KadetsReport,
    SeparationReport,
    density,
    kadets_check,
    relative_density_check,
    separation,
)
from pwcis.muckenhoupt import (
    MuckenhouptReport,
    PositiveSequence,
    SignedCriticalSequence,
    continuous_a2_scan,
    discrete_ratio,
    log_increment_bound,
    neighbor_tip_bound,
    power_law_sequence,
    signed_from_weights,
    ungl_inequality,
    weights_from_signed,
)
from pwcis.genfun import (
    CriticalData,
    SineTail,
    SymmetricProduct,
    WeightTrace,
    auto_representation,
    cartwright_integral,
    critical_data,
    derivative_at_zeros,
    evaluate,
    line_modulus_bounds,
    log_derivative,
    log_modulus,
    node_derivative,
    node_distance,
    sine,
    tail_completion,
    type_estimate,
)
from pwcis.combmap import (
    BranchTrackedLog,
    CertifyReport,
    CombDomain,
    SynthesisProblem,
    SynthesisResult,
    TraceRecord,
    boundary_trace,
    certify,
    phi_eval,
    synthesize,
)
from pwcis.paleywiener import (
    InterpolationProblem,
    RieszBoundsReport,
    gram_matrix,
    interpolate_eval,
    norm_equivalence_check,
    riesz_bounds,
)

__version__ = "0.1.0"
