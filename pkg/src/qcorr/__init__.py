"""Correlation measures and decoherence dynamics for two-qubit states.

The package computes mutual information, classical correlations, and
quantum discord for Bell-diagonal and general two-qubit density
matrices, together with a measurement-noncommutativity measure, and
evolves Bell-diagonal states under one-axis local flip channels.
Closed forms and independent numeric searches are both exposed so each
route can validate the other.
"""

from .correlations import (
    CorrelationReport,
    SearchConfig,
    binary_entropy,
    classical_correlations_bd,
    classical_correlations_numeric,
    discord,
    mutual_information,
    mutual_information_bd,
    report_bd,
    report_numeric,
    von_neumann_entropy,
)
from .decoherence import (
    ChannelSpec,
    TrajectoryPoint,
    apply_channel,
    c_trajectory,
    freezing_time,
    is_freezing_initial,
    kraus_ops,
    trajectory,
)
from .measurement import (
    OPTIMAL_S,
    Pvm,
    conditional_states_bd,
    conditional_states_general,
    optimal_s,
    post_measurement_state,
    pvm_from_s,
    s_from_z,
    t_after_measurement,
    theta,
    unitary_from_s,
    z_vector,
)
from .ncm import (
    a_operators,
    alpha_triple,
    d_a_basis,
    d_a_bd_closed,
    d_a_numeric,
    d_a_optimized,
    f_hat,
)
from .states import (
    BDState,
    FanoDecomposition,
    NonHermitianError,
    NotBellDiagonalError,
    NotPSDError,
    StateError,
    TraceNotOneError,
    bd_eigenvalues,
    bd_extract,
    bd_matrix,
    check_bd,
    fano_compose,
    fano_decompose,
    is_bell_diagonal,
    load_state,
    marginal,
    sample_bd,
    state_from_dict,
    state_to_dict,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "BDState",
    "ChannelSpec",
    "CorrelationReport",
    "FanoDecomposition",
    "NonHermitianError",
    "NotBellDiagonalError",
    "NotPSDError",
    "OPTIMAL_S",
    "Pvm",
    "SearchConfig",
    "StateError",
    "TraceNotOneError",
    "TrajectoryPoint",
    "a_operators",
    "alpha_triple",
    "apply_channel",
    "bd_eigenvalues",
    "bd_extract",
    "bd_matrix",
    "binary_entropy",
    "c_trajectory",
    "check_bd",
    "classical_correlations_bd",
    "classical_correlations_numeric",
    "conditional_states_bd",
    "conditional_states_general",
    "d_a_basis",
    "d_a_bd_closed",
    "d_a_numeric",
    "d_a_optimized",
    "discord",
    "f_hat",
    "fano_compose",
    "fano_decompose",
    "freezing_time",
    "is_bell_diagonal",
    "is_freezing_initial",
    "kraus_ops",
    "load_state",
    "marginal",
    "mutual_information",
    "mutual_information_bd",
    "optimal_s",
    "post_measurement_state",
    "pvm_from_s",
    "report_bd",
    "report_numeric",
    "s_from_z",
    "sample_bd",
    "state_from_dict",
    "state_to_dict",
    "t_after_measurement",
    "theta",
    "trajectory",
    "unitary_from_s",
    "validate",
    "von_neumann_entropy",
    "z_vector",
]
