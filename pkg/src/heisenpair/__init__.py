"""Thermal entanglement and quantum discord of a two-qubit Heisenberg pair.

The coupling follows the distance law J(R) = 1.642 * exp(-2R) * R^(5/2);
thermal states, Wootters concurrence, quantum discord, parameter sweeps and
threshold finders are exposed here, plus a scikit-learn transformer mapping
(R, B, KT) rows to correlation features.
"""

from .correlations import (
    ConcurrenceResult,
    DiscordResult,
    MeasurementBasis,
    concurrence,
    concurrence_xstate,
    discord_bell_diagonal_oracle,
    measure_conditional_states,
    min_conditional_entropy,
    mutual_information,
    quantum_discord,
    spin_flip,
)
from .errors import NoEntanglementError, NotAStateError
from .linalg import (
    hermitian_eigensystem,
    hermitian_eigenvalues,
    partial_trace,
    von_neumann_entropy,
)
from .model import (
    Convention,
    ModelParams,
    ThermalStateX,
    build_hamiltonian,
    hf_coupling,
    thermal_state_gibbs,
    thermal_state_paper,
    to_matrix,
)
from .sweep import (
    CSV_HEADER,
    CorrelationRecord,
    SweepConfig,
    evaluate_point,
    find_critical_kt,
    find_death_radius,
    point_report,
    run_sweep,
)

__version__ = "0.1.0"


def __getattr__(name):
    # The transformer drags in scikit-learn (~0.6 s); load it on first use
    # so the CLI keeps its sub-second startup.
    if name == "ThermalCorrelationTransformer":
        from .transformer import ThermalCorrelationTransformer

        return ThermalCorrelationTransformer
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")

__all__ = [
    "ConcurrenceResult",
    "Convention",
    "CorrelationRecord",
    "CSV_HEADER",
    "DiscordResult",
    "MeasurementBasis",
    "ModelParams",
    "NoEntanglementError",
    "NotAStateError",
    "SweepConfig",
    "ThermalCorrelationTransformer",
    "ThermalStateX",
    "build_hamiltonian",
    "concurrence",
    "concurrence_xstate",
    "discord_bell_diagonal_oracle",
    "evaluate_point",
    "find_critical_kt",
    "find_death_radius",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "hf_coupling",
    "measure_conditional_states",
    "min_conditional_entropy",
    "mutual_information",
    "partial_trace",
    "point_report",
    "quantum_discord",
    "run_sweep",
    "spin_flip",
    "thermal_state_gibbs",
    "thermal_state_paper",
    "to_matrix",
    "von_neumann_entropy",
]
