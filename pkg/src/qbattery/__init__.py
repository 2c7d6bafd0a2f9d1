"""Charging dynamics and extractable work of a dissipatively coupled,
frequency-modulated two-qubit battery-charger pair.

The package splits into four layers: general ergotropy and passive-state
construction (`ergotropy`), the memory-kernel solvers (`dynamics`,
`analytic`), trajectory observables (`observables`), and the sweep harness
with CSV persistence plus an oracle suite (`config`, `sweep`, `validate`,
`cli`).
"""

from .analytic import survival_closed_form
from .config import SweepSpec, parse_config
from .dynamics import (
    Trajectory,
    amplitudes_from_survival,
    decoherence_free_check,
    jacobi_anger_phase,
    kernel,
    modulation_phase,
    solve_general,
    solve_survival,
    solve_survival_quadrature,
)
from .ergotropy import (
    ErgotropyResult,
    HamiltonianSpec,
    QuantumState,
    ergotropy,
    ergotropy_qubit_diagonal,
    passive_state,
    qubit_hamiltonian,
    qubit_state,
    spectral_sort,
)
from .errors import (
    ConfigurationError,
    ParseError,
    SolverFailure,
    ValidationError,
)
from .observables import (
    ChargingSummary,
    ObservableSeries,
    observable_series,
    reduced_states,
    summarize,
)
from .params import GeneralParams, ModelParams, SolverConfig
from .sweep import RunRecord, run_sweep
from .validate import CheckResult, format_report, run_checks

__version__ = "0.1.0"

__all__ = [
    "ChargingSummary",
    "CheckResult",
    "ConfigurationError",
    "ErgotropyResult",
    "GeneralParams",
    "HamiltonianSpec",
    "ModelParams",
    "ObservableSeries",
    "ParseError",
    "QuantumState",
    "RunRecord",
    "SolverConfig",
    "SolverFailure",
    "SweepSpec",
    "Trajectory",
    "ValidationError",
    "amplitudes_from_survival",
    "decoherence_free_check",
    "ergotropy",
    "ergotropy_qubit_diagonal",
    "format_report",
    "jacobi_anger_phase",
    "kernel",
    "modulation_phase",
    "observable_series",
    "parse_config",
    "passive_state",
    "qubit_hamiltonian",
    "qubit_state",
    "reduced_states",
    "run_checks",
    "run_sweep",
    "solve_general",
    "solve_survival",
    "solve_survival_quadrature",
    "spectral_sort",
    "summarize",
    "survival_closed_form",
    "__version__",
]
