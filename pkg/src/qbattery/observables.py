"""Physical outputs derived from solved trajectories.

Maps qubit amplitudes to reduced states, the stored-energy change of the
battery and the extractable-work ratio, plus the summary statistics the
sweep harness records.  Energies are dimensionless: the stored-energy
change is reported per omega0 and work per its maximum omega0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dynamics import Trajectory
from .ergotropy import QuantumState
from .errors import ValidationError

NORM_SLACK = 1e-8


@dataclass(eq=False)
class ObservableSeries:
    """Per-time-point battery observables.

    dE_B is the battery energy change over its transition energy; W_ratio
    is extractable work over the full-charge maximum.
    """

    times: np.ndarray
    p_e_A: np.ndarray
    p_e_B: np.ndarray
    dE_B: np.ndarray
    W_ratio: np.ndarray

    def __len__(self):
        return self.times.size


@dataclass(frozen=True)
class ChargingSummary:
    """Scalar summary of one charging run."""

    max_dE_B: float
    t_at_max: float
    max_W_ratio: float
    settle_time: float
    terminal_dE_B: float

    def __post_init__(self):
        values = (
            self.max_dE_B,
            self.t_at_max,
            self.max_W_ratio,
            self.settle_time,
            self.terminal_dE_B,
        )
        if not all(np.isfinite(v) for v in values):
            raise ValidationError(f"summary fields must be finite, got {values}")
        if self.max_dE_B < self.terminal_dE_B - 1e-12:
            raise ValidationError("maximum energy change below the terminal value")


def reduced_states(c1: complex, c2: complex) -> tuple[QuantumState, QuantumState]:
    """Reduced battery and charger states from the qubit amplitudes.

    Returns (rho_B, rho_A), each diagonal in the (ground, excited) basis:
    rho_B = diag(1 - |c2|^2, |c2|^2) and rho_A = diag(1 - |c1|^2, |c1|^2).
    """
    p_a = abs(c1) ** 2
    p_b = abs(c2) ** 2
    if p_a + p_b > 1.0 + NORM_SLACK:
        raise ValidationError(
            f"|c1|^2 + |c2|^2 = {p_a + p_b:.12g} exceeds 1; amplitudes are not "
            "from a single-excitation state"
        )
    p_a = min(p_a, 1.0)
    p_b = min(p_b, 1.0)
    rho_b = QuantumState(2, np.diag([1.0 - p_b, p_b]).astype(complex))
    rho_a = QuantumState(2, np.diag([1.0 - p_a, p_a]).astype(complex))
    return rho_b, rho_a


def observable_series(traj: Trajectory) -> ObservableSeries:
    """Pointwise battery observables along a trajectory.

    The energy change is referenced to the first grid point and the work
    ratio applies the charge threshold: W_ratio = max(0, 2 p_e - 1).
    """
    p_e_a = np.clip(np.abs(traj.c1) ** 2, 0.0, 1.0)
    p_e_b = np.clip(np.abs(traj.c2) ** 2, 0.0, 1.0)
    de_b = p_e_b - p_e_b[0]
    w_ratio = np.maximum(0.0, 2.0 * p_e_b - 1.0)
    return ObservableSeries(
        times=traj.times.copy(),
        p_e_A=p_e_a,
        p_e_B=p_e_b,
        dE_B=de_b,
        W_ratio=w_ratio,
    )


def summarize(series: ObservableSeries, settle_band: float = 1e-2) -> ChargingSummary:
    """Extremes and settling time of an observable series.

    The settling time is the first grid time after which the energy change
    stays within ``settle_band`` of its terminal value for the rest of the
    horizon; a series that never leaves the band settles at the first grid
    point.  The maximizer reported is the earliest one.
    """
    if settle_band <= 0.0:
        raise ValueError(f"settle_band must be positive, got {settle_band}")
    if len(series) == 0:
        raise ValueError("cannot summarize an empty series")
    de = series.dE_B
    times = series.times
    terminal = float(de[-1])
    deviation = np.abs(de - terminal)
    outside = np.nonzero(deviation >= settle_band)[0]
    if outside.size == 0:
        settle_time = float(times[0])
    else:
        settle_time = float(times[outside[-1] + 1])
    peak_index = int(np.argmax(de))
    return ChargingSummary(
        max_dE_B=float(de[peak_index]),
        t_at_max=float(times[peak_index]),
        max_W_ratio=float(np.max(series.W_ratio)),
        settle_time=settle_time,
        terminal_dE_B=terminal,
    )
