"""Parameter and configuration types for the battery-charger model.

All rates and times are expressed in units of the cavity loss rate, so the
loss rate itself never appears as a field.  Energies are reported
dimensionlessly; the qubit transition frequency ``omega0`` only scales
absolute outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, ValidationError

NORMALIZATION_TOL = 1e-12

INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class ModelParams:
    """Physical and modulation parameters for two identical qubits.

    Attributes
    ----------
    R : float
        Collective vacuum Rabi frequency (coupling scale), > 0.
    delta : float
        Qubit-cavity detuning.
    d : float
        Frequency-modulation amplitude, >= 0.
    Omega : float
        Frequency-modulation frequency, >= 0.  Zero is permitted only with
        d = 0 (modulation off); the modulation phase d/Omega would diverge.
    r1, r2 : float
        Relative interaction strengths of charger and battery; r1^2 + r2^2 = 1.
    c01, c02 : complex
        Initial single-excitation amplitudes on (charger excited, battery
        excited); |c01|^2 + |c02|^2 = 1.
    omega0 : float
        Qubit transition frequency, used only to scale absolute energies.
    """

    R: float
    delta: float = 0.0
    d: float = 0.0
    Omega: float = 0.0
    r1: float = INV_SQRT2
    r2: float = INV_SQRT2
    c01: complex = 1.0 + 0.0j
    c02: complex = 0.0 + 0.0j
    omega0: float = 1.0

    def __post_init__(self):
        if not self.R > 0.0:
            raise ValidationError(f"R must be positive, got {self.R}")
        if self.d < 0.0:
            raise ValidationError(f"modulation amplitude must be >= 0, got {self.d}")
        if self.Omega < 0.0:
            raise ValidationError(f"modulation frequency must be >= 0, got {self.Omega}")
        if self.Omega == 0.0 and self.d != 0.0:
            raise ConfigurationError(
                "Omega = 0 with d != 0 is rejected; switch modulation off with d = 0"
            )
        if not (0.0 <= self.r1 <= 1.0 and 0.0 <= self.r2 <= 1.0):
            raise ValidationError(f"r1, r2 must lie in [0, 1], got ({self.r1}, {self.r2})")
        if abs(self.r1**2 + self.r2**2 - 1.0) > NORMALIZATION_TOL:
            raise ValidationError(
                f"r1^2 + r2^2 must equal 1, got {self.r1**2 + self.r2**2!r}"
            )
        norm = abs(self.c01) ** 2 + abs(self.c02) ** 2
        if abs(norm - 1.0) > NORMALIZATION_TOL:
            raise ValidationError(f"|c01|^2 + |c02|^2 must equal 1, got {norm!r}")
        if not self.omega0 > 0.0:
            raise ValidationError(f"omega0 must be positive, got {self.omega0}")
        object.__setattr__(self, "c01", complex(self.c01))
        object.__setattr__(self, "c02", complex(self.c02))


@dataclass(frozen=True)
class GeneralParams:
    """Per-qubit parameters for the general (non-identical) two-qubit solver.

    Detunings are stored relative to the cavity frequency.  The coupling
    weights mu1, mu2 are normalized (mu1^2 + mu2^2 = 1) with the overall
    scale carried by R.
    """

    R: float
    delta_a: float = 0.0
    delta_b: float = 0.0
    d_a: float = 0.0
    d_b: float = 0.0
    Omega_a: float = 0.0
    Omega_b: float = 0.0
    mu1: float = INV_SQRT2
    mu2: float = INV_SQRT2

    def __post_init__(self):
        if not self.R > 0.0:
            raise ValidationError(f"R must be positive, got {self.R}")
        for label, d, Omega in (("A", self.d_a, self.Omega_a), ("B", self.d_b, self.Omega_b)):
            if d < 0.0 or Omega < 0.0:
                raise ValidationError(f"qubit {label}: d and Omega must be >= 0")
            if Omega == 0.0 and d != 0.0:
                raise ConfigurationError(
                    f"qubit {label}: Omega = 0 with d != 0 is rejected"
                )
        if abs(self.mu1**2 + self.mu2**2 - 1.0) > NORMALIZATION_TOL:
            raise ValidationError(
                f"mu1^2 + mu2^2 must equal 1, got {self.mu1**2 + self.mu2**2!r}"
            )

    @property
    def delta_ab(self) -> float:
        """Inter-qubit detuning (qubit A minus qubit B)."""
        return self.delta_a - self.delta_b

    @classmethod
    def from_model(cls, params: ModelParams) -> "GeneralParams":
        """Identical-qubit reduction of a ModelParams instance."""
        return cls(
            R=params.R,
            delta_a=params.delta,
            delta_b=params.delta,
            d_a=params.d,
            d_b=params.d,
            Omega_a=params.Omega,
            Omega_b=params.Omega,
            mu1=params.r1,
            mu2=params.r2,
        )


@dataclass(frozen=True)
class SolverConfig:
    """Integration horizon, output grid and tolerances (times in 1/lambda)."""

    t_max: float = 20.0
    dt_out: float = 0.01
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    quadrature_dt: float = 1e-3

    def __post_init__(self):
        if not self.t_max > 0.0:
            raise ValidationError(f"t_max must be positive, got {self.t_max}")
        if not 0.0 < self.dt_out <= self.t_max:
            raise ValidationError(
                f"dt_out must lie in (0, t_max], got {self.dt_out} with t_max {self.t_max}"
            )
        for name, tol in (("rel_tol", self.rel_tol), ("abs_tol", self.abs_tol)):
            if not 0.0 < tol <= 1e-2:
                raise ValidationError(f"{name} must lie in (0, 1e-2], got {tol}")
        if not self.quadrature_dt > 0.0:
            raise ValidationError(
                f"quadrature_dt must be positive, got {self.quadrature_dt}"
            )

    def time_grid(self) -> np.ndarray:
        """Output time grid 0, dt_out, ..., t_max (t_max always included)."""
        n = int(math.floor(self.t_max / self.dt_out + 1e-9))
        grid = self.dt_out * np.arange(n + 1)
        if grid[-1] < self.t_max - 1e-9 * self.t_max:
            grid = np.append(grid, self.t_max)
        return grid
