"""Passive states and extractable work for finite-dimensional quantum states.

The maximum work a cyclic unitary drive can extract from a state (its
ergotropy) equals the gap between the state's energy and the energy of the
associated passive state, which pairs the largest populations with the
lowest energy levels.  This module implements the general construction for
arbitrary finite dimension plus the diagonal-qubit closed form used by the
battery model.

All operations are pure functions; the value is computed through two
independent algebraic routes (trace difference against the passive state,
and the eigenbasis double sum) and the two are required to agree to 1e-10.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_TOL = 1e-12
RESULT_TOL = 1e-12
CROSSCHECK_TOL = 1e-10


def _square_complex(matrix, dim, what):
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (dim, dim):
        raise ValidationError(f"{what} must be {dim}x{dim}, got shape {m.shape}")
    return m


def _hermitize(m, what):
    # Symmetrize within the tolerance band; anything beyond it is an error,
    # not noise to be papered over.
    deviation = float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0
    if deviation > HERMITICITY_TOL:
        raise ValidationError(
            f"{what} is not Hermitian: max |M - M^dag| = {deviation:.3e} "
            f"exceeds {HERMITICITY_TOL:.0e}"
        )
    return 0.5 * (m + m.conj().T)


@dataclass(frozen=True)
class QuantumState:
    """Density operator with validated Hermiticity, unit trace and positivity."""

    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        if int(self.dim) < 1:
            raise ValidationError(f"dimension must be positive, got {self.dim}")
        object.__setattr__(self, "dim", int(self.dim))
        m = _square_complex(self.matrix, self.dim, "density matrix")
        m = _hermitize(m, "density matrix")
        trace_dev = abs(np.trace(m) - 1.0)
        if trace_dev > TRACE_TOL:
            raise ValidationError(
                f"density matrix trace deviates from 1 by {trace_dev:.3e}"
            )
        lowest = float(np.min(np.linalg.eigvalsh(m)))
        if lowest < -EIGENVALUE_TOL:
            raise ValidationError(
                f"density matrix has negative eigenvalue {lowest:.3e}"
            )
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class HamiltonianSpec:
    """Hermitian energy operator; the energy unit is the caller's choice."""

    dim: int
    matrix: np.ndarray

    def __post_init__(self):
        if int(self.dim) < 1:
            raise ValidationError(f"dimension must be positive, got {self.dim}")
        object.__setattr__(self, "dim", int(self.dim))
        m = _square_complex(self.matrix, self.dim, "Hamiltonian")
        object.__setattr__(self, "matrix", _hermitize(m, "Hamiltonian"))


@dataclass(frozen=True)
class ErgotropyResult:
    """Extractable work together with the passive state that certifies it."""

    ergotropy: float
    passive_state: QuantumState
    initial_energy: float
    passive_energy: float

    def __post_init__(self):
        if abs(self.ergotropy - (self.initial_energy - self.passive_energy)) > RESULT_TOL:
            raise ValidationError("ergotropy does not equal the energy difference")
        if self.ergotropy < -RESULT_TOL:
            raise ValidationError(f"negative ergotropy {self.ergotropy:.3e}")


def qubit_state(p_excited: float) -> QuantumState:
    """Diagonal qubit state diag(1 - p_e, p_e) in (ground, excited) ordering."""
    if not 0.0 <= p_excited <= 1.0:
        raise ValueError(f"excited population must lie in [0, 1], got {p_excited}")
    return QuantumState(2, np.diag([1.0 - p_excited, p_excited]).astype(complex))


def qubit_hamiltonian(omega0: float = 1.0) -> HamiltonianSpec:
    """Free qubit Hamiltonian (omega0/2) sigma_z with the ground state first.

    The ground state is the first basis vector and carries energy -omega0/2.
    """
    if omega0 <= 0.0:
        raise ValueError(f"omega0 must be positive, got {omega0}")
    return HamiltonianSpec(2, np.diag([-0.5 * omega0, 0.5 * omega0]).astype(complex))


def spectral_sort(state: QuantumState):
    """Eigendecompose a state with populations in non-increasing order.

    Returns
    -------
    list of (eigenvalue, eigenvector) pairs, eigenvalues non-increasing,
    eigenvectors orthonormal.  Degeneracies are tie-broken by a stable sort
    of the underlying ascending eigendecomposition.
    """
    values, vectors = np.linalg.eigh(state.matrix)
    order = np.argsort(-values, kind="stable")
    return [(float(values[i]), vectors[:, i].copy()) for i in order]


def _sorted_spectra(state: QuantumState, ham: HamiltonianSpec):
    """Populations sorted descending and energies sorted ascending."""
    r = np.array([v for v, _ in spectral_sort(state)])
    energies, energy_vectors = np.linalg.eigh(ham.matrix)
    return r, energies, energy_vectors


def passive_state(state: QuantumState, ham: HamiltonianSpec) -> QuantumState:
    """Build the passive state: sorted populations on ascending energy levels.

    The result is diagonal in the Hamiltonian eigenbasis, commutes with it,
    and no further cyclic unitary can lower its energy.
    """
    if state.dim != ham.dim:
        raise ValueError(
            f"dimension mismatch: state is {state.dim}, Hamiltonian is {ham.dim}"
        )
    r, _, vectors = _sorted_spectra(state, ham)
    sigma = (vectors * r) @ vectors.conj().T
    return QuantumState(state.dim, sigma)


def ergotropy(state: QuantumState, ham: HamiltonianSpec) -> ErgotropyResult:
    """Maximum cyclic-unitary extractable work from ``state`` under ``ham``.

    Computes the trace-difference value against the passive state and
    independently the eigenbasis double sum; a disagreement beyond 1e-10
    raises, since it would indicate a broken eigendecomposition.
    """
    if state.dim != ham.dim:
        raise ValueError(
            f"dimension mismatch: state is {state.dim}, Hamiltonian is {ham.dim}"
        )
    sorted_pairs = spectral_sort(state)
    r = np.array([v for v, _ in sorted_pairs])
    r_vectors = np.column_stack([vec for _, vec in sorted_pairs])
    energies, energy_vectors = np.linalg.eigh(ham.matrix)

    initial_energy = float(np.real(np.trace(ham.matrix @ state.matrix)))
    passive_energy = float(r @ energies)
    work = initial_energy - passive_energy

    # Independent route: overlap double sum over both eigenbases.
    overlaps = np.abs(energy_vectors.conj().T @ r_vectors) ** 2
    work_sum = float(energies @ overlaps @ r - r @ energies)
    if abs(work - work_sum) > CROSSCHECK_TOL:
        raise ValidationError(
            f"ergotropy cross-check failed: {work:.12e} vs {work_sum:.12e}"
        )

    sigma = (energy_vectors * r) @ energy_vectors.conj().T
    return ErgotropyResult(
        ergotropy=work,
        passive_state=QuantumState(state.dim, sigma),
        initial_energy=initial_energy,
        passive_energy=passive_energy,
    )


def ergotropy_qubit_diagonal(p_e: float) -> float:
    """Extractable work of diag(1 - p_e, p_e) in units of the full charge.

    Equals (2 p_e - 1) gated on p_e > 1/2, written as max(0, 2 p_e - 1),
    which is algebraically identical for every p_e including the boundary.
    """
    if not 0.0 <= p_e <= 1.0:
        raise ValueError(f"excited population must lie in [0, 1], got {p_e}")
    return max(0.0, 2.0 * p_e - 1.0)
