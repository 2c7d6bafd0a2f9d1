"""Passive states and extractable work, from qubits to random qudits.

Walks through the ergotropy construction: sorting populations against
energies, the passive state as the zero-work fixed point, and the
threshold behaviour of the diagonal qubit.
"""

import numpy as np

from qbattery import (
    HamiltonianSpec,
    QuantumState,
    ergotropy,
    ergotropy_qubit_diagonal,
    passive_state,
    qubit_hamiltonian,
    qubit_state,
)

# A fully inverted qubit holds exactly one quantum of extractable work.
ham = qubit_hamiltonian(omega0=1.0)
for p_e in (0.0, 0.25, 0.5, 0.75, 1.0):
    result = ergotropy(qubit_state(p_e), ham)
    closed = ergotropy_qubit_diagonal(p_e)
    print(f"p_e = {p_e:4}: ergotropy {result.ergotropy:.4f}  "
          f"(threshold form {closed:.4f})")

# For a random qutrit the passive state reorders populations monotonically
# against the spectrum and no further cyclic unitary can extract work.
rng = np.random.default_rng(5)
g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
rho = QuantumState(3, (g @ g.conj().T) / np.trace(g @ g.conj().T))
h3 = HamiltonianSpec(3, np.diag([0.0, 1.0, 2.5]).astype(complex))

result = ergotropy(rho, h3)
sigma = passive_state(rho, h3)
print("\nrandom qutrit:")
print(f"  initial energy  {result.initial_energy:+.4f}")
print(f"  passive energy  {result.passive_energy:+.4f}")
print(f"  ergotropy       {result.ergotropy:.4f}")
print(f"  passive populations {np.diag(sigma.matrix).real.round(4)}")
print(f"  work left in passive state: {ergotropy(sigma, h3).ergotropy:.2e}")
