"""Closed-form survival amplitude for the unmodulated Lorentzian bath.

With the modulation off, the memory kernel is a plain damped exponential
and the survival-amplitude equation is solved exactly by a Laplace
transform.  Writing a = 1 - i*delta (loss-rate units) the transform is

    E(s) = (s + a) / (s^2 + a s + R^2),

whose poles s_pm = (-a +/- D)/2 with D = sqrt(a^2 - 4 R^2) give

    E(t) = [(a + D) exp(s_+ t) - (a - D) exp(s_- t)] / (2 D)
         = exp(-a t / 2) [cosh(D t / 2) + (a / D) sinh(D t / 2)].

Both pole decay rates are non-positive for every real detuning and R > 0,
so the two-exponential form below never overflows.  This module is kept
free of any solver machinery on purpose: it is the independent oracle the
integrators are checked against.
"""

from __future__ import annotations

import numpy as np

_DEGENERATE_TOL = 1e-8


def survival_closed_form(R: float, delta: float, times) -> np.ndarray:
    """Unmodulated survival amplitude on a time grid (loss-rate units).

    Parameters
    ----------
    R : float
        Collective vacuum Rabi frequency, > 0.
    delta : float
        Qubit-cavity detuning.
    times : array_like
        Times at which to evaluate; any shape.

    Returns
    -------
    ndarray of complex, same shape as ``times``.
    """
    if not R > 0.0:
        raise ValueError(f"R must be positive, got {R}")
    t = np.asarray(times, dtype=float)
    a = 1.0 - 1j * delta
    D = np.sqrt(a * a - 4.0 * R * R + 0.0j)
    if abs(D) < _DEGENERATE_TOL:
        # Double pole at -a/2: E = exp(-a t / 2) (1 + a t / 2).
        return np.exp(-0.5 * a * t) * (1.0 + 0.5 * a * t)
    s_plus = 0.5 * (-a + D)
    s_minus = 0.5 * (-a - D)
    return ((a + D) * np.exp(s_plus * t) - (a - D) * np.exp(s_minus * t)) / (2.0 * D)
