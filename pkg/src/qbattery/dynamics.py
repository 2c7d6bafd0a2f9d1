"""Memory-kernel evaluation and integro-differential solvers.

The single-excitation dynamics of the battery-charger pair in a lossy
cavity reduces, for identical qubits, to one scalar Volterra equation for
the survival amplitude E(t) of the symmetric state,

    dE/dt = -R^2 int_0^t K(t, t') E(t') dt',
    K(t, t') = exp[(-1 + i delta)(t - t')] * g(t) * conj(g(t')),
    g(t) = exp[i (d / Omega) sin(Omega t)],

in loss-rate units.  Because the kernel is separable the equation is
solved exactly as a two-component ODE (production path, adaptive
Runge-Kutta) and independently by direct history quadrature (oracle
path).  The general non-identical pair is integrated by quadrature only.

Both qubit amplitudes follow algebraically from E(t): splitting the
initial state into the frozen antisymmetric combination and the evolving
symmetric one gives

    c1(t) = [r2^2 + r1^2 E(t)] c01 - r1 r2 [1 - E(t)] c02,
    c2(t) = -r1 r2 [1 - E(t)] c01 + [r1^2 + r2^2 E(t)] c02.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp
from scipy.special import jv

from .errors import ConfigurationError, SolverFailure, ValidationError
from .params import GeneralParams, ModelParams, SolverConfig

# Unit-magnitude bounds are enforced with this slack; excitation only ever
# leaks into the bath, so genuine dynamics cannot exceed them.
NORM_SLACK = 1e-8


@dataclass(eq=False)
class Trajectory:
    """Solved amplitudes on an output time grid (times in units of 1/lambda).

    ``survival`` is the symmetric-state survival amplitude; it is None for
    runs of the general solver, where the two qubits need not be identical
    and no single survival amplitude exists.
    """

    times: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    survival: np.ndarray | None = None
    stats: dict | None = None

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=float)
        self.c1 = np.asarray(self.c1, dtype=complex)
        self.c2 = np.asarray(self.c2, dtype=complex)
        n = self.times.size
        if n == 0:
            raise ValidationError("trajectory must contain at least one point")
        if np.any(np.diff(self.times) <= 0.0):
            raise ValidationError("trajectory times must be strictly ascending")
        if self.c1.shape != (n,) or self.c2.shape != (n,):
            raise ValidationError("amplitude arrays must match the time grid")
        if self.survival is not None:
            self.survival = np.asarray(self.survival, dtype=complex)
            if self.survival.shape != (n,):
                raise ValidationError("survival array must match the time grid")
            if self.survival[0] != 1.0 + 0.0j:
                raise ValidationError("survival amplitude must start at exactly 1")
            peak = float(np.max(np.abs(self.survival)))
            if peak > 1.0 + NORM_SLACK:
                raise ValidationError(
                    f"survival amplitude magnitude exceeds 1: max |E| = {peak:.12g}"
                )
        peak_norm = float(np.max(np.abs(self.c1) ** 2 + np.abs(self.c2) ** 2))
        if peak_norm > 1.0 + NORM_SLACK:
            raise ValidationError(
                f"qubit-sector norm exceeds 1: max |c1|^2 + |c2|^2 = {peak_norm:.12g}"
            )

    @property
    def has_survival(self) -> bool:
        return self.survival is not None


# ---------------------------------------------------------------------------
# kernel and modulation phase
# ---------------------------------------------------------------------------

def modulation_phase(d: float, Omega: float, t):
    """Accumulated modulation phase factor g(t) = exp[i (d/Omega) sin(Omega t)].

    Defined as 1 when the modulation is off (d = 0), for any stored Omega.
    """
    if d == 0.0:
        return np.ones_like(np.asarray(t, dtype=float), dtype=complex) if np.ndim(t) else 1.0 + 0.0j
    if Omega == 0.0:
        raise ConfigurationError("modulation phase undefined for Omega = 0 with d != 0")
    return np.exp(1j * (d / Omega) * np.sin(Omega * np.asarray(t, dtype=float)))


def kernel(params: ModelParams, t: float, t_prime: float) -> complex:
    """Two-time memory kernel, normalized to 1 at coincident times.

    Returns exp[(-1 + i delta)(t - t')] * exp[i (d/Omega)(sin Omega t -
    sin Omega t')]; the solvers weight it by R^2.
    """
    if t_prime < 0.0 or t < t_prime:
        raise ValueError(f"kernel requires t >= t' >= 0, got t={t}, t'={t_prime}")
    if params.d != 0.0 and params.Omega == 0.0:
        raise ConfigurationError("Omega = 0 with d != 0 has no defined kernel")
    decay = np.exp((-1.0 + 1j * params.delta) * (t - t_prime))
    if params.d == 0.0:
        return complex(decay)
    z = params.d / params.Omega
    return complex(decay * np.exp(1j * z * (np.sin(params.Omega * t) - np.sin(params.Omega * t_prime))))


def jacobi_anger_phase(d_over_Omega: float, Omega: float, t, n_terms: int):
    """Truncated Bessel-series form of the modulation phase factor.

    Expands exp[i z sin(Omega t)] with z = d/Omega into its harmonics,

        J_0(z) + 2 sum_{even n} J_n(z) cos(n Omega t)
               + 2i sum_{odd n} J_n(z) sin(n Omega t),

    truncated at ``n_terms`` (equivalently J_0 + 2 sum i^n J_n cos(n Omega t
    - n pi/2)).  Used only to validate the exact exponential phase; the
    solvers never truncate.
    """
    if n_terms < 1:
        raise ValueError(f"n_terms must be >= 1, got {n_terms}")
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    n = np.arange(1, n_terms + 1)
    weights = 2.0 * jv(n, d_over_Omega)
    angles = np.outer(t_arr, n) * Omega
    even = n % 2 == 0
    series = jv(0, d_over_Omega) + np.cos(angles[:, even]) @ weights[even]
    series = series + 1j * (np.sin(angles[:, ~even]) @ weights[~even])
    return series if np.ndim(t) else complex(series[0])


# ---------------------------------------------------------------------------
# amplitudes from the survival amplitude
# ---------------------------------------------------------------------------

def amplitudes_from_survival(params: ModelParams, survival_value):
    """Qubit amplitudes (c1, c2) from the survival amplitude.

    Accepts a scalar or an array of survival values; returns the matching
    pair of scalars or arrays.
    """
    r1, r2 = params.r1, params.r2
    e = np.asarray(survival_value, dtype=complex)
    lost = 1.0 - e
    c1 = (r2 * r2 + r1 * r1 * e) * params.c01 - r1 * r2 * lost * params.c02
    c2 = -r1 * r2 * lost * params.c01 + (r1 * r1 + r2 * r2 * e) * params.c02
    if np.ndim(survival_value) == 0:
        return complex(c1), complex(c2)
    return c1, c2


# ---------------------------------------------------------------------------
# production solver: separable-kernel ODE reduction
# ---------------------------------------------------------------------------

def solve_survival(params: ModelParams, cfg: SolverConfig, *, _flip_sign: bool = False) -> Trajectory:
    """Solve the survival-amplitude equation via the separable reduction.

    With g(t) the modulation phase factor and I(t) the running memory
    integral, the Volterra equation is equivalent to the ODE pair

        dE/dt = -R^2 g(t) I(t),
        dI/dt = (-1 + i delta) I(t) + conj(g(t)) E(t),

    integrated with an adaptive embedded Runge-Kutta pair (DOP853) at the
    configured tolerances.  The reduction is exact, so the only error is
    the integrator's own.

    ``_flip_sign`` is a fault-injection hook for the validation suite; it
    integrates the sign-flipped equation, whose solution grows beyond 1
    and must be caught by the trajectory invariants.
    """
    grid = cfg.time_grid()
    R2 = params.R * params.R
    a = -1.0 + 1j * params.delta
    sign = +1.0 if _flip_sign else -1.0
    d, Omega = params.d, params.Omega
    if d != 0.0:
        z = d / Omega

        def rhs(t, y):
            g = np.exp(1j * z * math.sin(Omega * t))
            return (sign * R2 * g * y[1], a * y[1] + np.conj(g) * y[0])
    else:

        def rhs(t, y):
            return (sign * R2 * y[1], a * y[1] + y[0])

    sol = solve_ivp(
        rhs,
        (0.0, float(grid[-1])),
        np.array([1.0 + 0.0j, 0.0 + 0.0j]),
        method="DOP853",
        t_eval=grid,
        rtol=cfg.rel_tol,
        atol=cfg.abs_tol,
    )
    if not sol.success:
        last = float(sol.t[-1]) if sol.t.size else 0.0
        raise SolverFailure(
            f"survival-amplitude integration failed: {sol.message}", last_good_time=last
        )
    survival = sol.y[0].copy()
    survival[0] = 1.0 + 0.0j
    c1, c2 = amplitudes_from_survival(params, survival)
    return Trajectory(
        times=grid,
        c1=c1,
        c2=c2,
        survival=survival,
        stats={"rhs_evaluations": int(sol.nfev), "method": "separable-ode/dop853"},
    )


# ---------------------------------------------------------------------------
# oracle solver: direct history quadrature
# ---------------------------------------------------------------------------

def _check_uniform_grid(cfg: SolverConfig):
    """Quadrature marches on its own uniform grid; the output grid must
    subsample it exactly (no interpolation, which would dominate the error
    budget)."""
    h = cfg.quadrature_dt
    stride = cfg.dt_out / h
    if abs(stride - round(stride)) > 1e-9:
        raise ConfigurationError(
            f"dt_out = {cfg.dt_out} must be an integer multiple of quadrature_dt = {h}"
        )
    n_out = cfg.t_max / cfg.dt_out
    if abs(n_out - round(n_out)) > 1e-9:
        raise ConfigurationError(
            f"t_max = {cfg.t_max} must be an integer multiple of dt_out = {cfg.dt_out} "
            "for the quadrature solver"
        )
    return int(round(stride)), int(round(n_out))


def _coarseness_guard(cfg: SolverConfig, rates, validate_mode: bool):
    limit = 0.01 / max(1.0, *rates)
    if cfg.quadrature_dt > limit * (1.0 + 1e-12):
        message = (
            f"quadrature_dt = {cfg.quadrature_dt} is too coarse for rates {rates}; "
            f"need <= {limit:.3g}"
        )
        if validate_mode:
            raise ConfigurationError(message)
        warnings.warn(message, RuntimeWarning, stacklevel=3)


def solve_survival_quadrature(
    params: ModelParams, cfg: SolverConfig, *, validate_mode: bool = False
) -> Trajectory:
    """Solve the survival-amplitude equation by direct history integration.

    Marches on a uniform grid of step ``cfg.quadrature_dt``, evaluating the
    full memory integral with the composite trapezoidal rule at every step
    and advancing with a second-order predictor-corrector whose implicit
    endpoint is solved in closed form (the corrector iterated to
    convergence).  Cost is quadratic in the step count; this path exists as
    an independent oracle for :func:`solve_survival`.
    """
    _coarseness_guard(cfg, (params.R, params.Omega), validate_mode)
    stride, n_out = _check_uniform_grid(cfg)
    h = cfg.quadrature_dt
    n_steps = stride * n_out
    ts = h * np.arange(n_steps + 1)

    R2 = params.R * params.R
    a = -1.0 + 1j * params.delta
    if params.d != 0.0:
        g = np.exp(1j * (params.d / params.Omega) * np.sin(params.Omega * ts))
    else:
        g = np.ones(n_steps + 1, dtype=complex)
    gbar = np.conj(g)

    # decay[j] = exp(a j h); the reversed copy makes each history window a
    # contiguous slice so the trapezoid sum is a single BLAS dot product.
    decay = np.exp(a * h * np.arange(n_steps + 1))
    decay_rev = decay[::-1].copy()

    E = np.empty(n_steps + 1, dtype=complex)
    hist = np.empty(n_steps + 1, dtype=complex)  # hist[k] = conj(g_k) E_k
    E[0] = 1.0
    hist[0] = gbar[0]
    f_prev = 0.0 + 0.0j  # dE/dt at t = 0 (empty memory integral)
    implicit = 1.0 + R2 * h * h / 4.0

    N = n_steps
    for n in range(n_steps):
        # Trapezoid over the known history k = 0..n against the kernel row
        # for t_{n+1}: full-weight dot minus the half-weight left endpoint.
        s_hist = np.dot(decay_rev[N - n - 1 : N], hist[: n + 1])
        s_hist -= 0.5 * decay[n + 1] * hist[0]
        s_hist *= h
        drive = -R2 * g[n + 1] * s_hist
        # Corrector (trapezoidal step) with the endpoint term, whose kernel
        # value is exactly 1, solved algebraically.
        E[n + 1] = (E[n] + 0.5 * h * (f_prev + drive)) / implicit
        hist[n + 1] = gbar[n + 1] * E[n + 1]
        f_prev = drive - R2 * 0.5 * h * E[n + 1]

    survival = E[::stride].copy()
    survival[0] = 1.0 + 0.0j
    c1, c2 = amplitudes_from_survival(params, survival)
    return Trajectory(
        times=cfg.time_grid(),
        c1=c1,
        c2=c2,
        survival=survival,
        stats={"steps": n_steps, "method": "history-quadrature/trapezoid-pc"},
    )


# ---------------------------------------------------------------------------
# general (non-identical) two-qubit solver
# ---------------------------------------------------------------------------

def solve_general(
    gparams: GeneralParams,
    cfg: SolverConfig,
    c01: complex,
    c02: complex,
    *,
    validate_mode: bool = False,
) -> Trajectory:
    """Integrate the coupled amplitude pair for possibly distinct qubits.

    Uses the same direct Volterra quadrature as the survival oracle, with
    the exponential bath correlation and per-qubit modulation phases.  The
    survival field of the returned trajectory is None: a single survival
    amplitude exists only in the identical-qubit reduction.
    """
    norm = abs(c01) ** 2 + abs(c02) ** 2
    if abs(norm - 1.0) > 1e-12:
        raise ValidationError(f"|c01|^2 + |c02|^2 must equal 1, got {norm!r}")
    _coarseness_guard(
        cfg, (gparams.R, gparams.Omega_a, gparams.Omega_b), validate_mode
    )
    stride, n_out = _check_uniform_grid(cfg)
    h = cfg.quadrature_dt
    n_steps = stride * n_out
    ts = h * np.arange(n_steps + 1)

    R2 = gparams.R * gparams.R
    mu1, mu2 = gparams.mu1, gparams.mu2
    a_a = -1.0 + 1j * gparams.delta_a
    a_b = -1.0 + 1j * gparams.delta_b
    d_ab = gparams.delta_ab

    def phase(d, Omega):
        if d == 0.0:
            return np.ones(n_steps + 1, dtype=complex)
        return np.exp(1j * (d / Omega) * np.sin(Omega * ts))

    G_a = phase(gparams.d_a, gparams.Omega_a)
    G_b = phase(gparams.d_b, gparams.Omega_b)
    cross = np.exp(1j * d_ab * ts)  # exp(i (delta_a - delta_b) t)

    decay_a = np.exp(a_a * h * np.arange(n_steps + 1))
    decay_b = np.exp(a_b * h * np.arange(n_steps + 1))
    rev_a = decay_a[::-1].copy()
    rev_b = decay_b[::-1].copy()

    C1 = np.empty(n_steps + 1, dtype=complex)
    C2 = np.empty(n_steps + 1, dtype=complex)
    C1[0], C2[0] = complex(c01), complex(c02)

    # Histories entering the four memory integrals.
    h_aa = np.empty(n_steps + 1, dtype=complex)  # conj(G_a) C1
    h_ab = np.empty(n_steps + 1, dtype=complex)  # conj(G_b) e^{+i d_ab t} C2
    h_bb = np.empty(n_steps + 1, dtype=complex)  # conj(G_b) C2
    h_ba = np.empty(n_steps + 1, dtype=complex)  # conj(G_a) e^{-i d_ab t} C1
    h_aa[0] = np.conj(G_a[0]) * C1[0]
    h_ab[0] = np.conj(G_b[0]) * cross[0] * C2[0]
    h_bb[0] = np.conj(G_b[0]) * C2[0]
    h_ba[0] = np.conj(G_a[0]) * np.conj(cross[0]) * C1[0]

    f1_prev = 0.0 + 0.0j
    f2_prev = 0.0 + 0.0j
    N = n_steps
    half_h2R2 = 0.25 * h * h * R2

    for n in range(n_steps):
        window = slice(N - n - 1, N)
        s_aa = np.dot(rev_a[window], h_aa[: n + 1]) - 0.5 * decay_a[n + 1] * h_aa[0]
        s_ab = np.dot(rev_a[window], h_ab[: n + 1]) - 0.5 * decay_a[n + 1] * h_ab[0]
        s_bb = np.dot(rev_b[window], h_bb[: n + 1]) - 0.5 * decay_b[n + 1] * h_bb[0]
        s_ba = np.dot(rev_b[window], h_ba[: n + 1]) - 0.5 * decay_b[n + 1] * h_ba[0]

        b1 = -R2 * G_a[n + 1] * h * (mu1 * mu1 * s_aa + mu1 * mu2 * s_ab)
        b2 = -R2 * G_b[n + 1] * h * (mu2 * mu2 * s_bb + mu1 * mu2 * s_ba)

        # Endpoint (t' = t_{n+1}) contributions couple C1 and C2 through the
        # Hermitian matrix [[mu1^2, mu1 mu2 q], [mu1 mu2 conj(q), mu2^2]].
        q = G_a[n + 1] * np.conj(G_b[n + 1]) * cross[n + 1]
        m11 = 1.0 + half_h2R2 * mu1 * mu1
        m22 = 1.0 + half_h2R2 * mu2 * mu2
        m12 = half_h2R2 * mu1 * mu2 * q
        m21 = half_h2R2 * mu1 * mu2 * np.conj(q)

        rhs1 = C1[n] + 0.5 * h * (f1_prev + b1)
        rhs2 = C2[n] + 0.5 * h * (f2_prev + b2)
        det = m11 * m22 - m12 * m21
        C1[n + 1] = (m22 * rhs1 - m12 * rhs2) / det
        C2[n + 1] = (m11 * rhs2 - m21 * rhs1) / det

        h_aa[n + 1] = np.conj(G_a[n + 1]) * C1[n + 1]
        h_ab[n + 1] = np.conj(G_b[n + 1]) * cross[n + 1] * C2[n + 1]
        h_bb[n + 1] = np.conj(G_b[n + 1]) * C2[n + 1]
        h_ba[n + 1] = np.conj(G_a[n + 1]) * np.conj(cross[n + 1]) * C1[n + 1]

        f1_prev = b1 - R2 * 0.5 * h * (
            mu1 * mu1 * C1[n + 1] + mu1 * mu2 * q * C2[n + 1]
        )
        f2_prev = b2 - R2 * 0.5 * h * (
            mu2 * mu2 * C2[n + 1] + mu1 * mu2 * np.conj(q) * C1[n + 1]
        )

    return Trajectory(
        times=cfg.time_grid(),
        c1=C1[::stride].copy(),
        c2=C2[::stride].copy(),
        survival=None,
        stats={"steps": n_steps, "method": "general-quadrature/trapezoid-pc"},
    )


def decoherence_free_check(params: ModelParams, cfg: SolverConfig) -> float:
    """Deviation of the dark antisymmetric state from staying put.

    Starts the general solver in (c01, c02) = (r2, -r1), the combination
    decoupled from the bath, and returns the maximum over the grid of the
    Euclidean distance of (C1, C2) from the initial pair.  Must stay at the
    rounding level for identical qubits.
    """
    gparams = GeneralParams.from_model(params)
    traj = solve_general(gparams, cfg, complex(params.r2), complex(-params.r1))
    deviation = np.sqrt(
        np.abs(traj.c1 - params.r2) ** 2 + np.abs(traj.c2 + params.r1) ** 2
    )
    return float(np.max(deviation))
