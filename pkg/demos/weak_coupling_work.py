"""Work extraction in the weak-coupling regime needs very slow modulation.

Unmodulated weak coupling (R = 0.1) is overdamped: the battery population
creeps to 1/4 and never crosses the work threshold of 1/2.  A slow drive
winds the survival amplitude's phase at rate ~R^2 d/(1 + d^2) while it is
parked off resonance; once the accumulated rotation approaches pi the
battery population overshoots 1/2 and work appears.  That takes
Omega ~ R^2/3, i.e. thousands of loss times.  Writes weak_coupling_work.png.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from qbattery import ModelParams, SolverConfig, observable_series, solve_survival

fig, (ax_e, ax_w) = plt.subplots(1, 2, figsize=(11, 4))

plain = observable_series(
    solve_survival(ModelParams(R=0.1), SolverConfig(t_max=12600.0, dt_out=0.25))
)
print(f"unmodulated:   max p_e = {np.max(plain.p_e_B):.3f}, max W = {np.max(plain.W_ratio):.3f}")
ax_e.plot(plain.times, plain.dE_B, "k--", lw=1.0, label="modulation off")
ax_w.plot(plain.times, plain.W_ratio, "k--", lw=1.0, label="modulation off")

for Omega in (0.01, 0.002, 0.001):
    cfg = SolverConfig(t_max=12600.0, dt_out=0.25)
    series = observable_series(solve_survival(ModelParams(R=0.1, d=10.0, Omega=Omega), cfg))
    print(f"Omega = {Omega:6}: max p_e = {np.max(series.p_e_B):.3f}, "
          f"max W = {np.max(series.W_ratio):.3f}")
    ax_e.plot(series.times, series.dE_B, lw=1.0, label=f"$\\Omega={Omega}$")
    ax_w.plot(series.times, series.W_ratio, lw=1.0, label=f"$\\Omega={Omega}$")

for ax, ylabel in ((ax_e, "$\\Delta E_B/\\omega_0$"), (ax_w, "$W/W_{max}$")):
    ax.set_xlabel("$\\lambda\\tau$")
    ax.set_ylabel(ylabel)
    ax.legend(fontsize=8)
fig.suptitle("Weak coupling (R = 0.1), d = 10: work only at very low drive frequency")
fig.tight_layout()
out = pathlib.Path(__file__).with_name("weak_coupling_work.png")
fig.savefig(out, dpi=130)
print(f"wrote {out}")
