"""Named sweep presets shipped with the package.

Each preset is a complete configuration document reproducing one of the
standard parameter studies: strong coupling with moderate and large
modulation amplitudes, and the weak-coupling long-horizon scan.  The
modulation-frequency lists are representative of the regimes, not
prescribed values.
"""

from __future__ import annotations

from importlib import resources

_PRESET_SUMMARIES = {
    "fig2": "strong coupling (R=5), d=10, energy change per Omega",
    "fig3": "strong coupling (R=5), d=10, work ratio per Omega",
    "fig4": "strong coupling (R=5), d in {20, 40}, energy change per Omega",
    "fig5": "strong coupling (R=5), d in {20, 40}, work ratio per Omega",
    "fig6": "weak coupling (R=0.1), d=10, low-frequency scan over t <= 100",
}

PRESET_NAMES = tuple(sorted(_PRESET_SUMMARIES))


def preset_summary(name: str) -> str:
    _require(name)
    return _PRESET_SUMMARIES[name]


def preset_text(name: str) -> str:
    """Configuration document text for a named preset."""
    _require(name)
    return (
        resources.files("qbattery").joinpath("presets").joinpath(f"{name}.cfg").read_text()
    )


def _require(name: str):
    if name not in _PRESET_SUMMARIES:
        raise KeyError(
            f"unknown preset {name!r}; available: {', '.join(PRESET_NAMES)}"
        )
