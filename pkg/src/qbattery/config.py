"""Sweep configuration documents.

A configuration is a small YAML key-value document.  The published keys:

    R, delta, d, Omega    scalar or list (sweep axes, cartesian product)
    r1                    relative charger coupling; r2 = sqrt(1 - r1^2)
    c01_re, c01_im        initial charger amplitude (default 1, 0)
    c02_re, c02_im        initial battery amplitude (default 0, 0)
    t_max, dt_out         horizon and output grid spacing
    rel_tol, abs_tol      adaptive integrator tolerances
    quadrature_dt         step of the direct history-quadrature oracle
    output_dir            where series and index CSVs are written
    label                 free-form run label

Unknown keys, type mismatches and invalid parameter combinations raise
:class:`~qbattery.errors.ParseError` naming the key and line.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field, replace
from pathlib import Path

import yaml

from .errors import ConfigurationError, ParseError, ValidationError
from .params import ModelParams, SolverConfig

DEFAULT_GRID_CAP = 10_000

_AXIS_KEYS = ("R", "delta", "d", "Omega")
_SCALAR_KEYS = (
    "r1",
    "c01_re",
    "c01_im",
    "c02_re",
    "c02_im",
    "t_max",
    "dt_out",
    "rel_tol",
    "abs_tol",
    "quadrature_dt",
)
_STRING_KEYS = ("output_dir", "label")
KNOWN_KEYS = frozenset(_AXIS_KEYS + _SCALAR_KEYS + _STRING_KEYS)

_DEFAULTS = {
    "delta": 0.0,
    "d": 0.0,
    "Omega": 0.0,
    "r1": 1.0 / math.sqrt(2.0),
    "c01_re": 1.0,
    "c01_im": 0.0,
    "c02_re": 0.0,
    "c02_im": 0.0,
    "t_max": 20.0,
    "dt_out": 0.01,
    "rel_tol": 1e-10,
    "abs_tol": 1e-12,
    "quadrature_dt": 1e-3,
    "label": "run",
}


@dataclass
class SweepSpec:
    """Validated sweep: a base parameter set plus cartesian axis values."""

    base: ModelParams
    R_values: list[float]
    delta_values: list[float]
    d_values: list[float]
    Omega_values: list[float]
    cfg: SolverConfig
    label: str = "run"
    output_dir: Path | None = None

    def grid_points(self):
        """Parameter sets for every grid point, in cartesian order."""
        for R, delta, d, Omega in itertools.product(
            self.R_values, self.delta_values, self.d_values, self.Omega_values
        ):
            yield replace(self.base, R=R, delta=delta, d=d, Omega=Omega)

    @property
    def grid_size(self) -> int:
        return (
            len(self.R_values)
            * len(self.delta_values)
            * len(self.d_values)
            * len(self.Omega_values)
        )


def _line_of(text: str, key: str) -> int | None:
    pattern = re.compile(rf"^\s*{re.escape(key)}\s*:", re.MULTILINE)
    match = pattern.search(text)
    if match is None:
        return None
    return text.count("\n", 0, match.start()) + 1


def _require_number(value, key, line):
    if isinstance(value, bool):
        raise ParseError(f"expected a number, got bool {value!r}", key=key, line=line)
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        # YAML 1.1 resolves '1e-9' (no dot) as a string; accept it anyway.
        try:
            return float(value)
        except ValueError:
            pass
    raise ParseError(
        f"expected a number, got {type(value).__name__} {value!r}", key=key, line=line
    )


def _axis_values(value, key, line):
    if isinstance(value, list):
        if not value:
            return None  # empty axis list: fall back to the base value
        return [_require_number(v, key, line) for v in value]
    return [_require_number(value, key, line)]


def parse_config(text: str, grid_cap: int = DEFAULT_GRID_CAP) -> SweepSpec:
    """Parse and validate a sweep configuration document.

    Raises ParseError naming the offending key and line for unknown keys,
    type mismatches and parameter combinations that violate the model
    invariants (for example any grid point with Omega = 0 and d != 0).
    """
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        line = mark.line + 1 if mark is not None else None
        raise ParseError(f"invalid document syntax: {exc}", line=line) from exc
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ParseError(f"document must be a key-value mapping, got {type(raw).__name__}")

    for key in raw:
        if key not in KNOWN_KEYS:
            raise ParseError("unknown key", key=str(key), line=_line_of(text, str(key)))

    def line_for(key):
        return _line_of(text, key)

    if "R" not in raw:
        raise ParseError("missing required key", key="R", line=None)

    axes = {}
    for key in _AXIS_KEYS:
        if key in raw:
            values = _axis_values(raw[key], key, line_for(key))
            axes[key] = values  # None signals an explicitly empty list
        else:
            axes[key] = None

    scalars = {}
    for key in _SCALAR_KEYS:
        if key in raw:
            scalars[key] = _require_number(raw[key], key, line_for(key))
        else:
            scalars[key] = _DEFAULTS[key]

    strings = {}
    for key in _STRING_KEYS:
        if key in raw:
            if not isinstance(raw[key], str):
                raise ParseError(
                    f"expected a string, got {type(raw[key]).__name__}",
                    key=key,
                    line=line_for(key),
                )
            strings[key] = raw[key]

    r1 = scalars["r1"]
    if not 0.0 <= r1 <= 1.0:
        raise ParseError(f"r1 must lie in [0, 1], got {r1}", key="r1", line=line_for("r1"))
    r2 = math.sqrt(max(0.0, 1.0 - r1 * r1))
    c01 = complex(scalars["c01_re"], scalars["c01_im"])
    c02 = complex(scalars["c02_re"], scalars["c02_im"])

    axis_defaults = {"delta": _DEFAULTS["delta"], "d": _DEFAULTS["d"], "Omega": _DEFAULTS["Omega"]}
    resolved = {}
    for key in _AXIS_KEYS:
        if axes[key] is None:
            if key == "R":
                raise ParseError("R axis may not be empty", key="R", line=line_for("R"))
            resolved[key] = [axis_defaults[key]]
        else:
            resolved[key] = axes[key]

    try:
        cfg = SolverConfig(
            t_max=scalars["t_max"],
            dt_out=scalars["dt_out"],
            rel_tol=scalars["rel_tol"],
            abs_tol=scalars["abs_tol"],
            quadrature_dt=scalars["quadrature_dt"],
        )
    except (ValidationError, ConfigurationError) as exc:
        raise ParseError(str(exc), key="t_max", line=line_for("t_max")) from exc

    def build_params(R, delta, d, Omega):
        return ModelParams(
            R=R, delta=delta, d=d, Omega=Omega, r1=r1, r2=r2, c01=c01, c02=c02
        )

    try:
        base = build_params(
            resolved["R"][0], resolved["delta"][0], resolved["d"][0], resolved["Omega"][0]
        )
    except (ValidationError, ConfigurationError) as exc:
        key = "Omega" if "Omega" in str(exc) else "R"
        raise ParseError(str(exc), key=key, line=line_for(key)) from exc

    spec = SweepSpec(
        base=base,
        R_values=resolved["R"],
        delta_values=resolved["delta"],
        d_values=resolved["d"],
        Omega_values=resolved["Omega"],
        cfg=cfg,
        label=strings.get("label", _DEFAULTS["label"]),
        output_dir=Path(strings["output_dir"]) if "output_dir" in strings else None,
    )

    if spec.grid_size > grid_cap:
        raise ParseError(
            f"sweep grid has {spec.grid_size} points, above the cap of {grid_cap}",
            key="R",
            line=line_for("R"),
        )
    for R, delta, d, Omega in itertools.product(
        spec.R_values, spec.delta_values, spec.d_values, spec.Omega_values
    ):
        try:
            build_params(R, delta, d, Omega)
        except (ValidationError, ConfigurationError) as exc:
            key = "Omega" if "Omega" in str(exc) else "R"
            raise ParseError(
                f"grid point (R={R}, delta={delta}, d={d}, Omega={Omega}) is "
                f"invalid: {exc}",
                key=key,
                line=line_for(key),
            ) from exc
    return spec
