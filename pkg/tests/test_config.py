"""Configuration-document parsing and sweep-spec validation."""

import math

import pytest

from qbattery import ParseError, parse_config


def test_minimal_document_with_defaults():
    spec = parse_config("{R: 5, d: 10, Omega: [0.5, 1, 5]}")
    assert spec.grid_size == 3
    assert spec.Omega_values == [0.5, 1.0, 5.0]
    assert spec.base.r1 == pytest.approx(1.0 / math.sqrt(2.0))
    assert spec.base.c01 == 1.0 + 0.0j
    assert spec.base.c02 == 0.0 + 0.0j
    assert spec.base.delta == 0.0
    assert spec.cfg.t_max == 20.0
    assert spec.cfg.dt_out == 0.01
    assert spec.label == "run"
    points = list(spec.grid_points())
    assert [p.Omega for p in points] == [0.5, 1.0, 5.0]
    assert all(p.R == 5.0 and p.d == 10.0 for p in points)


def test_modulation_off_single_run():
    spec = parse_config("{R: 5, d: 0, Omega: 0}")
    assert spec.grid_size == 1
    point = next(spec.grid_points())
    assert point.d == 0.0 and point.Omega == 0.0


def test_forbidden_modulation_rejected():
    with pytest.raises(ParseError) as info:
        parse_config("Omega: 0\nd: 10\nR: 5\n")
    assert info.value.key == "Omega"
    assert info.value.line == 1


def test_forbidden_grid_point_rejected():
    text = "R: 5\nd: [0, 10]\nOmega: [0, 1]\n"
    with pytest.raises(ParseError) as info:
        parse_config(text)
    assert info.value.key == "Omega"
    assert "grid point" in str(info.value)


def test_unknown_key_named_with_line():
    with pytest.raises(ParseError) as info:
        parse_config("R: 5\nbogus_key: 3\n")
    assert info.value.key == "bogus_key"
    assert info.value.line == 2


def test_type_mismatch_named():
    with pytest.raises(ParseError) as info:
        parse_config("R: hello\n")
    assert info.value.key == "R"
    assert "number" in str(info.value)
    with pytest.raises(ParseError):
        parse_config("R: 5\nlabel: [not, a, string]\n")
    with pytest.raises(ParseError):
        parse_config("R: 5\nOmega: [1, true]\n")


def test_missing_R_rejected():
    with pytest.raises(ParseError) as info:
        parse_config("d: 0\n")
    assert info.value.key == "R"


def test_r1_out_of_range():
    with pytest.raises(ParseError) as info:
        parse_config("R: 5\nr1: 1.5\n")
    assert info.value.key == "r1"


def test_unnormalized_initial_amplitudes_rejected():
    with pytest.raises(ParseError):
        parse_config("R: 5\nc01_re: 1\nc02_re: 1\n")


def test_entangled_initial_state_accepted():
    spec = parse_config("R: 5\nc01_re: 0.6\nc02_re: 0.8\nr1: 0.6\n")
    assert spec.base.c01 == 0.6 + 0.0j
    assert spec.base.c02 == 0.8 + 0.0j
    assert spec.base.r2 == pytest.approx(0.8)


def test_empty_axis_list_falls_back_to_base():
    spec = parse_config("R: 5\nd: 10\nOmega: [2]\ndelta: []\n")
    assert spec.delta_values == [0.0]
    assert spec.grid_size == 1


def test_grid_cap_enforced():
    with pytest.raises(ParseError, match="cap"):
        parse_config("R: [1, 2, 3, 4]\nOmega: [1, 2, 3]\n", grid_cap=10)


def test_solver_keys_propagate():
    spec = parse_config(
        "R: 2\nt_max: 7.5\ndt_out: 0.05\nrel_tol: 1e-9\nabs_tol: 1e-11\n"
        "quadrature_dt: 5e-4\nlabel: probe\noutput_dir: /tmp/somewhere\n"
    )
    assert spec.cfg.t_max == 7.5
    assert spec.cfg.dt_out == 0.05
    assert spec.cfg.rel_tol == 1e-9
    assert spec.cfg.abs_tol == 1e-11
    assert spec.cfg.quadrature_dt == 5e-4
    assert spec.label == "probe"
    assert str(spec.output_dir) == "/tmp/somewhere"


def test_yaml_syntax_error_carries_line():
    with pytest.raises(ParseError):
        parse_config("R: [1, 2\nd: 3\n")


def test_cartesian_order_is_deterministic():
    text = "R: [1, 2]\ndelta: [0, 1]\nd: 0\nOmega: 0\n"
    first = [(p.R, p.delta) for p in parse_config(text).grid_points()]
    second = [(p.R, p.delta) for p in parse_config(text).grid_points()]
    assert first == second == [(1.0, 0.0), (1.0, 1.0), (2.0, 0.0), (2.0, 1.0)]
