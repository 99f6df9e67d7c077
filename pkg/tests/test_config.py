"""Unit tests for run-config parsing, validation, and the preset catalog."""

import json
import math

import pytest

from pinniped.config import (
    PRESETS,
    ParseError,
    ValidationError,
    parse_config,
    preset_config,
    preset_names,
    realize_config,
    resolve_config_dict,
    resolve_config_text,
)
from pinniped.gait_synthesis import (
    ANTICLOCKWISE,
    BACKWARD_CRAWL,
    CLOCKWISE,
    CRAWL_TURN_LEFT,
    FORWARD_CRAWL,
    INPLACE_CCW,
)
from pinniped.robot_model import LimbId, TETRAHEDRAL_DELTA


def test_minimal_config_resolves_with_defaults():
    resolved = resolve_config_dict({"gait": "forward_crawl"})
    assert resolved["gait"] == FORWARD_CRAWL
    assert resolved["stride_radius"] == 0.10
    assert resolved["frequency"] == 1.0
    assert resolved["samples_per_cycle"] == 100
    assert resolved["cycles"] == 1
    assert resolved["plane_offset"] == 0.18
    assert resolved["head_phi_end"] == 0.5 * math.pi
    assert resolved["back_phi_max"] == 0.25 * math.pi
    assert resolved["limb_length"] == 0.24
    assert resolved["anchor_radius"] == 0.0125
    assert resolved["limb_mass"] == 0.15
    assert resolved["hub_mass"] == 0.0
    assert resolved["mount_elevation_delta"] == TETRAHEDRAL_DELTA


def test_backward_holds_use_their_own_default_bend():
    resolved = resolve_config_dict({"gait": "backward_crawl"})
    assert resolved["back_phi_max"] == 0.5 * math.pi


def test_realize_forward_config():
    spec, robot = parse_config(
        '{"gait": "forward_crawl", "stride_radius": 0.08, "frequency": 1.25}'
    )
    assert spec.gait_kind == FORWARD_CRAWL
    assert spec.strides[LimbId.FR].stride_radius == 0.08
    assert spec.strides[LimbId.FR].direction == ANTICLOCKWISE
    assert spec.strides[LimbId.FL].direction == CLOCKWISE
    assert math.isclose(spec.period, 1.0 / 1.25, rel_tol=1e-15)
    assert robot.head.length == 0.24
    assert robot.hub_mass == 0.0


def test_realize_turn_config_routes_the_back_stride():
    spec, _ = parse_config(
        '{"gait": "crawl_turn_left", "turn_stride_radius": 0.06}'
    )
    assert spec.gait_kind == CRAWL_TURN_LEFT
    assert spec.strides[LimbId.B].stride_radius == 0.06
    assert spec.strides[LimbId.B].direction == CLOCKWISE
    assert spec.strides[LimbId.FR].stride_radius == 0.10


def test_realize_robot_overrides():
    _, robot = parse_config(
        json.dumps({
            "gait": "forward_crawl",
            "limb_length": 0.30,
            "anchor_radius": 0.02,
            "limb_mass": 0.25,
            "hub_mass": 0.40,
        })
    )
    assert robot.head.length == 0.30
    assert robot.head.anchor_radius == 0.02
    assert robot.head.mass == 0.25
    assert robot.hub_mass == 0.40


def test_angle_keys_accept_degree_variants():
    resolved = resolve_config_dict(
        {"gait": "forward_crawl", "head_phi_end_deg": 90}
    )
    assert math.isclose(resolved["head_phi_end"], 0.5 * math.pi, rel_tol=1e-15)
    with pytest.raises(ValidationError):
        resolve_config_dict({
            "gait": "forward_crawl",
            "head_phi_end": 1.0,
            "head_phi_end_deg": 57.0,
        })


def test_unknown_keys_are_rejected():
    with pytest.raises(ValidationError) as err:
        resolve_config_dict({"gait": "forward_crawl", "stride_radis": 0.1})
    assert "stride_radis" in str(err.value)


def test_gait_is_required_and_checked():
    with pytest.raises(ValidationError):
        resolve_config_dict({"stride_radius": 0.1})
    with pytest.raises(ValidationError):
        resolve_config_dict({"gait": "gallop"})


def test_numeric_validation():
    with pytest.raises(ValidationError):
        resolve_config_dict({"gait": "forward_crawl", "frequency": 0.0})
    with pytest.raises(ValidationError):
        resolve_config_dict({"gait": "forward_crawl", "frequency": "fast"})
    with pytest.raises(ValidationError):
        resolve_config_dict({"gait": "forward_crawl", "stride_radius": -0.1})
    with pytest.raises(ValidationError):
        resolve_config_dict({"gait": "forward_crawl", "stride_radius": True})
    with pytest.raises(ValidationError):
        resolve_config_dict({"gait": "forward_crawl", "samples_per_cycle": 99.5})
    with pytest.raises(ValidationError):
        resolve_config_dict({"gait": "forward_crawl", "hub_mass": float("nan")})


def test_turn_stride_radius_only_for_turn_gaits():
    with pytest.raises(ValidationError):
        resolve_config_dict({"gait": "forward_crawl", "turn_stride_radius": 0.05})


def test_non_object_configs_are_rejected():
    with pytest.raises(ValidationError):
        resolve_config_dict(["gait", "forward_crawl"])
    with pytest.raises(ValidationError):
        resolve_config_text('["not", "an", "object"]')


def test_parse_error_carries_location():
    with pytest.raises(ParseError) as err:
        resolve_config_text('{"gait": "forward_crawl",}')
    assert err.value.line == 1
    assert err.value.column is not None
    with pytest.raises(ParseError) as err:
        resolve_config_text('{\n  "gait": oops\n}')
    assert err.value.line == 2


def test_realize_rejects_unresolved_dicts():
    # A sparse dict (defaults not filled in) should not leak a KeyError.
    with pytest.raises(ValidationError, match="resolve_config_dict"):
        realize_config({"gait": "forward_crawl"})


def test_invariant_violations_surface_as_validation_errors():
    # Structurally valid numbers that break a model invariant.
    with pytest.raises(ValidationError):
        parse_config('{"gait": "forward_crawl", "limb_length": -0.24}')
    with pytest.raises(ValidationError):
        parse_config('{"gait": "forward_crawl", "samples_per_cycle": 4}')
    with pytest.raises(ValidationError):
        parse_config('{"gait": "forward_crawl", "mount_elevation_delta": 2.0}')


def test_preset_catalog_layout():
    names = preset_names()
    assert len(names) == 60
    assert len(set(names)) == 60
    # Straight crawls: two directions x three radii x three frequencies.
    fwd = [n for n in names if n.startswith("fwd-")]
    bwd = [n for n in names if n.startswith("bwd-")]
    assert len(fwd) == 9 and len(bwd) == 9
    # Turns add a frequency-less shorthand per stride radius.
    turns = [n for n in names if n.startswith("turn-")]
    assert len(turns) == 24
    inplace = [n for n in names if n.startswith("inplace-")]
    assert len(inplace) == 18


def test_preset_values_fwd():
    resolved = resolve_config_dict({"preset": "fwd-r10-f100"})
    assert resolved["gait"] == FORWARD_CRAWL
    assert resolved["stride_radius"] == 0.10
    assert resolved["frequency"] == 1.0
    explicit = resolve_config_dict({"gait": "forward_crawl"})
    assert resolved == explicit


def test_preset_values_turn_shorthand():
    short = resolve_config_dict({"preset": "turn-left-b04"})
    full = resolve_config_dict({"preset": "turn-left-b04-f100"})
    assert short == full
    assert short["gait"] == CRAWL_TURN_LEFT
    assert short["turn_stride_radius"] == 0.04
    assert short["stride_radius"] == 0.10


def test_preset_values_inplace():
    resolved = resolve_config_dict({"preset": "inplace-ccw-r06-f125"})
    assert resolved["gait"] == INPLACE_CCW
    assert resolved["stride_radius"] == 0.06
    assert resolved["frequency"] == 1.25


def test_preset_overrides_apply_on_top():
    resolved = resolve_config_dict({"preset": "bwd-r08-f075", "cycles": 3})
    assert resolved["gait"] == BACKWARD_CRAWL
    assert resolved["stride_radius"] == 0.08
    assert resolved["frequency"] == 0.75
    assert resolved["cycles"] == 3


def test_unknown_preset_is_rejected():
    with pytest.raises(ValidationError):
        resolve_config_dict({"preset": "moonwalk-r10"})
    with pytest.raises(ValidationError):
        preset_config("moonwalk-r10")
    with pytest.raises(ValidationError):
        resolve_config_dict({"preset": 7})


def test_preset_config_returns_copies():
    one = preset_config("fwd-r10-f100")
    one["stride_radius"] = 99.0
    assert PRESETS["fwd-r10-f100"]["stride_radius"] == 0.10


def test_manifest_round_trip_resolves_embedded_config():
    resolved = resolve_config_dict({"gait": "forward_crawl", "cycles": 2})
    manifest_shaped = {"run_hash": "abc123", "config": dict(resolved)}
    again = resolve_config_dict(manifest_shaped)
    assert again == resolved


def test_every_preset_realizes():
    for name in preset_names():
        spec, robot = realize_config(resolve_config_dict({"preset": name}))
        assert spec.samples_per_cycle == 100
        assert robot.head.length == 0.24
