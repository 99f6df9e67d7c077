"""Run configuration: JSON schema, validation, and the preset catalog.

A config is a flat JSON object.  Angle-valued keys accept a `_deg` variant
holding degrees; the resolved form is always canonical radians.  A config may
name a `preset` whose values it then selectively overrides.
"""

from __future__ import annotations

import json
import math

from .gait_synthesis import (
    BACKWARD_CRAWL,
    CRAWL_TURN_LEFT,
    CRAWL_TURN_RIGHT,
    FORWARD_CRAWL,
    GAIT_KINDS,
    INPLACE_CCW,
    INPLACE_CW,
    GaitSpec,
    backward_crawl_spec,
    crawl_turn_spec,
    forward_crawl_spec,
    inplace_turn_spec,
)
from .limb_kinematics import LimbGeometry
from .robot_model import TETRAHEDRAL_DELTA, RobotConfig


class ParseError(Exception):
    """Malformed config text; carries the line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationError(Exception):
    """Well-formed config that violates the schema or an invariant."""


# Keys whose values are angles in radians; each also accepts `<key>_deg`.
_ANGLE_KEYS = (
    "phase_offset",
    "head_phi_end",
    "back_phi_max",
    "mount_elevation_delta",
)

_NUMBER_KEYS = (
    "stride_radius",
    "turn_stride_radius",
    "frequency",
    "plane_offset",
    "limb_length",
    "anchor_radius",
    "limb_mass",
    "hub_mass",
) + _ANGLE_KEYS

_INT_KEYS = ("samples_per_cycle", "cycles")

_KNOWN_KEYS = frozenset(
    ("preset", "gait")
    + _NUMBER_KEYS
    + tuple(f"{k}_deg" for k in _ANGLE_KEYS)
    + _INT_KEYS
)

_TURN_KINDS = (CRAWL_TURN_LEFT, CRAWL_TURN_RIGHT)


def _defaults(gait: str) -> dict:
    out = {
        "gait": gait,
        "stride_radius": 0.10,
        "frequency": 1.0,
        "samples_per_cycle": 100,
        "cycles": 1,
        "plane_offset": 0.18,
        "phase_offset": 0.0,
        "head_phi_end": 0.5 * math.pi,
        # The forward crawl ramps the back limb from straight each cycle; the
        # other crawls hold it at a constant bend.
        "back_phi_max": 0.25 * math.pi if gait == FORWARD_CRAWL else 0.5 * math.pi,
        "limb_length": 0.24,
        "anchor_radius": 0.0125,
        "limb_mass": 0.15,
        "hub_mass": 0.0,
        "mount_elevation_delta": TETRAHEDRAL_DELTA,
    }
    if gait in _TURN_KINDS:
        out["turn_stride_radius"] = 0.04
    return out


def _build_presets() -> dict:
    frequencies = (("075", 0.75), ("100", 1.0), ("125", 1.25))
    radii = (("06", 0.06), ("08", 0.08), ("10", 0.10))
    b_radii = (("04", 0.04), ("06", 0.06), ("08", 0.08))
    presets: dict[str, dict] = {}
    for tag, gait in (("fwd", FORWARD_CRAWL), ("bwd", BACKWARD_CRAWL)):
        for rr, rho in radii:
            for ff, freq in frequencies:
                presets[f"{tag}-r{rr}-f{ff}"] = {
                    "gait": gait, "stride_radius": rho, "frequency": freq,
                }
    for side, gait in (("left", CRAWL_TURN_LEFT), ("right", CRAWL_TURN_RIGHT)):
        for bb, rho_b in b_radii:
            for ff, freq in frequencies:
                presets[f"turn-{side}-b{bb}-f{ff}"] = {
                    "gait": gait, "turn_stride_radius": rho_b,
                    "stride_radius": 0.10, "frequency": freq,
                }
            # Shorthand at the default 1.00 Hz.
            presets[f"turn-{side}-b{bb}"] = dict(presets[f"turn-{side}-b{bb}-f100"])
    for sense, gait in (("cw", INPLACE_CW), ("ccw", INPLACE_CCW)):
        for rr, rho in radii:
            for ff, freq in frequencies:
                presets[f"inplace-{sense}-r{rr}-f{ff}"] = {
                    "gait": gait, "stride_radius": rho, "frequency": freq,
                }
    return presets


PRESETS = _build_presets()


def preset_names() -> tuple:
    return tuple(PRESETS)


def preset_config(name: str) -> dict:
    if name not in PRESETS:
        raise ValidationError(f"unknown preset {name!r}")
    return dict(PRESETS[name])


def _require_number(data: dict, key: str) -> None:
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{key} must be a number, got {value!r}")
    if not math.isfinite(float(value)):
        raise ValidationError(f"{key} must be finite, got {value!r}")


def _merge_degrees(data: dict) -> dict:
    """Fold `<key>_deg` entries into canonical radian keys."""
    out = dict(data)
    for key in _ANGLE_KEYS:
        deg_key = f"{key}_deg"
        if deg_key in out:
            if key in out:
                raise ValidationError(f"give either {key} or {deg_key}, not both")
            _require_number(out, deg_key)
            out[key] = math.radians(float(out.pop(deg_key)))
    return out


def resolve_config_dict(data: dict) -> dict:
    """Validate a config object and fill in defaults.

    Returns the fully resolved, canonical (radians-only) parameter set that
    the rest of the pipeline and the run manifest use.
    """
    if not isinstance(data, dict):
        raise ValidationError("config must be a JSON object of key-value pairs")
    # A run manifest embeds its config; accept it directly for round-trips.
    if "run_hash" in data and isinstance(data.get("config"), dict):
        data = data["config"]
    unknown = sorted(set(data) - _KNOWN_KEYS)
    if unknown:
        raise ValidationError(f"unknown config key(s): {', '.join(unknown)}")

    merged: dict = {}
    if "preset" in data:
        name = data["preset"]
        if not isinstance(name, str):
            raise ValidationError(f"preset must be a string, got {name!r}")
        merged.update(preset_config(name))
    explicit = _merge_degrees({k: v for k, v in data.items() if k != "preset"})
    merged.update(explicit)

    if "gait" not in merged:
        raise ValidationError("config must name a gait (or a preset that does)")
    gait = merged["gait"]
    if gait not in GAIT_KINDS:
        raise ValidationError(
            f"gait must be one of {', '.join(GAIT_KINDS)}; got {gait!r}"
        )

    resolved = _defaults(gait)
    if "turn_stride_radius" in merged and gait not in _TURN_KINDS:
        raise ValidationError("turn_stride_radius is only valid for crawl_turn gaits")
    resolved.update(merged)

    for key in _NUMBER_KEYS:
        if key in resolved:
            _require_number(resolved, key)
            resolved[key] = float(resolved[key])
    for key in _INT_KEYS:
        value = resolved[key]
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"{key} must be an integer, got {value!r}")
    if not resolved["frequency"] > 0.0:
        raise ValidationError("frequency must be > 0")
    if resolved["stride_radius"] < 0.0:
        raise ValidationError("stride_radius must be >= 0")
    if gait in _TURN_KINDS and resolved["turn_stride_radius"] < 0.0:
        raise ValidationError("turn_stride_radius must be >= 0")
    return resolved


def realize_config(resolved: dict) -> tuple[GaitSpec, RobotConfig]:
    """Build the gait spec and robot model from a resolved parameter set."""
    try:
        geom = LimbGeometry(
            length=resolved["limb_length"],
            anchor_radius=resolved["anchor_radius"],
            mass=resolved["limb_mass"],
        )
        robot = RobotConfig.uniform(
            geom,
            mount_elevation_delta=resolved["mount_elevation_delta"],
            hub_mass=resolved["hub_mass"],
        )
        gait = resolved["gait"]
        common = dict(
            samples_per_cycle=resolved["samples_per_cycle"],
            n_cycles=resolved["cycles"],
            plane_offset=resolved["plane_offset"],
            phase_offset=resolved["phase_offset"],
        )
        if gait == FORWARD_CRAWL:
            spec = forward_crawl_spec(
                resolved["stride_radius"], resolved["frequency"],
                head_phi_end=resolved["head_phi_end"],
                back_phi_max=resolved["back_phi_max"], **common,
            )
        elif gait == BACKWARD_CRAWL:
            spec = backward_crawl_spec(
                resolved["stride_radius"], resolved["frequency"],
                head_phi=resolved["head_phi_end"],
                back_phi=resolved["back_phi_max"], **common,
            )
        elif gait in _TURN_KINDS:
            spec = crawl_turn_spec(
                "left" if gait == CRAWL_TURN_LEFT else "right",
                resolved["turn_stride_radius"],
                resolved["stride_radius"], resolved["frequency"],
                head_phi=resolved["head_phi_end"],
                back_phi=resolved["back_phi_max"], **common,
            )
        else:
            spec = inplace_turn_spec(
                "cw" if gait == INPLACE_CW else "ccw",
                resolved["stride_radius"], resolved["frequency"], **common,
            )
    except KeyError as err:
        raise ValidationError(
            f"config is missing {err.args[0]!r}; pass it through "
            "resolve_config_dict to fill in defaults first"
        ) from None
    except ValueError as err:
        raise ValidationError(str(err)) from None
    return spec, robot


def parse_config(text: str) -> tuple[GaitSpec, RobotConfig]:
    """Parse config text into a gait spec and robot model.

    Raises ParseError for malformed JSON (with line and column) and
    ValidationError for schema or invariant violations.
    """
    return realize_config(resolve_config_text(text))


def resolve_config_text(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(
            f"line {err.lineno}, column {err.colno}: {err.msg}",
            line=err.lineno,
            column=err.colno,
        ) from None
    return resolve_config_dict(data)
