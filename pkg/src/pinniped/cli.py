"""Command-line front end and deterministic trajectory export.

Subcommands:
    synth <config> [-o DIR]   synthesize a gait and export CSVs + manifest
    presets list              list the built-in parameter presets
    check <config>            parse and validate a config, print the resolution
    analyze <trajectory-dir>  verify a previous export and report on it

Exit codes: 0 success, 2 config error, 3 synthesis error.  When -o is
omitted, the PINNIPED_OUTPUT_DIR environment variable, then ./pinniped_out,
provide the output directory.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .analysis import cog_compare, workspace_check
from .config import (
    ParseError,
    ValidationError,
    preset_names,
    realize_config,
    resolve_config_dict,
    resolve_config_text,
)
from .gait_synthesis import FORWARD_CRAWL, GaitTrajectory, synthesize
from .limb_kinematics import UnreachableError
from .robot_model import LIMB_ORDER

ENV_OUTPUT_DIR = "PINNIPED_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "pinniped_out"

EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_SYNTHESIS_ERROR = 3

_LIMB_NAMES = tuple(limb.name for limb in LIMB_ORDER)


def _fmt(value: float) -> str:
    # 17 significant digits round-trip any double exactly.
    value = float(value)
    if value == 0.0:  # avoid signed zeros in the output
        value = 0.0
    return format(value, ".17g")


def jointspace_csv(traj: GaitTrajectory, order: tuple[str, ...] = _LIMB_NAMES) -> str:
    """Wide-format actuator lengths, one row per sample.

    `order` reorders the per-limb column groups; the default is H, B, FR, FL.
    An external jointspace-to-pressure mapper can request its own order here.
    """
    if sorted(order) != sorted(_LIMB_NAMES):
        raise ValueError(f"order must be a permutation of {_LIMB_NAMES}, got {order}")
    columns = {limb.name: j for j, limb in enumerate(LIMB_ORDER)}
    header = "t," + ",".join(f"l_{name}{i}" for name in order for i in (1, 2, 3))
    lines = [header]
    for k in range(traj.n_samples):
        cells = [_fmt(traj.times[k])]
        for name in order:
            cells.extend(_fmt(v) for v in traj.joints[k, columns[name]])
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def taskspace_csv(traj: GaitTrajectory) -> str:
    """Long-format tip states: one row per sample per limb, in limb frames."""
    lines = ["t,limb,x,y,z,theta,phi"]
    for k in range(traj.n_samples):
        for j, limb in enumerate(LIMB_ORDER):
            x, y, z = traj.tips_limb[k, j]
            lines.append(",".join([
                _fmt(traj.times[k]), limb.name,
                _fmt(x), _fmt(y), _fmt(z),
                _fmt(traj.theta[k, j]), _fmt(traj.phi[k, j]),
            ]))
    return "\n".join(lines) + "\n"


def cog_csv(traj: GaitTrajectory) -> str:
    """Robot-frame center-of-gravity trace."""
    lines = ["t,x,y,z"]
    for k in range(traj.n_samples):
        cells = [_fmt(traj.times[k])] + [_fmt(v) for v in traj.cog[k]]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _report_dict(traj: GaitTrajectory, robot) -> dict:
    report = {"gait": traj.gait_kind, "workspace": workspace_check(traj, robot).to_dict()}
    if traj.gait_kind == FORWARD_CRAWL:
        report["cog_compare"] = cog_compare(traj, robot).summary()
    return report


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record for one synthesis run."""

    tool: str
    version: str
    gait_kind: str
    config_path: str | None
    config: dict
    files: dict
    run_hash: str

    def to_dict(self) -> dict:
        return {
            "tool": self.tool,
            "version": self.version,
            "gait_kind": self.gait_kind,
            "config_path": self.config_path,
            "config": self.config,
            "files": self.files,
            "run_hash": self.run_hash,
        }


def _json_bytes(data: dict) -> bytes:
    return (json.dumps(data, indent=2, sort_keys=True) + "\n").encode()


def run(
    resolved: dict,
    output_dir,
    config_path: str | None = None,
    pressure_order: tuple[str, ...] | None = None,
) -> tuple[GaitTrajectory, RunManifest]:
    """Synthesize the configured gait and export it under output_dir.

    Writes jointspace.csv, taskspace.csv, cog.csv, report.json, and
    manifest.json (plus jointspace_pressure.csv when pressure_order is
    given).  Identical resolved configs produce byte-identical outputs.
    """
    spec, robot = realize_config(resolved)
    traj = synthesize(spec, robot)

    outputs: dict[str, bytes] = {
        "jointspace.csv": jointspace_csv(traj).encode(),
        "taskspace.csv": taskspace_csv(traj).encode(),
        "cog.csv": cog_csv(traj).encode(),
        "report.json": _json_bytes(_report_dict(traj, robot)),
    }
    if pressure_order is not None:
        outputs["jointspace_pressure.csv"] = jointspace_csv(traj, pressure_order).encode()

    files = {name: _sha256(blob) for name, blob in sorted(outputs.items())}
    run_hash = _sha256("".join(f"{n}:{h}\n" for n, h in sorted(files.items())).encode())
    manifest = RunManifest(
        tool="pinniped",
        version=__version__,
        gait_kind=traj.gait_kind,
        config_path=config_path,
        config=resolved,
        files=files,
        run_hash=run_hash,
    )

    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, blob in outputs.items():
        (out / name).write_bytes(blob)
    (out / "manifest.json").write_bytes(_json_bytes(manifest.to_dict()))
    return traj, manifest


def _emit_error(kind: str, err: Exception) -> None:
    record = {"error": kind, "message": str(err)}
    if isinstance(err, ParseError):
        record["line"] = err.line
        record["column"] = err.column
    if isinstance(err, UnreachableError) and err.sample_index is not None:
        record["sample"] = err.sample_index
    sys.stderr.write(json.dumps(record, sort_keys=True) + "\n")


def _load_resolved(config_arg: str) -> dict:
    path = Path(config_arg)
    if not path.is_file():
        raise ValidationError(f"config file not found: {config_arg}")
    return resolve_config_text(path.read_text())


def _output_dir(option: str | None) -> Path:
    if option:
        return Path(option)
    return Path(os.environ.get(ENV_OUTPUT_DIR) or DEFAULT_OUTPUT_DIR)


def _cmd_synth(args) -> int:
    try:
        resolved = _load_resolved(args.config)
    except (ParseError, ValidationError) as err:
        _emit_error(type(err).__name__, err)
        return EXIT_CONFIG_ERROR
    pressure_order = None
    if args.pressure_order:
        pressure_order = tuple(p.strip() for p in args.pressure_order.split(","))
    try:
        traj, manifest = run(
            resolved,
            _output_dir(args.output),
            config_path=args.config,
            pressure_order=pressure_order,
        )
    except (UnreachableError, ValidationError, ValueError) as err:
        _emit_error(type(err).__name__, err)
        return EXIT_SYNTHESIS_ERROR
    print(f"{manifest.gait_kind}: {traj.n_samples} samples -> {_output_dir(args.output)}")
    print(f"run_hash {manifest.run_hash}")
    return EXIT_OK


def _cmd_presets(args) -> int:
    if args.action != "list":
        sys.stderr.write(f"unknown presets action {args.action!r}; try 'list'\n")
        return EXIT_CONFIG_ERROR
    for name in preset_names():
        print(name)
    return EXIT_OK


def _cmd_check(args) -> int:
    try:
        resolved = _load_resolved(args.config)
        realize_config(resolved)
    except (ParseError, ValidationError) as err:
        _emit_error(type(err).__name__, err)
        return EXIT_CONFIG_ERROR
    print(json.dumps(resolved, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    directory = Path(args.trajectory_dir)
    manifest_path = directory / "manifest.json"
    if not manifest_path.is_file():
        _emit_error("ValidationError",
                    ValidationError(f"no manifest.json under {directory}"))
        return EXIT_CONFIG_ERROR
    try:
        manifest = json.loads(manifest_path.read_text())
        resolved = resolve_config_dict(manifest["config"])
    except (json.JSONDecodeError, KeyError, TypeError) as err:
        _emit_error("ParseError", ParseError(f"unreadable manifest: {err}"))
        return EXIT_CONFIG_ERROR
    except ValidationError as err:
        _emit_error("ValidationError", err)
        return EXIT_CONFIG_ERROR

    try:
        spec, robot = realize_config(resolved)
        traj = synthesize(spec, robot)
    except (UnreachableError, ValidationError, ValueError) as err:
        _emit_error(type(err).__name__, err)
        return EXIT_SYNTHESIS_ERROR

    regenerated = {
        "jointspace.csv": jointspace_csv(traj).encode(),
        "taskspace.csv": taskspace_csv(traj).encode(),
        "cog.csv": cog_csv(traj).encode(),
    }
    mismatched = []
    for name, blob in regenerated.items():
        stored = directory / name
        recorded = manifest.get("files", {}).get(name)
        if not stored.is_file() or recorded != _sha256(blob) or _sha256(stored.read_bytes()) != recorded:
            mismatched.append(name)
    if mismatched:
        _emit_error("ValidationError", ValidationError(
            f"stored outputs do not reproduce from the manifest config: {', '.join(mismatched)}"
        ))
        return EXIT_SYNTHESIS_ERROR

    report = _report_dict(traj, robot)
    report["reproduced"] = True
    report["run_hash"] = manifest.get("run_hash")
    print(json.dumps(report, indent=2, sort_keys=True))
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="pinniped-gait",
        description="Gait synthesis and export for a four-limbed soft pinniped robot.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_synth = sub.add_parser("synth", help="synthesize a gait from a config file")
    p_synth.add_argument("config", help="path to a JSON config (or a previous manifest.json)")
    p_synth.add_argument("-o", "--output", help=f"output directory (default ${ENV_OUTPUT_DIR} or ./{DEFAULT_OUTPUT_DIR})")
    p_synth.add_argument("--pressure-order",
                         help="emit jointspace_pressure.csv with this comma-separated limb order, e.g. FR,FL,B,H")
    p_synth.set_defaults(func=_cmd_synth)

    p_presets = sub.add_parser("presets", help="preset catalog operations")
    p_presets.add_argument("action", help="'list' prints every preset name")
    p_presets.set_defaults(func=_cmd_presets)

    p_check = sub.add_parser("check", help="validate a config and print its resolution")
    p_check.add_argument("config")
    p_check.set_defaults(func=_cmd_check)

    p_analyze = sub.add_parser("analyze", help="verify and report on an exported trajectory")
    p_analyze.add_argument("trajectory_dir")
    p_analyze.set_defaults(func=_cmd_analyze)

    args = parser.parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
