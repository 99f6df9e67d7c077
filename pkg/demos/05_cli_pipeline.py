"""
The export pipeline, scripted
=============================

Drives the pinniped-gait command in process: validate a config, synthesize
and export a trajectory, prove the run is reproducible, and verify the
export afterward.  Everything the command writes lands under
demos/output/cli_run/.

Run from the repository root:

    python3 demos/05_cli_pipeline.py
"""

import json
from pathlib import Path

from pinniped.cli import main

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

config_path = OUT / "demo_config.json"
config_path.write_text(json.dumps({
    "preset": "fwd-r10-f100",
    "cycles": 2,
    "head_phi_end_deg": 90,
}, indent=2) + "\n")
print(f"config: {config_path}")

# 1. check: parse, validate, and print the fully resolved parameter set
print("\n$ pinniped-gait check", config_path.name)
assert main(["check", str(config_path)]) == 0

# 2. synth twice: the exports are byte-identical
run_a = OUT / "cli_run"
run_b = OUT / "cli_run_again"
print(f"\n$ pinniped-gait synth {config_path.name} -o {run_a.name}")
assert main(["synth", str(config_path), "-o", str(run_a)]) == 0
assert main(["synth", str(config_path), "-o", str(run_b)]) == 0

same = all(
    (run_a / name).read_bytes() == (run_b / name).read_bytes()
    for name in ("jointspace.csv", "taskspace.csv", "cog.csv", "report.json")
)
print(f"\nrepeated run byte-identical: {same}")

manifest = json.loads((run_a / "manifest.json").read_text())
print(f"run_hash: {manifest['run_hash']}")
print("exported files:")
for name, digest in manifest["files"].items():
    print(f"  {name:<24} sha256 {digest[:16]}...")

# 3. analyze: re-synthesize from the manifest config and verify the CSVs
print(f"\n$ pinniped-gait analyze {run_a.name}")
assert main(["analyze", str(run_a)]) == 0

# 4. a few rows of the wide jointspace export
print("\njointspace.csv, first 3 rows:")
for line in (run_a / "jointspace.csv").read_text().splitlines()[:3]:
    print(f"  {line[:96]}{'...' if len(line) > 96 else ''}")
