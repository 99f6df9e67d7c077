"""
The gait gallery
================

Synthesizes all six built-in gaits at their default parameters and plots,
for each, the taskspace tip paths and the per-limb bend programs.

Run from the repository root:

    python3 demos/03_gait_gallery.py

Writes demos/output/gait_gallery.png
"""

from pathlib import Path

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pinniped import (
    DEFAULT_ROBOT,
    LIMB_ORDER,
    backward_crawl_spec,
    crawl_turn_spec,
    forward_crawl_spec,
    inplace_turn_spec,
    synthesize,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

specs = [
    ("forward crawl", forward_crawl_spec(0.10)),
    ("backward crawl", backward_crawl_spec(0.10)),
    ("turn left", crawl_turn_spec("left", 0.06)),
    ("turn right", crawl_turn_spec("right", 0.06)),
    ("in-place cw", inplace_turn_spec("cw", 0.08)),
    ("in-place ccw", inplace_turn_spec("ccw", 0.08)),
]

fig, axes = plt.subplots(2, 6, figsize=(19, 6.4))

for col, (label, spec) in enumerate(specs):
    traj = synthesize(spec, DEFAULT_ROBOT)
    moving = [l.name for l in LIMB_ORDER
              if np.ptp(traj.phi[:, traj.limb_index(l)]) > 1e-12
              or np.ptp(traj.targets[:, traj.limb_index(l)], axis=0).max() > 1e-12]
    print(f"{label:>14}: {traj.n_samples} samples, period {spec.period:.2f} s, "
          f"time-varying limbs: {', '.join(moving)}")

    # top row: tip paths in each limb's own base frame
    ax = axes[0, col]
    for j, limb in enumerate(LIMB_ORDER):
        x, y = traj.targets[:, j, 0], traj.targets[:, j, 1]
        ax.plot(x, y, lw=1.4, label=limb.name)
        ax.plot([x[0]], [y[0]], "k.", ms=4)
    ax.set_title(label, fontsize=10)
    ax.set_aspect("equal")
    ax.tick_params(labelsize=7)
    if col == 0:
        ax.set_ylabel("tip y [m] (limb frame)", fontsize=8)
        ax.legend(fontsize=7)

    # bottom row: bend angle programs over the cycle
    ax = axes[1, col]
    for j, limb in enumerate(LIMB_ORDER):
        ax.plot(traj.times, traj.phi[:, j], lw=1.4)
    ax.tick_params(labelsize=7)
    ax.set_xlabel("t [s]", fontsize=8)
    if col == 0:
        ax.set_ylabel("bend phi [rad]", fontsize=8)

fig.suptitle("tip paths (top) and bend programs (bottom) for the six gaits")
fig.tight_layout()
fig.savefig(OUT / "gait_gallery.png", dpi=130)
print(f"\nwrote {OUT / 'gait_gallery.png'}")
