"""
Whole-robot anatomy and center of gravity
=========================================

Shows how four limbs mount on the tetrahedral hub, how the floating base
places them in the world, and how bending limbs moves the robot's center
of gravity.

Run from the repository root:

    python3 demos/02_robot_anatomy_and_cog.py

Writes demos/output/robot_cog.png
"""

import math
from pathlib import Path

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pinniped import (
    DEFAULT_ROBOT,
    LIMB_ORDER,
    CurveParams,
    FloatingBasePose,
    LimbId,
    limb_htm,
    limb_pose_in_world,
    mount_transform,
    robot_cog,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# --- the tetrahedral hub -----------------------------------------------------
print("straight-limb axes in the robot frame:")
axes = {}
for limb in LIMB_ORDER:
    axis = mount_transform(limb).rotation[:, 2]
    axes[limb] = axis
    print(f"  {limb.name:>2}: ({axis[0]:+.4f}, {axis[1]:+.4f}, {axis[2]:+.4f})")

want = math.degrees(math.acos(-1.0 / 3.0))
print(f"\npairwise separations (tetrahedral angle is {want:.4f} deg):")
limbs = list(LIMB_ORDER)
for i in range(4):
    for j in range(i + 1, 4):
        angle = math.degrees(math.acos(float(np.clip(axes[limbs[i]] @ axes[limbs[j]], -1, 1))))
        print(f"  {limbs[i].name}-{limbs[j].name}: {angle:.4f} deg")

# --- a floating base carries everything --------------------------------------
base = FloatingBasePose(position=(0.0, 0.0, 0.25), alpha=math.pi / 6)
tip = limb_pose_in_world(base, LimbId.H, CurveParams(0.0, math.pi / 2), 1.0)
print(f"\nhead tip with the body yawed 30 deg at height 0.25 m: "
      f"({tip.position[0]:.4f}, {tip.position[1]:.4f}, {tip.position[2]:.4f})")

# --- center of gravity responds to the head ----------------------------------
straight = {limb: CurveParams(0.0, 0.0) for limb in LIMB_ORDER}
print(f"\nall limbs straight -> CoG {np.round(robot_cog(straight, DEFAULT_ROBOT), 12)}"
      "  (the hub center, by symmetry)")

phis = np.linspace(0.0, math.pi / 2, 40)
cogs = []
for phi in phis:
    curves = dict(straight)
    curves[LimbId.H] = CurveParams(0.0, phi)
    cogs.append(robot_cog(curves, DEFAULT_ROBOT))
cogs = np.array(cogs)
print(f"head bent to pi/2 -> CoG x moves {cogs[-1, 0]:+.5f} m forward")

# --- picture ------------------------------------------------------------------
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.2))

# side view of the robot with the head bent, limbs drawn through their mounts
xi = np.linspace(0.0, 1.0, 40)
curves = dict(straight)
curves[LimbId.H] = CurveParams(0.0, math.pi / 2)
for limb in LIMB_ORDER:
    mount = DEFAULT_ROBOT.mount(limb)
    geom = DEFAULT_ROBOT.geometry(limb)
    pts = np.array([
        mount.apply(limb_htm(curves[limb], x, geom).position) for x in xi
    ])
    ax1.plot(pts[:, 0], pts[:, 2], lw=2, label=limb.name)
cog = robot_cog(curves, DEFAULT_ROBOT)
ax1.plot([cog[0]], [cog[2]], "k*", ms=12, label="CoG")
ax1.plot([0], [0], "ko", ms=5)
ax1.set_xlabel("x [m]")
ax1.set_ylabel("z [m]")
ax1.set_title("side view, head bent to pi/2")
ax1.set_aspect("equal")
ax1.legend(fontsize=8)

ax2.plot(phis, cogs[:, 0], lw=2)
ax2.set_xlabel("head bend phi [rad]")
ax2.set_ylabel("CoG x [m]")
ax2.set_title("CoG shifts forward as the head bends")
ax2.grid(alpha=0.3)

fig.tight_layout()
fig.savefig(OUT / "robot_cog.png", dpi=130)
print(f"\nwrote {OUT / 'robot_cog.png'}")
