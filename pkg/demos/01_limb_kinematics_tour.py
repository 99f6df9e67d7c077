"""
One soft limb, end to end
=========================

A tour of the single-limb kinematics: the actuator map, forward kinematics
along the backbone, planar inverse kinematics, and the reachability bound.

Run from the repository root:

    python3 demos/01_limb_kinematics_tour.py

Writes demos/output/limb_kinematics.png
"""

import math
from pathlib import Path

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pinniped import (
    PHI_REACH_LIMIT,
    REACH_RATIO_MAX,
    CurveParams,
    LimbGeometry,
    UnreachableError,
    curve_to_joint,
    inverse_kinematics,
    limb_htm,
    tip_position,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

geom = LimbGeometry(length=0.24, anchor_radius=0.0125, mass=0.15)
print(f"limb: L = {geom.length} m, anchor radius = {geom.anchor_radius} m")

# --- the actuator map -------------------------------------------------------
# A bend of phi radians in the plane theta shortens one pneumatic actuator
# and lengthens the other two; the three length changes always sum to zero.
cp = CurveParams(theta=0.0, phi=math.pi / 2)
jv = curve_to_joint(cp, geom)
print(f"\nbend (theta=0, phi=pi/2) -> l1={jv.l1:+.6f}  l2={jv.l2:+.6f}  "
      f"l3={jv.l3:+.6f}  (sum {jv.l1 + jv.l2 + jv.l3:+.1e})")

# --- forward kinematics along the backbone ----------------------------------
tip = tip_position(cp, geom)
print(f"tip of that bend: ({tip[0]:.6f}, {tip[1]:.6f}, {tip[2]:.6f}) m")

# --- inverse kinematics and the reach bound ---------------------------------
target = (0.10, 0.0)
sol = inverse_kinematics(target, geom)
print(f"\nIK to planar target {target}: theta={sol.theta:.6f}, phi={sol.phi:.6f}")
replay = tip_position(sol, geom)
print(f"  replayed tip xy: ({replay[0]:.6f}, {replay[1]:.6f})")

print(f"\nplanar reach tops out at s/L = {REACH_RATIO_MAX:.6f} "
      f"(bend angle {PHI_REACH_LIMIT:.6f} rad)")
try:
    inverse_kinematics((0.174, 0.0), geom)
except UnreachableError as err:
    print(f"  asking for 0.174 m: {err}")

# --- picture: backbones and the planar workspace ----------------------------
fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.2))

xi = np.linspace(0.0, 1.0, 60)
for phi in (1e-9, 0.5, 1.0, math.pi / 2, 2.0, PHI_REACH_LIMIT):
    pts = np.array([limb_htm(CurveParams(0.0, phi), x, geom).position for x in xi])
    ax1.plot(pts[:, 0], pts[:, 2], label=f"phi = {phi:.2f}")
ax1.set_xlabel("x [m]")
ax1.set_ylabel("z [m]")
ax1.set_title("backbone shapes, bend plane theta = 0")
ax1.set_aspect("equal")
ax1.legend(fontsize=8)

# tip locus over the full bend range: the planar workspace boundary
phis = np.linspace(1e-6, 2.0 * math.pi, 400)
tips = np.array([tip_position(CurveParams(0.0, p), geom) for p in phis])
ax2.plot(tips[:, 0], tips[:, 2], lw=1.5)
s_max = REACH_RATIO_MAX * geom.length
ax2.axvline(s_max, color="crimson", ls="--", lw=1,
            label=f"planar reach s = {s_max:.4f} m")
ax2.set_xlabel("planar distance x [m]")
ax2.set_ylabel("z [m]")
ax2.set_title("tip locus as phi sweeps 0 .. 2 pi")
ax2.legend(fontsize=8)

fig.tight_layout()
fig.savefig(OUT / "limb_kinematics.png", dpi=130)
print(f"\nwrote {OUT / 'limb_kinematics.png'}")
