"""Whole-robot model: limb mounting, floating base, and center of gravity.

The robot carries four identical soft limbs on a central hub shaped like a
tetrahedral joint: the head limb (H) points along the robot +Z axis and the
three lower limbs (B, FR, FL) point outward and downward, every pair of limb
axes separated by arccos(-1/3) ~= 109.47 degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

import numpy as np

from .limb_kinematics import (
    CurveParams,
    LimbGeometry,
    Pose,
    limb_htm,
    rot_x,
    rot_y,
    rot_z,
    wrap_angle,
)

# Elevation of the lower-limb axes below the hub equator: arcsin(1/3).
# With this value every pair of limb axes is separated by arccos(-1/3).
TETRAHEDRAL_DELTA = 0.3398369094541219


class AllMassesZeroError(ValueError):
    """Raised when a center of gravity is requested for a massless robot."""


class LimbId(Enum):
    H = 1
    B = 2
    FR = 3
    FL = 4


LIMB_ORDER = (LimbId.H, LimbId.B, LimbId.FR, LimbId.FL)

# Azimuth of each lower limb about the robot Z-axis.  B points backward
# (-X side); FR and FL flank the +X direction at -60/+60 degrees.
MOUNT_AZIMUTH = {
    LimbId.B: math.pi,
    LimbId.FR: 5.0 * math.pi / 3.0,
    LimbId.FL: 7.0 * math.pi / 3.0,
}


def mount_transform(limb: LimbId, delta: float = TETRAHEDRAL_DELTA) -> Pose:
    """Fixed rotation from the robot frame to a limb's base frame.

    The head limb base coincides with the robot frame.  A lower limb is tilted
    off +Z by pi/2 + delta about Y and then swung to its azimuth about the
    robot Z-axis.  The azimuth must be applied in the robot frame: spinning
    about the already-tilted limb axis instead would leave all three lower
    limbs on the same ray.
    """
    if limb is LimbId.H:
        return Pose.identity()
    rotation = rot_z(MOUNT_AZIMUTH[limb]) @ rot_y(0.5 * math.pi + delta)
    return Pose(rotation, np.zeros(3))


@dataclass(frozen=True)
class FloatingBasePose:
    """Pose of the robot hub in the world: position plus Z-Y-X Euler angles.

    The rotation is built intrinsically as Rz(alpha) @ Ry(beta) @ Rx(gamma).
    Angles are normalized to (-pi, pi] on construction.
    """

    position: np.ndarray
    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0

    def __post_init__(self):
        position = np.asarray(self.position, dtype=float)
        if position.shape != (3,):
            raise ValueError("position must be a length-3 vector")
        position.flags.writeable = False
        object.__setattr__(self, "position", position)
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, wrap_angle(float(getattr(self, name))))

    def pose(self) -> Pose:
        rotation = rot_z(self.alpha) @ rot_y(self.beta) @ rot_x(self.gamma)
        return Pose(rotation, self.position)


@dataclass(frozen=True)
class RobotConfig:
    """Geometry, masses, and mounting of the whole robot."""

    head: LimbGeometry
    back: LimbGeometry
    front_right: LimbGeometry
    front_left: LimbGeometry
    mount_elevation_delta: float = TETRAHEDRAL_DELTA
    hub_mass: float = 0.0

    def __post_init__(self):
        if not 0.0 < self.mount_elevation_delta < 0.5 * math.pi:
            raise ValueError(
                f"mount_elevation_delta must lie in (0, pi/2), got {self.mount_elevation_delta}"
            )
        if self.hub_mass < 0.0:
            raise ValueError(f"hub_mass must be >= 0, got {self.hub_mass}")

    @classmethod
    def uniform(cls, geom: LimbGeometry, **kwargs) -> "RobotConfig":
        """Robot with four identical limbs."""
        return cls(geom, geom, geom, geom, **kwargs)

    def geometry(self, limb: LimbId) -> LimbGeometry:
        return {
            LimbId.H: self.head,
            LimbId.B: self.back,
            LimbId.FR: self.front_right,
            LimbId.FL: self.front_left,
        }[limb]

    def mount(self, limb: LimbId) -> Pose:
        return mount_transform(limb, self.mount_elevation_delta)


# The physical prototype: 0.24 m limbs of 0.15 kg on a triply-symmetric
# 0.0125 m anchor circle.  The hub hardware is not part of the mass model by
# default; set hub_mass to include it as a point mass at the robot origin.
DEFAULT_LIMB = LimbGeometry(length=0.24, anchor_radius=0.0125, mass=0.15)
DEFAULT_ROBOT = RobotConfig.uniform(DEFAULT_LIMB)


def limb_pose_in_world(
    base: FloatingBasePose,
    limb: LimbId,
    cp: CurveParams,
    xi: float,
    config: RobotConfig = DEFAULT_ROBOT,
) -> Pose:
    """World pose of the backbone point at arc coordinate xi of one limb."""
    local = limb_htm(cp, xi, config.geometry(limb))
    return base.pose() @ config.mount(limb) @ local


def _arc_cog_radial(phi: float) -> float:
    """(phi - sin(phi)) / phi**2, series-expanded near zero.

    The direct form loses all significance below phi ~ 1e-5; the cutoff at
    1e-2 keeps both branches accurate to ~1e-15 absolute.
    """
    if phi < 1e-2:
        return phi / 6.0 - phi**3 / 120.0 + phi**5 / 5040.0
    return (phi - math.sin(phi)) / (phi * phi)


def limb_cog(cp: CurveParams, geom: LimbGeometry) -> np.ndarray:
    """Center of gravity of one uniformly dense limb, in its base frame.

    Closed form of the arc-length average of the backbone curve:

        c = L * [ cos(theta) * (phi - sin(phi)) / phi**2,
                  sin(theta) * (phi - sin(phi)) / phi**2,
                  (1 - cos(phi)) / phi**2 ]

    evaluated so the straight-limb limit (0, 0, L/2) is exact at phi = 0.
    """
    theta, phi = cp.theta, cp.phi
    radial = geom.length * _arc_cog_radial(phi)
    half = 0.5 * phi
    axial = 0.5 * geom.length * float(np.sinc(half / np.pi)) ** 2
    return np.array([radial * math.cos(theta), radial * math.sin(theta), axial])


def robot_cog(
    curves: Mapping[LimbId, CurveParams],
    config: RobotConfig = DEFAULT_ROBOT,
) -> np.ndarray:
    """Mass-weighted center of gravity of the robot, in the robot frame.

    Each limb contributes its arc center of gravity mapped through its mount;
    hub_mass, when nonzero, contributes a point mass at the robot origin.
    """
    total_mass = config.hub_mass
    weighted = np.zeros(3)
    for limb in LIMB_ORDER:
        geom = config.geometry(limb)
        total_mass += geom.mass
        if geom.mass > 0.0:
            weighted += geom.mass * config.mount(limb).apply(limb_cog(curves[limb], geom))
    if total_mass <= 0.0:
        raise AllMassesZeroError("robot has no mass: all limb masses and hub_mass are zero")
    return weighted / total_mass
