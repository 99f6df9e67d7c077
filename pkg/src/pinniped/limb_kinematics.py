"""Single-limb kinematics for a pneumatically driven continuum limb.

A limb bends as a circular arc of constant curvature.  Its configuration is
the pair (theta, phi): theta orients the bending plane about the limb's base
Z-axis, phi is the total arc angle swept by the backbone.  Three actuator
chambers are anchored at 120-degree spacing on a circle of radius ``r`` around
the backbone; driving them changes their effective lengths l1, l2, l3 with
l1 + l2 + l3 = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Arc angle at which the radial tip reach (1 - cos(phi))/phi peaks; root of
# tan(phi/2) = phi.  Beyond it the tip curls back toward the base axis, so the
# planar inverse problem stops being single-valued.
PHI_REACH_LIMIT = 2.3311223704144226

# Peak of (1 - cos(phi))/phi, i.e. the largest reachable ratio s/L where
# s = sqrt(x^2 + y^2) is the radial tip distance.
REACH_RATIO_MAX = 0.7246113537767085

# Radial targets below this fraction of L are treated as a straight limb.
DEGENERATE_RATIO = 5e-10

# Absolute tolerance on phi for the inverse-kinematics bisection.
IK_PHI_TOL = 1e-12

# Hard sanity cap on the arc angle accepted by the configuration type.  The
# nominal workspace limit (default pi) is enforced by the workspace checks,
# not here: inverse kinematics legitimately returns phi up to PHI_REACH_LIMIT.
PHI_CAP = 2.0 * math.pi

ZERO_SUM_TOL = 1e-12


class UnreachableError(ValueError):
    """Raised when a taskspace target lies outside the reachable shell."""

    def __init__(self, message: str, sample_index: int | None = None):
        super().__init__(message)
        self.sample_index = sample_index


def wrap_angle(angle: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    wrapped = math.remainder(angle, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


def _sinc(x: float) -> float:
    """sin(x)/x, continuous through x = 0."""
    return float(np.sinc(x / np.pi))


def _versinc(x: float) -> float:
    """(1 - cos(x))/x, continuous through x = 0.

    Evaluated as sin(x/2) * sinc(x/2) to avoid the cancellation in
    1 - cos(x) for small x.
    """
    return math.sin(0.5 * x) * _sinc(0.5 * x)


def rot_x(angle: float) -> np.ndarray:
    """Rotation matrix about the X-axis."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])


def rot_y(angle: float) -> np.ndarray:
    """Rotation matrix about the Y-axis."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def rot_z(angle: float) -> np.ndarray:
    """Rotation matrix about the Z-axis."""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


@dataclass(frozen=True)
class LimbGeometry:
    """Fixed geometry of one limb.

    Attributes
    ----------
    length : float
        Backbone arc length L in meters.
    anchor_radius : float
        Radius r of the circle on which the three actuators are anchored.
    mass : float
        Limb mass in kilograms, assumed uniformly distributed along the arc.
    """

    length: float
    anchor_radius: float
    mass: float = 0.0

    def __post_init__(self):
        if not self.length > 0.0:
            raise ValueError(f"length must be > 0, got {self.length}")
        if not 0.0 < self.anchor_radius < self.length:
            raise ValueError(
                f"anchor_radius must lie in (0, length), got {self.anchor_radius}"
            )
        if self.mass < 0.0:
            raise ValueError(f"mass must be >= 0, got {self.mass}")


@dataclass(frozen=True)
class CurveParams:
    """Configuration of one limb: bending-plane angle and arc angle.

    theta is normalized to (-pi, pi] on construction; for a straight limb
    (phi = 0) theta is conventionally 0.
    """

    theta: float
    phi: float

    def __post_init__(self):
        if not math.isfinite(self.theta) or not math.isfinite(self.phi):
            raise ValueError("theta and phi must be finite")
        if self.phi < 0.0:
            raise ValueError(f"phi must be >= 0, got {self.phi}")
        if self.phi > PHI_CAP:
            raise ValueError(f"phi exceeds the sanity cap {PHI_CAP}, got {self.phi}")
        object.__setattr__(self, "theta", 0.0 if self.phi == 0.0 else wrap_angle(self.theta))


@dataclass(frozen=True)
class JointVector:
    """Actuator length changes (l1, l2, l3); they must sum to zero."""

    l1: float
    l2: float
    l3: float

    def __post_init__(self):
        residual = self.l1 + self.l2 + self.l3
        if abs(residual) > ZERO_SUM_TOL:
            raise ValueError(
                f"joint lengths must sum to zero within {ZERO_SUM_TOL}, residual {residual}"
            )

    def as_array(self) -> np.ndarray:
        return np.array([self.l1, self.l2, self.l3])


@dataclass(frozen=True)
class Pose:
    """Rigid pose: 3x3 rotation plus translation, validated on construction."""

    rotation: np.ndarray
    position: np.ndarray

    def __post_init__(self):
        rotation = np.asarray(self.rotation, dtype=float)
        position = np.asarray(self.position, dtype=float)
        if rotation.shape != (3, 3) or position.shape != (3,):
            raise ValueError("rotation must be 3x3 and position length 3")
        # Orthonormality and orientation preserved to within 1e-9 per entry.
        if not np.allclose(rotation @ rotation.T, np.eye(3), atol=1e-9):
            raise ValueError("rotation is not orthonormal within 1e-9")
        if abs(np.linalg.det(rotation) - 1.0) > 1e-9:
            raise ValueError("rotation determinant differs from +1 beyond 1e-9")
        rotation.flags.writeable = False
        position.flags.writeable = False
        object.__setattr__(self, "rotation", rotation)
        object.__setattr__(self, "position", position)

    @classmethod
    def identity(cls) -> "Pose":
        return cls(np.eye(3), np.zeros(3))

    def matrix(self) -> np.ndarray:
        """Homogeneous 4x4 transform."""
        out = np.eye(4)
        out[:3, :3] = self.rotation
        out[:3, 3] = self.position
        return out

    def compose(self, other: "Pose") -> "Pose":
        """self applied after other: (self @ other)(p) = self(other(p))."""
        return Pose(self.rotation @ other.rotation,
                    self.rotation @ other.position + self.position)

    def __matmul__(self, other: "Pose") -> "Pose":
        return self.compose(other)

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Transform one point (3,) or a batch (..., 3)."""
        points = np.asarray(points, dtype=float)
        return points @ self.rotation.T + self.position


def curve_to_joint(cp: CurveParams, geom: LimbGeometry) -> JointVector:
    """Map a limb configuration to the three actuator length changes.

    Actuator i sits at azimuth 2*pi/3*(i-1) around the backbone, so its
    length change is -r * phi * cos(2*pi/3*(i-1) - theta).  The three values
    sum to zero by construction.
    """
    r, theta, phi = geom.anchor_radius, cp.theta, cp.phi
    lengths = [-r * phi * math.cos(2.0 * math.pi / 3.0 * i - theta) for i in range(3)]
    return JointVector(*lengths)


def joint_to_curve(jv, geom: LimbGeometry) -> CurveParams:
    """Recover the limb configuration from actuator length changes.

    Accepts a JointVector or any length-3 sequence; raw sequences are
    validated against the zero-sum constraint.  For an all-zero input the
    limb is straight and theta is 0 by convention.
    """
    if not isinstance(jv, JointVector):
        jv = JointVector(*(float(v) for v in jv))
    l1, l2, l3 = jv.l1, jv.l2, jv.l3
    # Sum over cyclic successor pairs (1,2), (2,3), (3,1).
    quad = l1 * l1 + l2 * l2 + l3 * l3 - l1 * l2 - l2 * l3 - l3 * l1
    phi = 2.0 / (3.0 * geom.anchor_radius) * math.sqrt(max(quad, 0.0))
    if phi == 0.0:
        return CurveParams(0.0, 0.0)
    theta = math.atan2(math.sqrt(3.0) * (l3 - l2), l2 + l3 - 2.0 * l1)
    return CurveParams(theta, phi)


def limb_htm(cp: CurveParams, xi: float, geom: LimbGeometry) -> Pose:
    """Pose of the backbone point at normalized arc coordinate xi in [0, 1].

    The frame is reached by rotating into the bending plane, sweeping an arc
    of angle xi*phi about the displaced bend axis, and rotating back:
    R = Rz(theta) @ Ry(xi*phi) @ Rz(-theta).  The translation is evaluated in
    a form that stays finite and smooth through the straight-limb limit
    phi -> 0, where the pose tends to (identity, (0, 0, xi*L)).
    """
    if not 0.0 <= xi <= 1.0:
        raise ValueError(f"xi must lie in [0, 1], got {xi}")
    theta, phi = cp.theta, cp.phi
    psi = xi * phi
    rotation = rot_z(theta) @ rot_y(psi) @ rot_z(-theta)
    radial = geom.length * xi * _versinc(psi)
    position = np.array([
        radial * math.cos(theta),
        radial * math.sin(theta),
        geom.length * xi * _sinc(psi),
    ])
    return Pose(rotation, position)


def tip_position(cp: CurveParams, geom: LimbGeometry) -> np.ndarray:
    """Tip position of the limb in its base frame."""
    theta, phi = cp.theta, cp.phi
    radial = geom.length * _versinc(phi)
    return np.array([
        radial * math.cos(theta),
        radial * math.sin(theta),
        geom.length * _sinc(phi),
    ])


def inverse_kinematics(target, geom: LimbGeometry) -> CurveParams:
    """Solve for the configuration whose tip projects onto taskspace (x, y).

    The limb has two degrees of freedom, so only the planar components are
    prescribed: theta = atan2(y, x) and phi is the unique root of
    (1 - cos(phi))/phi = s/L on [0, PHI_REACH_LIMIT], s = sqrt(x^2 + y^2).
    The root is found by bracketed bisection with absolute tolerance
    IK_PHI_TOL; the resulting tip height L*sin(phi)/phi is whatever the arc
    geometry yields.

    Parameters
    ----------
    target : array-like
        (x, y) or (x, y, z); a trailing z component is ignored.
    geom : LimbGeometry

    Raises
    ------
    UnreachableError
        If s/L exceeds REACH_RATIO_MAX.
    """
    target = np.asarray(target, dtype=float)
    if target.shape not in ((2,), (3,)):
        raise ValueError(f"target must have shape (2,) or (3,), got {target.shape}")
    x, y = float(target[0]), float(target[1])
    s = math.hypot(x, y)
    ratio = s / geom.length
    if ratio > REACH_RATIO_MAX:
        raise UnreachableError(
            f"target radius {s:.6g} m gives s/L = {ratio:.6g}, beyond the "
            f"reachable bound {REACH_RATIO_MAX:.6g}"
        )
    if ratio < DEGENERATE_RATIO:
        return CurveParams(0.0, 0.0)
    theta = math.atan2(y, x)
    lo, hi = 1e-9, PHI_REACH_LIMIT
    while hi - lo > IK_PHI_TOL:
        mid = 0.5 * (lo + hi)
        if _versinc(mid) < ratio:
            lo = mid
        else:
            hi = mid
    return CurveParams(theta, 0.5 * (lo + hi))
