"""Gait synthesis: periodic limb programs for crawling and turning.

Every gait is built from the same fundamental block: a limb tip tracing a
circle of stride radius rho about its own base axis, sampled uniformly over
one period and converted to limb configurations by planar inverse
kinematics.  The non-circling limbs follow bend profiles (constant holds or
per-cycle ramps) that shape the robot's weight distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .limb_kinematics import (
    CurveParams,
    JointVector,
    LimbGeometry,
    UnreachableError,
    curve_to_joint,
    inverse_kinematics,
    tip_position,
)
from .robot_model import LIMB_ORDER, LimbId, RobotConfig, robot_cog

CLOCKWISE = "clockwise"
ANTICLOCKWISE = "anticlockwise"

FORWARD_CRAWL = "forward_crawl"
BACKWARD_CRAWL = "backward_crawl"
CRAWL_TURN_LEFT = "crawl_turn_left"
CRAWL_TURN_RIGHT = "crawl_turn_right"
INPLACE_CW = "inplace_cw"
INPLACE_CCW = "inplace_ccw"

GAIT_KINDS = (
    FORWARD_CRAWL,
    BACKWARD_CRAWL,
    CRAWL_TURN_LEFT,
    CRAWL_TURN_RIGHT,
    INPLACE_CW,
    INPLACE_CCW,
)

# Bend profile shapes.
HOLD = "hold"        # constant bend all cycle
RAMP = "ramp"        # linear 0 -> phi per cycle, restarting each cycle
TRIANGLE = "triangle"  # linear up over the contact half-cycle, down over the swing half

MIN_SAMPLES_PER_CYCLE = 8


@dataclass(frozen=True)
class StrideSpec:
    """One limb's circular stride.

    direction follows the sign convention of the fundamental motion: a
    clockwise stride traces x = rho*sin(-2*pi*t/tau + phase),
    y = rho*cos(-2*pi*t/tau + phase); anticlockwise negates the angular rate.
    plane_offset is the requested circle height; the realized tip height is
    dictated by the arc geometry and recorded in the synthesized trajectory.
    """

    stride_radius: float
    period: float
    plane_offset: float = 0.18
    direction: str = CLOCKWISE
    phase_offset: float = 0.0

    def __post_init__(self):
        if self.stride_radius < 0.0:
            raise ValueError(f"stride_radius must be >= 0, got {self.stride_radius}")
        if not self.period > 0.0:
            raise ValueError(f"period must be > 0, got {self.period}")
        if self.plane_offset < 0.0:
            raise ValueError(f"plane_offset must be >= 0, got {self.plane_offset}")
        if self.direction not in (CLOCKWISE, ANTICLOCKWISE):
            raise ValueError(f"direction must be '{CLOCKWISE}' or '{ANTICLOCKWISE}'")
        if not math.isfinite(self.phase_offset):
            raise ValueError("phase_offset must be finite")

    def reversed(self) -> "StrideSpec":
        other = ANTICLOCKWISE if self.direction == CLOCKWISE else CLOCKWISE
        return StrideSpec(self.stride_radius, self.period, self.plane_offset,
                          other, self.phase_offset)


@dataclass(frozen=True)
class BendProfile:
    """Bend program for a non-circling limb: peak arc angle, plane, shape."""

    phi_peak: float
    theta: float = 0.0
    shape: str = HOLD

    def __post_init__(self):
        if self.phi_peak < 0.0:
            raise ValueError(f"phi_peak must be >= 0, got {self.phi_peak}")
        if self.shape not in (HOLD, RAMP, TRIANGLE):
            raise ValueError(f"unknown bend shape {self.shape!r}")


_REQUIRED_STRIDES = {
    FORWARD_CRAWL: (LimbId.FR, LimbId.FL),
    BACKWARD_CRAWL: (LimbId.FR, LimbId.FL),
    CRAWL_TURN_LEFT: (LimbId.FR, LimbId.FL),
    CRAWL_TURN_RIGHT: (LimbId.FR, LimbId.FL),
    INPLACE_CW: (LimbId.H, LimbId.B, LimbId.FR, LimbId.FL),
    INPLACE_CCW: (LimbId.H, LimbId.B, LimbId.FR, LimbId.FL),
}


@dataclass(frozen=True)
class GaitSpec:
    """Complete description of one gait run."""

    gait_kind: str
    strides: Mapping[LimbId, StrideSpec]
    head_bend: BendProfile = BendProfile(0.0)
    back_bend: BendProfile = BendProfile(0.0)
    samples_per_cycle: int = 100
    n_cycles: int = 1

    def __post_init__(self):
        if self.gait_kind not in GAIT_KINDS:
            raise ValueError(f"unknown gait_kind {self.gait_kind!r}")
        if self.samples_per_cycle < MIN_SAMPLES_PER_CYCLE:
            raise ValueError(
                f"samples_per_cycle must be >= {MIN_SAMPLES_PER_CYCLE}, "
                f"got {self.samples_per_cycle}"
            )
        if self.n_cycles < 1:
            raise ValueError(f"n_cycles must be >= 1, got {self.n_cycles}")
        object.__setattr__(self, "strides", dict(self.strides))
        missing = [l.name for l in _REQUIRED_STRIDES[self.gait_kind] if l not in self.strides]
        if missing:
            raise ValueError(f"{self.gait_kind} requires strides for {', '.join(missing)}")
        periods = {s.period for s in self.strides.values()}
        if len(periods) != 1:
            raise ValueError("all limb strides must share one period")

    @property
    def period(self) -> float:
        return next(iter(self.strides.values())).period


@dataclass(frozen=True)
class JointspaceTrajectory:
    """Jointspace image of a taskspace point sequence for one limb.

    realized_z records the tip height L*sin(phi)/phi the arc actually
    attains; the limb has no independent control over it.
    """

    joints: np.ndarray      # (S, 3) actuator length changes
    theta: np.ndarray       # (S,)
    phi: np.ndarray         # (S,)
    realized_z: np.ndarray  # (S,)

    def __post_init__(self):
        for name in ("joints", "theta", "phi", "realized_z"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    def joint_vector(self, k: int) -> JointVector:
        return JointVector(*self.joints[k])


@dataclass(frozen=True)
class GaitTrajectory:
    """Synthesized gait: per-sample limb states plus the robot CoG trace.

    Limb-indexed arrays follow LIMB_ORDER (H, B, FR, FL).  targets holds the
    taskspace (x, y) each sample was generated from; for bend-profile limbs
    it is the realized tip projection.
    """

    gait_kind: str
    times: np.ndarray       # (S,)
    theta: np.ndarray       # (S, 4)
    phi: np.ndarray         # (S, 4)
    joints: np.ndarray      # (S, 4, 3)
    targets: np.ndarray     # (S, 4, 2)
    tips_limb: np.ndarray   # (S, 4, 3) tip in each limb's base frame
    tips_robot: np.ndarray  # (S, 4, 3) tip in the robot frame
    cog: np.ndarray         # (S, 3) robot CoG in the robot frame
    samples_per_cycle: int
    n_cycles: int
    spec: GaitSpec = field(repr=False)

    def __post_init__(self):
        for name in ("times", "theta", "phi", "joints", "targets",
                     "tips_limb", "tips_robot", "cog"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)

    @property
    def n_samples(self) -> int:
        return self.times.shape[0]

    @staticmethod
    def limb_index(limb: LimbId) -> int:
        return LIMB_ORDER.index(limb)

    def curve_at(self, k: int, limb: LimbId) -> CurveParams:
        j = self.limb_index(limb)
        return CurveParams(self.theta[k, j], self.phi[k, j])

    def joint_at(self, k: int, limb: LimbId) -> JointVector:
        j = self.limb_index(limb)
        return JointVector(*self.joints[k, j])


def fundamental_limb_motion(
    stride: StrideSpec,
    samples: int,
    geom: LimbGeometry | None = None,
) -> np.ndarray:
    """Sample one period of the circular stride as taskspace points.

    Returns an (samples, 3) array of (x, y, plane_offset) points at uniformly
    spaced times t in [0, period).  When geom is given, the stride radius is
    checked against the planar reachability bound up front.
    """
    if samples < MIN_SAMPLES_PER_CYCLE:
        raise ValueError(f"samples must be >= {MIN_SAMPLES_PER_CYCLE}, got {samples}")
    if geom is not None:
        # Same bound the per-point inverse kinematics enforces.
        inverse_kinematics((stride.stride_radius, 0.0), geom)
    sign = -1.0 if stride.direction == CLOCKWISE else 1.0
    angles = sign * 2.0 * math.pi * np.arange(samples) / samples + stride.phase_offset
    rho = stride.stride_radius
    return np.column_stack([
        rho * np.sin(angles),
        rho * np.cos(angles),
        np.full(samples, stride.plane_offset),
    ])


def trajectory_to_jointspace(points: np.ndarray, geom: LimbGeometry) -> JointspaceTrajectory:
    """Convert a taskspace point sequence to actuator lengths for one limb.

    Each point goes through planar inverse kinematics and then the actuator
    map.  Unreachable points raise UnreachableError carrying the offending
    sample index.
    """
    points = np.asarray(points, dtype=float)
    if points.ndim != 2 or points.shape[1] not in (2, 3):
        raise ValueError(f"points must have shape (S, 2) or (S, 3), got {points.shape}")
    count = points.shape[0]
    joints = np.empty((count, 3))
    theta = np.empty(count)
    phi = np.empty(count)
    realized_z = np.empty(count)
    for k in range(count):
        try:
            cp = inverse_kinematics(points[k], geom)
        except UnreachableError as err:
            raise UnreachableError(f"sample {k}: {err}", sample_index=k) from None
        joints[k] = curve_to_joint(cp, geom).as_array()
        theta[k] = cp.theta
        phi[k] = cp.phi
        realized_z[k] = tip_position(cp, geom)[2]
    return JointspaceTrajectory(joints, theta, phi, realized_z)


# ---------------------------------------------------------------------------
# Per-limb programs over one cycle: (theta, phi, targets) arrays.

def _stride_program(stride: StrideSpec, samples: int, geom: LimbGeometry):
    points = fundamental_limb_motion(stride, samples, geom)
    theta = np.empty(samples)
    phi = np.empty(samples)
    for k in range(samples):
        cp = inverse_kinematics(points[k], geom)
        theta[k] = cp.theta
        phi[k] = cp.phi
    return theta, phi, points[:, :2].copy()


def _hold_program(profile: BendProfile, samples: int):
    theta = np.full(samples, 0.0 if profile.phi_peak == 0.0 else profile.theta)
    phi = np.full(samples, profile.phi_peak)
    return theta, phi, None


def _ramp_program(profile: BendProfile, samples: int):
    phi = profile.phi_peak * np.arange(samples) / samples
    theta = np.full(samples, profile.theta)
    return theta, phi, None


def _triangle_program(profile: BendProfile, samples: int, anchor: int):
    # Rise over the contact half-cycle, fall over the swing half.  The zero
    # sits on the last swing sample (one before the anchor) so every contact
    # sample carries a strictly positive bend.
    j = (np.arange(samples) - anchor + 1) % samples
    up = 2.0 * j / samples
    phi = profile.phi_peak * np.where(j <= samples // 2, up, 2.0 - up)
    theta = np.full(samples, profile.theta)
    return theta, phi, None


def _contact_start(tip_x: np.ndarray) -> int:
    """First sample of the negative-velocity (ground-contact) half-cycle."""
    velocity = np.roll(tip_x, -1) - tip_x
    contact = velocity < 0.0
    if not contact.any() or contact.all():
        raise ValueError("stride produces no alternating contact phase")
    starts = np.flatnonzero(contact & ~np.roll(contact, 1))
    return int(starts[0])


def _assemble(spec: GaitSpec, config: RobotConfig, programs) -> GaitTrajectory:
    samples = spec.samples_per_cycle
    theta_c = np.empty((samples, 4))
    phi_c = np.empty((samples, 4))
    targets_c = np.empty((samples, 4, 2))
    joints_c = np.empty((samples, 4, 3))
    tips_limb_c = np.empty((samples, 4, 3))
    tips_robot_c = np.empty((samples, 4, 3))
    cog_c = np.empty((samples, 3))

    for j, limb in enumerate(LIMB_ORDER):
        theta, phi, targets = programs[limb]
        geom = config.geometry(limb)
        mount = config.mount(limb)
        for k in range(samples):
            cp = CurveParams(theta[k], phi[k])
            theta_c[k, j] = cp.theta
            phi_c[k, j] = cp.phi
            joints_c[k, j] = curve_to_joint(cp, geom).as_array()
            tip = tip_position(cp, geom)
            tips_limb_c[k, j] = tip
            tips_robot_c[k, j] = mount.apply(tip)
            targets_c[k, j] = targets[k] if targets is not None else tip[:2]

    for k in range(samples):
        curves = {limb: CurveParams(theta_c[k, j], phi_c[k, j])
                  for j, limb in enumerate(LIMB_ORDER)}
        cog_c[k] = robot_cog(curves, config)

    # One cycle is exactly periodic; further cycles are tiled copies.
    reps = spec.n_cycles
    times = np.arange(samples * reps) * (spec.period / samples)
    return GaitTrajectory(
        gait_kind=spec.gait_kind,
        times=times,
        theta=np.tile(theta_c, (reps, 1)),
        phi=np.tile(phi_c, (reps, 1)),
        joints=np.tile(joints_c, (reps, 1, 1)),
        targets=np.tile(targets_c, (reps, 1, 1)),
        tips_limb=np.tile(tips_limb_c, (reps, 1, 1)),
        tips_robot=np.tile(tips_robot_c, (reps, 1, 1)),
        cog=np.tile(cog_c, (reps, 1)),
        samples_per_cycle=samples,
        n_cycles=reps,
        spec=spec,
    )


def _require_kind(spec: GaitSpec, *kinds: str):
    if spec.gait_kind not in kinds:
        raise ValueError(f"spec has gait_kind {spec.gait_kind!r}, expected one of {kinds}")


def _require_moving(spec: GaitSpec, *limbs: LimbId):
    for limb in limbs:
        if spec.strides[limb].stride_radius <= 0.0:
            raise ValueError(f"{spec.gait_kind} needs a positive stride radius on {limb.name}")


def synthesize_forward_crawl(spec: GaitSpec, config: RobotConfig) -> GaitTrajectory:
    """Forward crawl: FR/FL stride circles, head nod, back-limb press.

    The head bend rises and falls once per cycle, synchronized to the FR
    limb's ground-contact phase; the back limb ramps its bend linearly each
    cycle, pressing against the floor.
    """
    _require_kind(spec, FORWARD_CRAWL)
    _require_moving(spec, LimbId.FR, LimbId.FL)
    samples = spec.samples_per_cycle
    programs = {
        LimbId.FR: _stride_program(spec.strides[LimbId.FR], samples, config.geometry(LimbId.FR)),
        LimbId.FL: _stride_program(spec.strides[LimbId.FL], samples, config.geometry(LimbId.FL)),
    }
    # Contact phase comes from the FR tip's travel-axis motion in the robot
    # frame; FL runs the complementary half-cycle.
    theta_fr, phi_fr, _ = programs[LimbId.FR]
    mount_fr = config.mount(LimbId.FR)
    tip_x = np.array([
        mount_fr.apply(tip_position(CurveParams(theta_fr[k], phi_fr[k]),
                                    config.geometry(LimbId.FR)))[0]
        for k in range(samples)
    ])
    anchor = _contact_start(tip_x)
    programs[LimbId.H] = _triangle_program(spec.head_bend, samples, anchor)
    programs[LimbId.B] = _ramp_program(spec.back_bend, samples)
    return _assemble(spec, config, programs)


def synthesize_backward_crawl(spec: GaitSpec, config: RobotConfig) -> GaitTrajectory:
    """Backward crawl: reversed stride circles, head and back limbs held.

    The head keeps a constant bend away from the travel direction and the
    back limb holds a constant upward bend to shed floor contact.
    """
    _require_kind(spec, BACKWARD_CRAWL)
    _require_moving(spec, LimbId.FR, LimbId.FL)
    samples = spec.samples_per_cycle
    programs = {
        LimbId.FR: _stride_program(spec.strides[LimbId.FR], samples, config.geometry(LimbId.FR)),
        LimbId.FL: _stride_program(spec.strides[LimbId.FL], samples, config.geometry(LimbId.FL)),
        LimbId.H: _hold_program(spec.head_bend, samples),
        LimbId.B: _hold_program(spec.back_bend, samples),
    }
    return _assemble(spec, config, programs)


def synthesize_crawl_turn(spec: GaitSpec, config: RobotConfig) -> GaitTrajectory:
    """Crawl-and-turn: the backward-crawl program plus a circling back limb.

    A zero back-limb stride radius (or no back stride at all) degenerates to
    the plain backward crawl with the back limb held at its constant bend.
    """
    _require_kind(spec, CRAWL_TURN_LEFT, CRAWL_TURN_RIGHT)
    _require_moving(spec, LimbId.FR, LimbId.FL)
    samples = spec.samples_per_cycle
    programs = {
        LimbId.FR: _stride_program(spec.strides[LimbId.FR], samples, config.geometry(LimbId.FR)),
        LimbId.FL: _stride_program(spec.strides[LimbId.FL], samples, config.geometry(LimbId.FL)),
        LimbId.H: _hold_program(spec.head_bend, samples),
    }
    b_stride = spec.strides.get(LimbId.B)
    if b_stride is not None and b_stride.stride_radius > 0.0:
        programs[LimbId.B] = _stride_program(b_stride, samples, config.geometry(LimbId.B))
    else:
        programs[LimbId.B] = _hold_program(spec.back_bend, samples)
    return _assemble(spec, config, programs)


def synthesize_inplace_turn(spec: GaitSpec, config: RobotConfig) -> GaitTrajectory:
    """In-place turn: all four limbs stride in the same rotational sense."""
    _require_kind(spec, INPLACE_CW, INPLACE_CCW)
    _require_moving(spec, LimbId.H, LimbId.B, LimbId.FR, LimbId.FL)
    samples = spec.samples_per_cycle
    programs = {
        limb: _stride_program(spec.strides[limb], samples, config.geometry(limb))
        for limb in LIMB_ORDER
    }
    return _assemble(spec, config, programs)


_SYNTHESIZERS = {
    FORWARD_CRAWL: synthesize_forward_crawl,
    BACKWARD_CRAWL: synthesize_backward_crawl,
    CRAWL_TURN_LEFT: synthesize_crawl_turn,
    CRAWL_TURN_RIGHT: synthesize_crawl_turn,
    INPLACE_CW: synthesize_inplace_turn,
    INPLACE_CCW: synthesize_inplace_turn,
}


def synthesize(spec: GaitSpec, config: RobotConfig) -> GaitTrajectory:
    """Dispatch to the synthesizer for spec.gait_kind."""
    return _SYNTHESIZERS[spec.gait_kind](spec, config)


# ---------------------------------------------------------------------------
# Spec builders with the gait programs' canonical direction assignments.

def forward_crawl_spec(
    stride_radius: float,
    frequency: float = 1.0,
    *,
    samples_per_cycle: int = 100,
    n_cycles: int = 1,
    plane_offset: float = 0.18,
    phase_offset: float = 0.0,
    head_phi_end: float = 0.5 * math.pi,
    back_phi_max: float = 0.25 * math.pi,
) -> GaitSpec:
    """Forward crawl: FR anticlockwise, FL clockwise, zero phase offset."""
    period = 1.0 / frequency
    return GaitSpec(
        gait_kind=FORWARD_CRAWL,
        strides={
            LimbId.FR: StrideSpec(stride_radius, period, plane_offset, ANTICLOCKWISE, phase_offset),
            LimbId.FL: StrideSpec(stride_radius, period, plane_offset, CLOCKWISE, phase_offset),
        },
        # Head nods toward +X (travel); back limb presses into the floor.
        head_bend=BendProfile(head_phi_end, 0.0, TRIANGLE),
        back_bend=BendProfile(back_phi_max, 0.0, RAMP),
        samples_per_cycle=samples_per_cycle,
        n_cycles=n_cycles,
    )


def backward_crawl_spec(
    stride_radius: float,
    frequency: float = 1.0,
    *,
    samples_per_cycle: int = 100,
    n_cycles: int = 1,
    plane_offset: float = 0.18,
    phase_offset: float = 0.0,
    head_phi: float = 0.5 * math.pi,
    back_phi: float = 0.5 * math.pi,
) -> GaitSpec:
    """Backward crawl: stride directions reversed, head held toward -X."""
    period = 1.0 / frequency
    return GaitSpec(
        gait_kind=BACKWARD_CRAWL,
        strides={
            LimbId.FR: StrideSpec(stride_radius, period, plane_offset, CLOCKWISE, phase_offset),
            LimbId.FL: StrideSpec(stride_radius, period, plane_offset, ANTICLOCKWISE, phase_offset),
        },
        # Head away from travel; back limb bent up toward robot +Z.
        head_bend=BendProfile(head_phi, math.pi, HOLD),
        back_bend=BendProfile(back_phi, math.pi, HOLD),
        samples_per_cycle=samples_per_cycle,
        n_cycles=n_cycles,
    )


def crawl_turn_spec(
    side: str,
    b_stride_radius: float,
    stride_radius: float = 0.10,
    frequency: float = 1.0,
    *,
    samples_per_cycle: int = 100,
    n_cycles: int = 1,
    plane_offset: float = 0.18,
    phase_offset: float = 0.0,
    head_phi: float = 0.5 * math.pi,
    back_phi: float = 0.5 * math.pi,
) -> GaitSpec:
    """Crawl-and-turn toward `side` ('left' or 'right').

    The back limb circles clockwise for a left turn and anticlockwise for a
    right turn, with its own stride radius; FR/FL keep the backward-crawl
    program.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    period = 1.0 / frequency
    b_direction = CLOCKWISE if side == "left" else ANTICLOCKWISE
    return GaitSpec(
        gait_kind=CRAWL_TURN_LEFT if side == "left" else CRAWL_TURN_RIGHT,
        strides={
            LimbId.FR: StrideSpec(stride_radius, period, plane_offset, CLOCKWISE, phase_offset),
            LimbId.FL: StrideSpec(stride_radius, period, plane_offset, ANTICLOCKWISE, phase_offset),
            LimbId.B: StrideSpec(b_stride_radius, period, plane_offset, b_direction, phase_offset),
        },
        head_bend=BendProfile(head_phi, math.pi, HOLD),
        back_bend=BendProfile(back_phi, math.pi, HOLD),
        samples_per_cycle=samples_per_cycle,
        n_cycles=n_cycles,
    )


def inplace_turn_spec(
    sense: str,
    stride_radius: float,
    frequency: float = 1.0,
    *,
    samples_per_cycle: int = 100,
    n_cycles: int = 1,
    plane_offset: float = 0.18,
    phase_offset: float = 0.0,
) -> GaitSpec:
    """In-place turn: every limb (head included) strides in `sense`."""
    if sense not in ("cw", "ccw"):
        raise ValueError(f"sense must be 'cw' or 'ccw', got {sense!r}")
    period = 1.0 / frequency
    direction = CLOCKWISE if sense == "cw" else ANTICLOCKWISE
    stride = StrideSpec(stride_radius, period, plane_offset, direction, phase_offset)
    return GaitSpec(
        gait_kind=INPLACE_CW if sense == "cw" else INPLACE_CCW,
        strides={limb: stride for limb in LIMB_ORDER},
        samples_per_cycle=samples_per_cycle,
        n_cycles=n_cycles,
    )
