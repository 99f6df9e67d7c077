"""Unit tests for the single-limb constant-curvature kinematics."""

import math

import numpy as np
import pytest

from pinniped.limb_kinematics import (
    DEGENERATE_RATIO,
    PHI_REACH_LIMIT,
    REACH_RATIO_MAX,
    CurveParams,
    JointVector,
    LimbGeometry,
    Pose,
    UnreachableError,
    curve_to_joint,
    inverse_kinematics,
    joint_to_curve,
    limb_htm,
    rot_z,
    tip_position,
    wrap_angle,
)

GEOM = LimbGeometry(length=0.24, anchor_radius=0.0125, mass=0.15)

# Frozen reference values, computed independently at high precision.
BEND_L1 = -0.019634954084936208
BEND_L23 = 0.009817477042468104
TIP_XZ = 0.15278874536821952


def test_joint_map_quarter_turn_bend():
    jv = curve_to_joint(CurveParams(theta=0.0, phi=math.pi / 2), GEOM)
    assert math.isclose(jv.l1, BEND_L1, abs_tol=1e-15)
    assert math.isclose(jv.l2, BEND_L23, abs_tol=1e-15)
    assert math.isclose(jv.l3, BEND_L23, abs_tol=1e-15)
    assert abs(jv.l1 + jv.l2 + jv.l3) < 1e-12


def test_joint_map_straight_limb_is_all_zero():
    jv = curve_to_joint(CurveParams(theta=0.0, phi=0.0), GEOM)
    assert jv.l1 == 0.0 and jv.l2 == 0.0 and jv.l3 == 0.0


def test_joint_map_bend_plane_shift_permutes_actuators():
    # Rotating the bend plane by one actuator pitch relabels the actuators.
    base = curve_to_joint(CurveParams(theta=0.3, phi=1.0), GEOM)
    shifted = curve_to_joint(
        CurveParams(theta=0.3 + 2.0 * math.pi / 3.0, phi=1.0), GEOM
    )
    assert math.isclose(shifted.l2, base.l1, abs_tol=1e-15)
    assert math.isclose(shifted.l3, base.l2, abs_tol=1e-15)
    assert math.isclose(shifted.l1, base.l3, abs_tol=1e-15)


def test_joint_vector_rejects_nonzero_sum():
    with pytest.raises(ValueError):
        JointVector(1e-3, 0.0, 0.0)
    with pytest.raises(ValueError):
        joint_to_curve((1e-3, 0.0, 0.0), GEOM)


def test_curve_params_validation():
    with pytest.raises(ValueError):
        CurveParams(theta=0.0, phi=-0.1)
    with pytest.raises(ValueError):
        CurveParams(theta=0.0, phi=2.0 * math.pi + 0.1)
    # Straight limb has no bend plane: theta is canonicalised to zero.
    assert CurveParams(theta=1.2, phi=0.0).theta == 0.0
    # Bend plane angle is stored wrapped to (-pi, pi].
    assert math.isclose(
        CurveParams(theta=3.0 * math.pi, phi=0.5).theta, math.pi, abs_tol=1e-15
    )


def test_limb_geometry_validation():
    with pytest.raises(ValueError):
        LimbGeometry(length=-0.1, anchor_radius=0.0125, mass=0.15)
    with pytest.raises(ValueError):
        LimbGeometry(length=0.24, anchor_radius=0.0, mass=0.15)
    with pytest.raises(ValueError):
        LimbGeometry(length=0.24, anchor_radius=0.25, mass=0.15)
    with pytest.raises(ValueError):
        LimbGeometry(length=0.24, anchor_radius=0.0125, mass=-1.0)


def test_joint_curve_roundtrip_studies():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(10_000):
        theta = rng.uniform(-math.pi, math.pi)
        phi = rng.uniform(1e-3, math.pi)
        cp = CurveParams(theta=theta, phi=phi)
        back = joint_to_curve(curve_to_joint(cp, GEOM), GEOM)
        worst = max(
            worst,
            abs(wrap_angle(back.theta - cp.theta)),
            abs(back.phi - cp.phi),
        )
    assert worst < 1e-9


def test_joint_to_curve_accepts_raw_sequence():
    cp = joint_to_curve((BEND_L1, BEND_L23, BEND_L23), GEOM)
    assert math.isclose(cp.theta, 0.0, abs_tol=1e-12)
    assert math.isclose(cp.phi, math.pi / 2, rel_tol=1e-12)


def test_tip_position_quarter_turn():
    tip = tip_position(CurveParams(theta=0.0, phi=math.pi / 2), GEOM)
    assert math.isclose(tip[0], TIP_XZ, abs_tol=1e-14)
    assert math.isclose(tip[1], 0.0, abs_tol=1e-15)
    assert math.isclose(tip[2], TIP_XZ, abs_tol=1e-14)


def test_tip_position_straight_limb():
    tip = tip_position(CurveParams(theta=0.0, phi=0.0), GEOM)
    assert np.allclose(tip, [0.0, 0.0, GEOM.length], atol=0.0)


def test_tip_equivariance_under_bend_plane_rotation():
    # Rotating the bend plane rotates the tip about the limb Z axis.
    rng = np.random.default_rng(11)
    for _ in range(500):
        theta = rng.uniform(-math.pi, math.pi)
        phi = rng.uniform(0.0, 2.0)
        delta = rng.uniform(-math.pi, math.pi)
        tip = tip_position(CurveParams(theta=theta, phi=phi), GEOM)
        shifted = tip_position(
            CurveParams(theta=wrap_angle(theta + delta), phi=phi), GEOM
        )
        assert np.max(np.abs(rot_z(delta) @ tip - shifted)) < 1e-10


def test_htm_endpoints():
    cp = CurveParams(theta=0.7, phi=1.3)
    base = limb_htm(cp, 0.0, GEOM)
    assert np.allclose(base.rotation, np.eye(3), atol=1e-15)
    assert np.allclose(base.position, 0.0, atol=1e-15)
    tip_pose = limb_htm(cp, 1.0, GEOM)
    assert np.max(np.abs(tip_pose.position - tip_position(cp, GEOM))) < 1e-12


def test_htm_rotation_is_orthonormal():
    rng = np.random.default_rng(13)
    for _ in range(1000):
        cp = CurveParams(theta=rng.uniform(-math.pi, math.pi), phi=rng.uniform(0.0, 2.3))
        xi = rng.uniform(0.0, 1.0)
        rot = limb_htm(cp, xi, GEOM).rotation
        assert np.max(np.abs(rot @ rot.T - np.eye(3))) < 1e-9
        assert math.isclose(float(np.linalg.det(rot)), 1.0, abs_tol=1e-9)


def test_htm_straight_limb_any_point():
    pose = limb_htm(CurveParams(theta=0.0, phi=0.0), 0.4, GEOM)
    assert np.allclose(pose.rotation, np.eye(3), atol=0.0)
    assert np.allclose(pose.position, [0.0, 0.0, 0.4 * GEOM.length], atol=0.0)


def test_htm_continuous_through_small_bends():
    # No step anywhere as the bend angle crosses tiny magnitudes.
    cp_hi = CurveParams(theta=0.9, phi=1e-6 + 1e-9)
    cp_lo = CurveParams(theta=0.9, phi=1e-6 - 1e-9)
    hi = limb_htm(cp_hi, 1.0, GEOM)
    lo = limb_htm(cp_lo, 1.0, GEOM)
    assert np.max(np.abs(hi.position - lo.position)) < 1e-8
    assert np.max(np.abs(hi.rotation - lo.rotation)) < 1e-8
    # And the limit value itself is hit exactly.
    tiny = tip_position(CurveParams(theta=0.0, phi=1e-12), GEOM)
    assert np.max(np.abs(tiny - np.array([0.0, 0.0, GEOM.length]))) < 1e-10


def test_htm_rejects_xi_outside_unit_interval():
    cp = CurveParams(theta=0.0, phi=0.5)
    with pytest.raises(ValueError):
        limb_htm(cp, -0.01, GEOM)
    with pytest.raises(ValueError):
        limb_htm(cp, 1.01, GEOM)


def test_pose_validates_rotation():
    with pytest.raises(ValueError):
        Pose(rotation=np.eye(3) * 2.0, position=np.zeros(3))
    bad = np.eye(3)
    bad = bad[:, ::-1].copy()  # det = -1
    with pytest.raises(ValueError):
        Pose(rotation=bad, position=np.zeros(3))


def test_pose_compose_matches_matrix_product():
    rng = np.random.default_rng(3)
    a = limb_htm(CurveParams(0.3, 1.1), 0.8, GEOM)
    b = limb_htm(CurveParams(-1.2, 0.7), 0.5, GEOM)
    ab = a @ b
    assert np.allclose(ab.matrix(), a.matrix() @ b.matrix(), atol=1e-14)
    v = rng.normal(size=3)
    assert np.allclose(ab.apply(v), a.apply(b.apply(v)), atol=1e-14)


def test_ik_planar_circle_point():
    cp = inverse_kinematics((0.10, 0.0), GEOM)
    assert math.isclose(cp.theta, 0.0, abs_tol=1e-12)
    assert math.isclose(cp.phi, 0.8906803851441094, abs_tol=1e-10)


def test_ik_roundtrip_through_forward_map():
    rng = np.random.default_rng(19)
    worst = 0.0
    for _ in range(10_000):
        cp = CurveParams(
            theta=rng.uniform(-math.pi, math.pi), phi=rng.uniform(0.05, 2.0)
        )
        tip = tip_position(cp, GEOM)
        back = inverse_kinematics(tip[:2], GEOM)
        worst = max(
            worst, abs(wrap_angle(back.theta - cp.theta)), abs(back.phi - cp.phi)
        )
    assert worst < 1e-7


def test_ik_accepts_three_vector_and_ignores_height():
    flat = inverse_kinematics((0.08, -0.03), GEOM)
    tall = inverse_kinematics((0.08, -0.03, 0.5), GEOM)
    assert flat == tall


def test_ik_degenerate_target_is_straight():
    assert inverse_kinematics((0.0, 0.0), GEOM) == CurveParams(0.0, 0.0)
    eps = 0.9 * DEGENERATE_RATIO * GEOM.length
    assert inverse_kinematics((eps, 0.0), GEOM) == CurveParams(0.0, 0.0)


def test_ik_rejects_targets_beyond_reach():
    with pytest.raises(UnreachableError):
        inverse_kinematics((0.174, 0.0), GEOM)
    with pytest.raises(UnreachableError):
        inverse_kinematics((0.0, (REACH_RATIO_MAX + 1e-9) * GEOM.length), GEOM)


def test_ik_solves_at_the_reach_boundary():
    s = REACH_RATIO_MAX * GEOM.length * (1.0 - 1e-12)
    cp = inverse_kinematics((s, 0.0), GEOM)
    assert math.isclose(cp.phi, PHI_REACH_LIMIT, abs_tol=1e-5)


def test_reach_limit_constants_are_self_consistent():
    # The bend angle of maximal planar reach satisfies tan(phi/2) = phi.
    assert math.isclose(
        math.tan(PHI_REACH_LIMIT / 2.0), PHI_REACH_LIMIT, rel_tol=1e-12
    )
    ratio = (1.0 - math.cos(PHI_REACH_LIMIT)) / PHI_REACH_LIMIT
    assert math.isclose(ratio, REACH_RATIO_MAX, rel_tol=1e-15)


def test_wrap_angle_range_and_fixed_points():
    assert wrap_angle(math.pi) == math.pi
    assert wrap_angle(-math.pi) == math.pi
    assert math.isclose(wrap_angle(3.0 * math.pi), math.pi, abs_tol=1e-12)
    assert math.isclose(wrap_angle(-0.25), -0.25, abs_tol=0.0)
    rng = np.random.default_rng(5)
    for _ in range(1000):
        w = wrap_angle(rng.uniform(-50.0, 50.0))
        assert -math.pi < w <= math.pi
