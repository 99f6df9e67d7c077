"""Trajectory analysis: CoG shift evaluation and workspace audits."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .limb_kinematics import REACH_RATIO_MAX, CurveParams
from .robot_model import LIMB_ORDER, LimbId, RobotConfig, robot_cog
from .gait_synthesis import FORWARD_CRAWL, GaitTrajectory


class WrongGaitKindError(ValueError):
    """Raised when an analysis only defined for one gait kind gets another."""


def ground_contact_mask(tip_x: np.ndarray) -> np.ndarray:
    """Samples whose travel-axis tip velocity is negative (stance phase).

    The forward difference is taken cyclically, matching the periodic
    sampling of the gait cycle.
    """
    tip_x = np.asarray(tip_x, dtype=float)
    return (np.roll(tip_x, -1) - tip_x) < 0.0


@dataclass(frozen=True)
class CogComparison:
    """Forward-crawl CoG trace with and without the head/back programs.

    cog_frozen is recomputed with the head and back limbs held straight;
    cog_active is the CoG as synthesized.  tip_x_fr/tip_x_fl are the crawling
    tips' robot-frame travel-axis positions, and contact is the FR limb's
    ground-contact mask.
    """

    times: np.ndarray
    cog_active: np.ndarray   # (S, 3)
    cog_frozen: np.ndarray   # (S, 3)
    tip_x_fr: np.ndarray     # (S,)
    tip_x_fl: np.ndarray     # (S,)
    contact: np.ndarray      # (S,) bool

    def __post_init__(self):
        for name in ("times", "cog_active", "cog_frozen", "tip_x_fr", "tip_x_fl"):
            arr = np.asarray(getattr(self, name), dtype=float)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)
        contact = np.asarray(self.contact, dtype=bool)
        contact.flags.writeable = False
        object.__setattr__(self, "contact", contact)

    def summary(self) -> dict:
        mean_tip_x = 0.5 * (self.tip_x_fr + self.tip_x_fl)
        gap_active = np.abs(self.cog_active[:, 0] - mean_tip_x)[self.contact]
        gap_frozen = np.abs(self.cog_frozen[:, 0] - mean_tip_x)[self.contact]
        return {
            "max_cog_x_active": float(self.cog_active[:, 0].max()),
            "max_cog_x_frozen": float(self.cog_frozen[:, 0].max()),
            "contact_samples": int(self.contact.sum()),
            "mean_contact_gap_active": float(gap_active.mean()),
            "mean_contact_gap_frozen": float(gap_frozen.mean()),
        }


def cog_compare(traj: GaitTrajectory, config: RobotConfig) -> CogComparison:
    """Quantify how the head/back programs shift the forward-crawl CoG."""
    if traj.gait_kind != FORWARD_CRAWL:
        raise WrongGaitKindError(
            f"cog_compare is defined for {FORWARD_CRAWL}, got {traj.gait_kind}"
        )
    count = traj.n_samples
    straight = CurveParams(0.0, 0.0)
    cog_frozen = np.empty((count, 3))
    for k in range(count):
        curves: dict[LimbId, CurveParams] = {
            LimbId.H: straight,
            LimbId.B: straight,
            LimbId.FR: traj.curve_at(k, LimbId.FR),
            LimbId.FL: traj.curve_at(k, LimbId.FL),
        }
        cog_frozen[k] = robot_cog(curves, config)
    i_fr = traj.limb_index(LimbId.FR)
    i_fl = traj.limb_index(LimbId.FL)
    tip_x_fr = traj.tips_robot[:, i_fr, 0]
    tip_x_fl = traj.tips_robot[:, i_fl, 0]
    return CogComparison(
        times=traj.times,
        cog_active=traj.cog,
        cog_frozen=cog_frozen,
        tip_x_fr=tip_x_fr,
        tip_x_fl=tip_x_fl,
        contact=ground_contact_mask(tip_x_fr),
    )


@dataclass(frozen=True)
class LimbRangeStats:
    theta_min: float
    theta_max: float
    phi_min: float
    phi_max: float
    z_min: float
    z_max: float


@dataclass(frozen=True)
class WorkspaceReport:
    """Per-limb motion ranges and any workspace violations."""

    phi_limit: float
    reach_ratio_limit: float
    stats: Mapping[str, LimbRangeStats]
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "phi_limit": self.phi_limit,
            "reach_ratio_limit": self.reach_ratio_limit,
            "limbs": {
                name: {
                    "theta_min": s.theta_min, "theta_max": s.theta_max,
                    "phi_min": s.phi_min, "phi_max": s.phi_max,
                    "z_min": s.z_min, "z_max": s.z_max,
                }
                for name, s in self.stats.items()
            },
            "violations": [
                {"sample": k, "limb": limb, "kind": kind, "value": value}
                for k, limb, kind, value in self.violations
            ],
        }


def workspace_check(
    traj: GaitTrajectory,
    config: RobotConfig,
    phi_limit: float = math.pi,
) -> WorkspaceReport:
    """Audit a trajectory against the arc-angle and reachability limits.

    Flags any sample whose arc angle exceeds phi_limit or whose planar tip
    radius exceeds the reachable fraction of the limb length.  Also reports
    each limb's theta/phi ranges and realized tip heights.
    """
    violations = []
    stats = {}
    for j, limb in enumerate(LIMB_ORDER):
        geom = config.geometry(limb)
        theta = traj.theta[:, j]
        phi = traj.phi[:, j]
        z = traj.tips_limb[:, j, 2]
        radial = np.hypot(traj.tips_limb[:, j, 0], traj.tips_limb[:, j, 1])
        stats[limb.name] = LimbRangeStats(
            float(theta.min()), float(theta.max()),
            float(phi.min()), float(phi.max()),
            float(z.min()), float(z.max()),
        )
        for k in np.flatnonzero(phi > phi_limit):
            violations.append((int(k), limb.name, "phi_above_limit", float(phi[k])))
        ratios = radial / geom.length
        for k in np.flatnonzero(ratios > REACH_RATIO_MAX):
            violations.append((int(k), limb.name, "radial_reach_exceeded", float(ratios[k])))
    return WorkspaceReport(
        phi_limit=phi_limit,
        reach_ratio_limit=REACH_RATIO_MAX,
        stats=stats,
        violations=tuple(violations),
    )
