"""Kinematics and gait synthesis for a four-limbed soft pinniped robot."""

__version__ = "0.1.0"

from .limb_kinematics import (
    CurveParams,
    JointVector,
    LimbGeometry,
    Pose,
    UnreachableError,
    PHI_REACH_LIMIT,
    REACH_RATIO_MAX,
    curve_to_joint,
    inverse_kinematics,
    joint_to_curve,
    limb_htm,
    tip_position,
)
from .robot_model import (
    DEFAULT_LIMB,
    DEFAULT_ROBOT,
    LIMB_ORDER,
    TETRAHEDRAL_DELTA,
    AllMassesZeroError,
    FloatingBasePose,
    LimbId,
    RobotConfig,
    limb_cog,
    limb_pose_in_world,
    mount_transform,
    robot_cog,
)
from .gait_synthesis import (
    ANTICLOCKWISE,
    CLOCKWISE,
    GAIT_KINDS,
    BendProfile,
    GaitSpec,
    GaitTrajectory,
    JointspaceTrajectory,
    StrideSpec,
    backward_crawl_spec,
    crawl_turn_spec,
    forward_crawl_spec,
    fundamental_limb_motion,
    inplace_turn_spec,
    synthesize,
    synthesize_backward_crawl,
    synthesize_crawl_turn,
    synthesize_forward_crawl,
    synthesize_inplace_turn,
    trajectory_to_jointspace,
)
from .analysis import (
    CogComparison,
    WorkspaceReport,
    WrongGaitKindError,
    cog_compare,
    ground_contact_mask,
    workspace_check,
)
from .config import (
    ParseError,
    ValidationError,
    parse_config,
    preset_config,
    preset_names,
    realize_config,
    resolve_config_dict,
    resolve_config_text,
)

__all__ = [
    "__version__",
    "CurveParams", "JointVector", "LimbGeometry", "Pose", "UnreachableError",
    "PHI_REACH_LIMIT", "REACH_RATIO_MAX",
    "curve_to_joint", "inverse_kinematics", "joint_to_curve", "limb_htm",
    "tip_position",
    "DEFAULT_LIMB", "DEFAULT_ROBOT", "LIMB_ORDER", "TETRAHEDRAL_DELTA",
    "AllMassesZeroError", "FloatingBasePose", "LimbId", "RobotConfig",
    "limb_cog", "limb_pose_in_world", "mount_transform", "robot_cog",
    "ANTICLOCKWISE", "CLOCKWISE", "GAIT_KINDS",
    "BendProfile", "GaitSpec", "GaitTrajectory", "JointspaceTrajectory",
    "StrideSpec",
    "backward_crawl_spec", "crawl_turn_spec", "forward_crawl_spec",
    "fundamental_limb_motion", "inplace_turn_spec", "synthesize",
    "synthesize_backward_crawl", "synthesize_crawl_turn",
    "synthesize_forward_crawl", "synthesize_inplace_turn",
    "trajectory_to_jointspace",
    "CogComparison", "WorkspaceReport", "WrongGaitKindError",
    "cog_compare", "ground_contact_mask", "workspace_check",
    "ParseError", "ValidationError", "parse_config", "preset_config",
    "preset_names", "realize_config", "resolve_config_dict",
    "resolve_config_text",
]
