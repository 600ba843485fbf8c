"""Surface families through a common null asymptotic curve."""

from ._core import (
    NullsurfError,
    ResidualSample,
    Scene,
    VerificationItem,
    VerificationReport,
    build_obj,
    check_curve,
    eval_expr,
    evaluate_curve,
    evaluate_surface,
    load_scene,
    parse_scene,
    preset,
    preset_names,
    residual_scan,
    verify,
)

__all__ = [
    "NullsurfError",
    "ResidualSample",
    "Scene",
    "VerificationItem",
    "VerificationReport",
    "build_obj",
    "check_curve",
    "eval_expr",
    "evaluate_curve",
    "evaluate_surface",
    "load_scene",
    "parse_scene",
    "preset",
    "preset_names",
    "residual_scan",
    "verify",
]
