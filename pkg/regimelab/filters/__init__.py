from ._detector import default_window, map_states, qv_state_detector, realized_volatility, state_accuracy
from ._forward import forward_filter
from ._wonham import run_wonham_filter, wonham_euler_step
from ._zakai import (
    normalize,
    propagator,
    robust_zakai_step,
    run_fb_filter,
    run_hmm_filter,
    run_msm_filter,
    simulate_fb_recursion,
)

__all__ = [
    "normalize",
    "propagator",
    "robust_zakai_step",
    "run_hmm_filter",
    "run_fb_filter",
    "run_msm_filter",
    "simulate_fb_recursion",
    "forward_filter",
    "wonham_euler_step",
    "run_wonham_filter",
    "qv_state_detector",
    "realized_volatility",
    "default_window",
    "map_states",
    "state_accuracy",
]
