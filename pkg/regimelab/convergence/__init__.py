from ._euler import ConvergenceReport, euler_error_experiment, euler_sums

__all__ = [
    "ConvergenceReport",
    "euler_error_experiment",
    "euler_sums",
]
