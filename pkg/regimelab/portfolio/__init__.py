from ._fractions import Strategy, log_optimal_fraction, own_strategy, stationary_fraction, strategy_set
from ._wealth import UtilityEstimate, WealthPaths, expected_log_utility, simulate_wealth, utility_frame

__all__ = [
    "Strategy",
    "WealthPaths",
    "UtilityEstimate",
    "log_optimal_fraction",
    "own_strategy",
    "stationary_fraction",
    "strategy_set",
    "simulate_wealth",
    "expected_log_utility",
    "utility_frame",
]
