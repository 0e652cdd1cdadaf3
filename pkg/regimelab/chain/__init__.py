from ._path import ChainPath, initial_distribution, simulate_chain, state_at
from ._rate_matrix import RateMatrix, as_rate_matrix, stationary_distribution, transition_matrix

__all__ = [
    "RateMatrix",
    "ChainPath",
    "as_rate_matrix",
    "initial_distribution",
    "stationary_distribution",
    "transition_matrix",
    "simulate_chain",
    "state_at",
]
