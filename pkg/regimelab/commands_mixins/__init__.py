from .convergence_mixin import ConvergenceCommandsMixin
from .filter_mixin import FilterCommandsMixin
from .portfolio_mixin import PortfolioCommandsMixin
from .simulate_mixin import SimulateCommandsMixin
from .stylized_mixin import StylizedCommandsMixin

__all__ = [
    "ConvergenceCommandsMixin",
    "FilterCommandsMixin",
    "PortfolioCommandsMixin",
    "SimulateCommandsMixin",
    "StylizedCommandsMixin",
]
