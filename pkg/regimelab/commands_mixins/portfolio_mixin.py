import math
from typing import Any, Dict, List

from regimelab import _msgs as msgs
from regimelab._commands import command
from regimelab._config import ExperimentConfig
from regimelab._io import OutputWriter
from regimelab.models import MODEL_KINDS
from regimelab.portfolio import UtilityEstimate, expected_log_utility, utility_frame


def _dominance(estimates: List[UtilityEstimate]) -> Dict[str, Any]:
    """Whether the own log-optimal strategy is within 2 combined standard errors of the best alternative."""
    own = next(estimate for estimate in estimates if estimate.strategy == "log_optimal")
    margin = math.inf
    for other in estimates:
        if other is own:
            continue
        combined = 2.0 * math.hypot(own.stderr, other.stderr)
        margin = min(margin, own.mean - other.mean + combined)
    return {"log_optimal_mean": own.mean, "dominates": margin >= 0, "margin": margin}


class PortfolioCommandsMixin:
    @command(
        name="portfolio",
        args=("..clamp", "noclamp", ".wealth"),
        flags=msgs.FLAG_REPLICATED,
        summary="expected log utility of the log-optimal and comparison strategies",
    )
    def portfolio(self, config: ExperimentConfig, writer: OutputWriter) -> Dict[str, Any]:
        params = config.params
        kinds = MODEL_KINDS if params.sigma is not None else ("hmm",)
        estimates = expected_log_utility(
            params,
            kinds,
            config.replications,
            config.grid,
            config.seed,
            x0=config.wealth,
            clamp=config.clamp,
            constants=config.constants,
            initial=config.initial_state,
        )
        writer.write_frame("portfolio.csv", utility_frame(estimates))
        by_model = {kind: [e for e in estimates if e.model == kind] for kind in kinds}
        return {
            "replications": config.replications,
            "clamp": config.clamp,
            "bankrupt": sum(e.bankrupt_count for e in estimates),
            "models": {kind: _dominance(group) for kind, group in by_model.items()},
        }
