from typing import Any, Dict

import numpy as np

from regimelab import _msgs as msgs
from regimelab._commands import command
from regimelab._config import ExperimentConfig
from regimelab._io import OutputWriter
from regimelab.convergence import euler_error_experiment


def _decreasing(values: Any) -> bool:
    return bool(np.all(np.diff(values) < 0))


class ConvergenceCommandsMixin:
    @command(
        name="converge",
        args=("+fine_steps",),
        flags=msgs.FLAG_NEEDS_SIGMA + msgs.FLAG_REPLICATED,
        summary="strong L2 error of the Euler discretization of FB-HMM returns",
    )
    def converge(self, config: ExperimentConfig, writer: OutputWriter) -> Dict[str, Any]:
        report = euler_error_experiment(
            config.params,
            config.coarse_steps,
            config.fine_steps,
            config.replications,
            config.grid.horizon,
            config.seed,
            initial=config.initial_state,
            workers=config.workers,
        )
        writer.write_frame("converge.csv", report.to_frame())
        return {
            "fine_steps": report.fine_n,
            "replications": report.replications,
            "decay_ratio": report.decay_ratio,
            "mse_decreasing": _decreasing(report.mse_estimates),
            "drift_decreasing": _decreasing(report.drift_mse),
            "diffusion_decreasing": _decreasing(report.diff_mse),
        }
