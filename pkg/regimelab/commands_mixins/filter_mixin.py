from typing import Any, Dict

import numpy as np
import pandas as pd

from regimelab import _msgs as msgs
from regimelab._commands import command
from regimelab._config import ExperimentConfig
from regimelab._io import OutputWriter
from regimelab.filters import (
    forward_filter,
    map_states,
    qv_state_detector,
    realized_volatility,
    run_fb_filter,
    run_hmm_filter,
    run_msm_filter,
    run_wonham_filter,
    state_accuracy,
)
from regimelab.models import simulate_model


class FilterCommandsMixin:
    @command(name="filter", summary="run every filter on the same simulated increments")
    def filter(self, config: ExperimentConfig, writer: OutputWriter) -> Dict[str, Any]:
        params = config.params
        bundle = simulate_model(config.model, params, config.drivers())
        grid, increments = bundle.grid, bundle.increments
        sigma0, q = params.volatility0, params.rates
        filters = {
            "hmm": run_hmm_filter(increments, params, grid),
            "wonham": run_wonham_filter(increments, params.mu, sigma0, q, grid.dt),
            "forward": forward_filter(increments, params.mu, sigma0, q, grid.dt),
        }
        if params.sigma is not None:
            filters["fb"] = run_fb_filter(increments, params, grid)[0]
            filters["msm"] = run_msm_filter(increments, params, grid)
        frame = pd.DataFrame({"t": grid.times, "state": bundle.chain_states[0] + 1})
        for name, yhat in filters.items():
            for i in range(params.d):
                frame[f"{name}_{i + 1}"] = yhat[0, :, i]
        writer.write_frame("filter.csv", frame)
        truth = bundle.chain_states[:, 1:]
        return {
            "model": config.model,
            "replications": bundle.replications,
            "accuracy": {name: state_accuracy(map_states(yhat)[:, 1:], truth) for name, yhat in filters.items()},
            "max_robust_wonham_deviation": float(np.abs(filters["hmm"] - filters["wonham"]).max()),
            "max_robust_forward_deviation": float(np.abs(filters["hmm"] - filters["forward"]).max()),
        }

    @command(
        name="detect",
        args=("+window",),
        flags=msgs.FLAG_NEEDS_SIGMA + msgs.FLAG_DISTINCT_SIGMA,
        summary="recover the state from realized volatility",
    )
    def detect(self, config: ExperimentConfig, writer: OutputWriter) -> Dict[str, Any]:
        params = config.params
        sigma = params.require_sigma("detect")
        bundle = simulate_model(config.model, params, config.drivers())
        grid, window = bundle.grid, config.detector_window
        detected = qv_state_detector(bundle.increments, sigma, grid.dt, window)
        # every estimate made after increment k is scored against the state at t_k
        truth = bundle.chain_states[:, 1:]
        frame = pd.DataFrame(
            {
                "t": grid.times[1:],
                "detected_state": detected[0] + 1,
                "true_state": truth[0] + 1,
                "realized_vol": realized_volatility(bundle.increments[0], grid.dt, window),
            }
        )
        writer.write_frame("detect.csv", frame)
        hmm_states = map_states(run_hmm_filter(bundle.increments, params.equal_variance(), grid))[:, 1:]
        return {
            "model": config.model,
            "replications": bundle.replications,
            "window": window,
            "accuracy": state_accuracy(detected, truth),
            "hmm_filter_accuracy": state_accuracy(hmm_states, truth),
        }
