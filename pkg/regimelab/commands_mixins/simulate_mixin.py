from typing import Any, Dict

import numpy as np
import pandas as pd

from regimelab import _msgs as msgs
from regimelab._commands import command
from regimelab._config import ExperimentConfig
from regimelab._helpers import FloatArray, IntArray
from regimelab._io import OutputWriter
from regimelab.filters import map_states, qv_state_detector, run_hmm_filter, run_msm_filter, state_accuracy
from regimelab.models import PathBundle, simulate_fb_hmm, simulate_hmm, simulate_model, simulate_msm


def _paths_frame(bundle: PathBundle) -> pd.DataFrame:
    """One path as is; several stacked with a leading 1-based ``replication`` column."""
    if bundle.replications == 1:
        return bundle.to_frame(0)
    frames = []
    for replication in range(bundle.replications):
        frame = bundle.to_frame(replication)
        frame.insert(0, "replication", replication + 1)
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


def _filter_accuracy(yhat: FloatArray, truth: IntArray) -> float:
    """MAP hit rate at t_1..t_n."""
    return state_accuracy(map_states(yhat)[:, 1:], truth)


class SimulateCommandsMixin:
    @command(name="simulate", summary="simulate paths of the configured model")
    def simulate(self, config: ExperimentConfig, writer: OutputWriter) -> Dict[str, Any]:
        drivers = config.drivers()
        bundle = simulate_model(config.model, config.params, drivers)
        writer.write_frame("simulate.csv", _paths_frame(bundle))
        d = config.params.d
        occupation = np.mean([chain.occupation_times(d) / chain.horizon for chain in drivers.chains], axis=0)
        return {
            "model": config.model,
            "replications": bundle.replications,
            "steps": config.grid.steps,
            "mean_jumps": float(np.mean([chain.jumps for chain in drivers.chains])),
            "occupation": occupation,
            "stationary": config.params.stationary,
            "mean_terminal_return": float(bundle.returns[:, -1].mean()),
            "min_filter_entry": float(bundle.filter.min()),
        }

    @command(
        name="compare",
        args=("+window",),
        flags=msgs.FLAG_NEEDS_SIGMA + msgs.FLAG_DISTINCT_SIGMA,
        summary="HMM, MSM and FB-HMM on shared drivers with state recovery rates",
    )
    def compare(self, config: ExperimentConfig, writer: OutputWriter) -> Dict[str, Any]:
        params = config.params
        sigma = params.require_sigma("compare")
        hmm_params = params.equal_variance()
        drivers = config.drivers()
        grid = drivers.grid
        hmm = simulate_hmm(hmm_params, drivers)
        msm = simulate_msm(params, drivers)
        fb = simulate_fb_hmm(params, drivers)
        paths = pd.DataFrame(
            {
                "t": grid.times,
                "state": drivers.states[0] + 1,
                "R_hmm": hmm.returns[0],
                "R_msm": msm.returns[0],
                "R_fb": fb.returns[0],
                "vol_msm": msm.vol[0],
                "vol_fb": fb.vol[0],
            }
        )
        writer.write_frame("compare.csv", paths)
        detected = qv_state_detector(msm.increments, sigma, grid.dt, config.detector_window)
        truth = drivers.states[:, 1:]
        accuracy = {
            "hmm_filter": _filter_accuracy(run_hmm_filter(msm.increments, hmm_params, grid), truth),
            "msm_filter": _filter_accuracy(run_msm_filter(msm.increments, params, grid), truth),
            "qv_detector": state_accuracy(detected, truth),
            "fb_filter": _filter_accuracy(fb.filter, truth),
        }
        table = pd.DataFrame({"estimator": list(accuracy), "accuracy": list(accuracy.values())})
        writer.write_frame("compare_accuracy.csv", table)
        return {
            "replications": drivers.replications,
            "steps": grid.steps,
            "window": config.detector_window,
            "sigma0": hmm_params.volatility0,
            "accuracy": accuracy,
        }
