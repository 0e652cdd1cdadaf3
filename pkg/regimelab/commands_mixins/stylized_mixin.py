import dataclasses
from typing import Any, Dict

import pandas as pd
from scipy import stats

from regimelab._commands import command
from regimelab._config import ExperimentConfig
from regimelab._io import OutputWriter
from regimelab.models import simulate_model
from regimelab.stylized import (
    MIN_MSE_REPLICATIONS,
    distribution_report,
    empirical_acf,
    leverage_proxy,
    linear_autocovariance,
    mse_optimality_check,
    sign_counts,
    volatility_clustering_vote,
)


class StylizedCommandsMixin:
    @command(
        name="stylized",
        args=("+lags", "*transform", "+bins", "+leverage_window", "..autocov", ".mse_time"),
        summary="autocorrelations, distribution, leverage and the volatility diagnostics",
    )
    def stylized(self, config: ExperimentConfig, writer: OutputWriter) -> Dict[str, Any]:
        params = config.params
        drivers = config.drivers()
        bundle = simulate_model(config.model, params, drivers)
        path = bundle.increments[0]
        acf = empirical_acf(path, config.lags, config.transform)
        acf_frame = pd.DataFrame({"lag": acf.lags, "acf": acf.values, "stderr": acf.stderr})
        writer.write_frame("stylized_acf.csv", acf_frame)
        distribution = distribution_report(path, config.bins)
        histogram = pd.DataFrame(
            {"left": distribution.edges[:-1], "right": distribution.edges[1:], "count": distribution.counts}
        )
        writer.write_frame("stylized_histogram.csv", histogram)
        summary: Dict[str, Any] = {
            "model": config.model,
            "transform": config.transform,
            "lag_one_acf": float(acf.values[0]),
            "distribution": {
                "mean": distribution.mean,
                "variance": distribution.variance,
                "skewness": distribution.skewness,
                "excess_kurtosis": distribution.excess_kurtosis,
            },
            "leverage": dataclasses.asdict(leverage_proxy(path, config.leverage_window)),
        }
        if bundle.replications > 1:
            negative, positive = sign_counts(stats.skew(bundle.increments, axis=1))
            summary["skewness_signs"] = {"negative": negative, "positive": positive}
            if params.sigma is not None:
                vote = volatility_clustering_vote(
                    params, config.grid, config.replications, config.seed, config.initial_state
                )
                summary["clustering"] = dataclasses.asdict(vote)
        if config.autocov is not None:
            t, s = config.autocov
            report = linear_autocovariance(
                params, t, s, config.grid.dt, config.replications, config.seed, workers=config.workers
            )
            summary["autocovariance"] = {
                **dataclasses.asdict(report),
                "total": report.total,
                "combined_stderr": report.combined_stderr,
            }
        if params.sigma is not None and (config.mse_time is not None or config.replications >= MIN_MSE_REPLICATIONS):
            mse = mse_optimality_check(
                params, config.replications, config.grid, config.mse_time, config.seed, workers=config.workers
            )
            summary["mse"] = {
                "time": mse.time,
                "filter_mse": mse.filter_mse,
                "filter_stderr": mse.filter_stderr,
                "holds": mse.holds,
                "candidates": [{**dataclasses.asdict(c), "dominated": c.dominated} for c in mse.candidates],
            }
        return summary
