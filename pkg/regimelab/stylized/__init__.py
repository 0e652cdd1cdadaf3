from ._acf import (
    TRANSFORMS,
    AcfReport,
    ClusteringVote,
    empirical_acf,
    lag_one_square_acf,
    sign_counts,
    transform_series,
    volatility_clustering_vote,
)
from ._autocovariance import AutocovarianceReport, drift_double_integral, linear_autocovariance
from ._distribution import DistributionReport, LeverageReport, distribution_report, leverage_proxy
from ._mse import MIN_REPLICATIONS as MIN_MSE_REPLICATIONS
from ._mse import MseCandidate, MseReport, mse_optimality_check

__all__ = [
    "TRANSFORMS",
    "MIN_MSE_REPLICATIONS",
    "AcfReport",
    "AutocovarianceReport",
    "DistributionReport",
    "LeverageReport",
    "MseCandidate",
    "MseReport",
    "ClusteringVote",
    "empirical_acf",
    "lag_one_square_acf",
    "sign_counts",
    "transform_series",
    "linear_autocovariance",
    "drift_double_integral",
    "mse_optimality_check",
    "distribution_report",
    "leverage_proxy",
    "volatility_clustering_vote",
]
