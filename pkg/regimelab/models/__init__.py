from ._params import MODEL_KINDS, Grid, RegimeParams
from ._drivers import Drivers, simulate_driving_noise, simulate_drivers
from ._simulators import PathBundle, simulate_fb_hmm, simulate_hmm, simulate_model, simulate_msm

__all__ = [
    "MODEL_KINDS",
    "Grid",
    "RegimeParams",
    "Drivers",
    "PathBundle",
    "simulate_driving_noise",
    "simulate_drivers",
    "simulate_hmm",
    "simulate_msm",
    "simulate_fb_hmm",
    "simulate_model",
]
