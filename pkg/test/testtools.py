import numpy as np

TWO_STATE_CONF = """
model hmm
rate_row -1 1
rate_row 2 -2
mu 0.4 -0.6
sigma 0.12 0.30
steps 250
"""

THREE_STATE_CONF = """
rate_row -7 4 3
rate_row 2 -4 2
rate_row 3 5 -8
mu 1 0 -2
sigma 0.10 0.15 0.25
"""


def assert_on_simplex(yhat, atol: float = 1e-10) -> None:
    values = np.asarray(yhat)
    assert np.all(values >= 0)
    np.testing.assert_allclose(values.sum(axis=-1), 1.0, atol=atol)


def conf(base: str, **directives) -> str:
    """``base`` with extra ``key value ...`` lines appended."""
    lines = [base.strip()]
    for key, value in directives.items():
        values = value if isinstance(value, (list, tuple)) else [value]
        lines.append(" ".join([key, *map(str, values)]))
    return "\n".join(lines) + "\n"
