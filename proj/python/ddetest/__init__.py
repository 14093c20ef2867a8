"""Goodness-of-fit testing by the difference between parametric and kernel entropy estimates."""

import json

from ._core import (
    DataError,
    DdeError,
    FitError,
    Model,
    NumericError,
    __version__,
    critical_interval,
    families,
    fit,
    fixtures,
    load_dataset,
    model,
    p_value,
    small_sample_inflation,
    testable_families,
)
from . import _core

__all__ = [
    "DataError",
    "DdeError",
    "FitError",
    "Model",
    "NumericError",
    "__version__",
    "critical_interval",
    "entropy",
    "families",
    "fit",
    "fixtures",
    "load_dataset",
    "model",
    "p_value",
    "run_test",
    "small_sample_inflation",
    "testable_families",
]


def _values(data):
    if isinstance(data, str):
        return load_dataset(data)[1]
    return [float(v) for v in data]


def entropy(data, family, estimator="ml"):
    """Entropy report (dict) for ``data``.

    ``estimator="ml"`` fits ``family`` and evaluates its entropy;
    ``estimator="kde"`` uses the kernel estimate with the bandwidth that
    ``family`` as a null would select (ln scale for positive families).
    ``data`` may be a sequence or a fixture id / file path.
    """
    values = _values(data)
    if estimator == "ml":
        return json.loads(_core._entropy_ml_json(values, family))
    if estimator == "kde":
        return json.loads(_core._entropy_kde_json(values, family))
    raise ValueError("estimator must be 'ml' or 'kde'")


def run_test(data, family, alpha=0.05, n_boot=1000, seed=0, threads=1, fit_method="mle"):
    """Run the bootstrap test and return its report as a dict.

    The result does not depend on ``threads``.
    """
    return json.loads(
        _core._run_test_json(_values(data), family, alpha, n_boot, seed, threads, fit_method)
    )
