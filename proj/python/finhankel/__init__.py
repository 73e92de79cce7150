"""Finite Hankel transforms, endpoint asymptotics and invertibility of radial profiles."""

import json as _json

from ._core import (
    AsymptoticTerm,
    DomainError,
    HypothesisError,
    Prediction,
    ProfileParseError,
    QuadratureResult,
    RadialProfile,
    RuleViolation,
    bessel_j,
    finite_hankel,
    gamma,
    predict,
    radial_fourier,
    reciprocal_gamma,
)
from . import _core

__all__ = [
    "AsymptoticTerm",
    "DomainError",
    "HypothesisError",
    "Prediction",
    "ProfileParseError",
    "QuadratureResult",
    "RadialProfile",
    "RuleViolation",
    "bessel_j",
    "classify",
    "expand",
    "finite_hankel",
    "gamma",
    "load_profile",
    "predict",
    "radial_fourier",
    "reciprocal_gamma",
    "slow_decrease",
]


def load_profile(path):
    """Read a profile JSON file."""
    with open(path, encoding="utf-8") as fh:
        return RadialProfile.from_json(fh.read())


def expand(profile, n_origin_terms=1, max_k=8):
    """Origin/boundary expansion data and predicted terms as a dict."""
    return _json.loads(_core.expand_json(profile, n_origin_terms, max_k))


def classify(profile, max_k=8, N=None):
    """Certificate dict with keys status, rule, trace, children."""
    return _json.loads(_core.classify_json(profile, max_k, N))


def slow_decrease(profile, r_min=50.0, r_max=2000.0, tol=1e-10, windows=False):
    """Windowed slow-decrease check of r^nu |H(r)| on [r_min, r_max]."""
    return _json.loads(_core.slow_decrease_json(profile, r_min, r_max, tol, windows))
