"""Closed-form 1-D analysis of a Gaussian-smoothed step edge.

For an ideal step smoothed at scale ``sigma`` the first derivative is the
Gaussian ``G(x)`` itself and the second derivative is ``G'(x)``. Their
weighted quadratic sum

    R(x) = d1(x)² + (k d2(x))² = (σ⁴ + k²x²) / (2πσ⁶) · exp(-x²/σ²)

has a stationary flat top at the edge centre exactly when ``k = sigma``.
Everything here is analytic; the discrete image pipeline lives in
:mod:`qgliqa.qgl`.
"""
import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import InvalidArgumentError, InvalidParameterError

#: Number of interior samples of (0, 1) used when emitting ideal-k curves.
BETA_SAMPLES = 512


def _positive(name, value) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise InvalidParameterError(f"{name} must be finite and > 0, got {value}")
    return value


@dataclass(frozen=True)
class EdgeProfile:
    xs: np.ndarray
    d1: np.ndarray
    d2: np.ndarray
    r: np.ndarray
    f: np.ndarray
    sigma: float
    k: float

    @classmethod
    def compute(cls, xs, sigma: float, k: float) -> "EdgeProfile":
        xs = np.asarray(xs, dtype=np.float64)
        d1, d2 = edge_response(xs, sigma)
        return cls(xs, d1, d2, r_profile(xs, sigma, k), r_derivative(xs, sigma, k),
                   float(sigma), float(k))


def edge_response(xs, sigma: float):
    """First and second derivative of the smoothed unit step.

    Returns
    -------
    d1, d2 : ndarray
        ``G(x)`` and ``G'(x) = -x G(x) / sigma²``.
    """
    sigma = _positive("sigma", sigma)
    x = np.asarray(xs, dtype=np.float64)
    d1 = np.exp(-(x * x) / (2.0 * sigma * sigma)) / (math.sqrt(2.0 * math.pi) * sigma)
    d2 = -x * d1 / (sigma * sigma)
    return d1, d2


def r_profile(xs, sigma: float, k: float) -> np.ndarray:
    sigma = _positive("sigma", sigma)
    k = _positive("k", k)
    x = np.asarray(xs, dtype=np.float64)
    x2 = x * x
    return (sigma**4 + k * k * x2) / (2.0 * math.pi * sigma**6) * np.exp(-x2 / (sigma * sigma))


def r_derivative(xs, sigma: float, k: float) -> np.ndarray:
    """Analytic ``dR/dx = x (k²σ² - σ⁴ - k²x²) / (πσ⁸) · exp(-x²/σ²)``."""
    sigma = _positive("sigma", sigma)
    k = _positive("k", k)
    x = np.asarray(xs, dtype=np.float64)
    x2 = x * x
    return x * (k * k * sigma * sigma - sigma**4 - k * k * x2) / (math.pi * sigma**8) * np.exp(-x2 / (sigma * sigma))


def flat_top_halfwidth(sigma: float, k: float, level: float = 0.99, step: float = 1e-4) -> float:
    """Largest ``x >= 0`` such that ``R >= level * R(0)`` on all of ``[0, x]``.

    Resolved on a grid of spacing ``step * sigma``. Returns 0 if ``R`` rises
    above ``R(0)`` immediately, i.e. when the centre is not a maximum.
    """
    sigma = _positive("sigma", sigma)
    xs = np.arange(0.0, 4.0 * sigma, step * sigma)
    r = r_profile(xs, sigma, k)
    r0 = r[0]
    if r[1] > r0:
        return 0.0
    below = np.nonzero(r < level * r0)[0]
    return float(xs[below[0] - 1]) if below.size else float(xs[-1])


def ideal_k_curves(betas, sigma: float = 1.0):
    """Ideal ratio ``k`` for a flat region of half-width ``t = beta * sigma``.

    ``k_a = sigma / sqrt(1 - beta²)`` zeroes ``f(t)`` and
    ``k_b = sigma * sqrt((1 - 2 beta²) / (2 beta⁴ - 5 beta² + 1))`` zeroes
    ``f'(t)``. Entries of ``k_b`` with a non-positive or non-finite radicand
    are NaN.
    """
    sigma = _positive("sigma", sigma)
    b = np.asarray(betas, dtype=np.float64)
    if np.any(~np.isfinite(b)) or np.any(b <= 0) or np.any(b >= 1):
        raise InvalidArgumentError("every beta must lie strictly inside (0, 1)")
    b2 = b * b
    k_a = sigma / np.sqrt(1.0 - b2)
    with np.errstate(divide="ignore", invalid="ignore"):
        radicand = (1.0 - 2.0 * b2) / (2.0 * b2 * b2 - 5.0 * b2 + 1.0)
        k_b = np.where(np.isfinite(radicand) & (radicand > 0), sigma * np.sqrt(radicand), np.nan)
    return k_a, k_b


def default_betas(n: int = BETA_SAMPLES) -> np.ndarray:
    """``n`` uniform samples of (0, 1) with both endpoints excluded."""
    return np.arange(1, n + 1) / (n + 1)


def _fmt(v: float) -> str:
    return "nan" if math.isnan(v) else f"{v:.6f}"


def write_profile_csv(profile: EdgeProfile, path) -> None:
    """Write ``x,d1,d2,R,f`` rows."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["x", "d1", "d2", "R", "f"])
        for row in zip(profile.xs, profile.d1, profile.d2, profile.r, profile.f):
            w.writerow([_fmt(v) for v in row])


def write_k_curves_csv(betas, k_a, k_b, path) -> None:
    """Write ``beta,k_a,k_b`` rows; undefined ``k_b`` is written as ``nan``."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["beta", "k_a", "k_b"])
        for row in zip(betas, k_a, k_b):
            w.writerow([_fmt(v) for v in row])


def write_analysis(out_dir, sigmas=(0.5, 1.0, 2.0), ks=None, n_points: int = 801) -> list:
    """Emit profile tables for every ``(sigma, k)`` and the ideal-k table.

    ``ks`` are multipliers of ``sigma``; ``None`` means ``k = sigma``. Profile
    tables span ``[-4σ, 4σ]``. A ``normalized`` table stacks
    ``R · 2πσ²`` against ``x / σ`` for each ``sigma`` with ``k = sigma``.
    Returns the written paths.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ks = (1.0,) if ks is None else tuple(ks)
    written = []
    unit = np.linspace(-4.0, 4.0, n_points)
    for s in sigmas:
        for m in ks:
            p = EdgeProfile.compute(unit * s, s, m * s)
            path = out / f"profile_sigma{s:g}_k{m:g}sigma.csv"
            write_profile_csv(p, path)
            written.append(path)
    path = out / "normalized_profiles.csv"
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["sigma", "x_over_sigma", "R_normalized"])
        for s in sigmas:
            rn = r_profile(unit * s, s, s) * 2.0 * math.pi * s * s
            for u, v in zip(unit, rn):
                w.writerow([f"{s:g}", _fmt(u), _fmt(v)])
    written.append(path)
    betas = default_betas()
    k_a, k_b = ideal_k_curves(betas, 1.0)
    path = out / "ideal_k.csv"
    write_k_curves_csv(betas, k_a, k_b, path)
    written.append(path)
    return written
