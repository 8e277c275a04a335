"""Rank correlation and baseline metrics for benchmarking."""
import math

import numpy as np
from scipy.stats import rankdata

from .errors import InvalidArgumentError, UndefinedCorrelationError
from .images import as_gray


def _pair_vectors(objective, subjective):
    x = np.asarray(objective, dtype=np.float64).ravel()
    y = np.asarray(subjective, dtype=np.float64).ravel()
    if x.size != y.size:
        raise InvalidArgumentError(f"length mismatch: {x.size} vs {y.size}")
    if x.size < 2:
        raise InvalidArgumentError("need at least two score pairs")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise InvalidArgumentError("scores must be finite")
    return x, y


def srocc(objective, subjective) -> float:
    """Spearman rank-order correlation coefficient.

    Ties get the average of the ranks they span, and the coefficient is the
    Pearson correlation of the two rank vectors.

    Raises
    ------
    UndefinedCorrelationError
        If either vector is constant.
    """
    x, y = _pair_vectors(objective, subjective)
    rx = rankdata(x, method="average")
    ry = rankdata(y, method="average")
    rx -= rx.mean()
    ry -= ry.mean()
    sxx = np.dot(rx, rx)
    syy = np.dot(ry, ry)
    if sxx == 0 or syy == 0:
        raise UndefinedCorrelationError("rank correlation of a constant vector is undefined")
    rho = np.dot(rx, ry) / math.sqrt(sxx * syy)
    return float(min(1.0, max(-1.0, rho)))


def psnr(ref, dist, peak: float = 255.0) -> float:
    """Peak signal-to-noise ratio in dB; ``inf`` for identical images."""
    ref = as_gray(ref)
    dist = as_gray(dist)
    if ref.shape != dist.shape:
        raise InvalidArgumentError(f"shape mismatch: {ref.shape} vs {dist.shape}")
    mse = float(np.mean((ref - dist) ** 2))
    if mse == 0:
        return math.inf
    return 10.0 * math.log10(peak * peak / mse)


def weighted_average(values, weights) -> float:
    """``sum(w * v) / sum(w)``, e.g. per-database SROCC weighted by image count."""
    v = np.asarray(values, dtype=np.float64).ravel()
    w = np.asarray(weights, dtype=np.float64).ravel()
    if v.size != w.size or v.size == 0:
        raise InvalidArgumentError(f"length mismatch or empty input: {v.size} vs {w.size}")
    if np.any(w <= 0):
        raise InvalidArgumentError("weights must be positive")
    return float(np.dot(w / w.sum(), v))
