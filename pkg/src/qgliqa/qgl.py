"""QGL feature maps, similarity map and the mQGL / sQGL scores.

Both images are filtered with a Laplacian-of-Gaussian and a pair of
derivative-of-Gaussian kernels at scale ``sigma``. The LOG response ``L``
and gradient magnitude ``D`` are divisively normalized by the locally
pooled energy ``D² + k²L²`` (Gaussian window at ``norm_scale_mult * sigma``)
and combined into the QGL map ``q = sqrt(U² + V²)``. The similarity of two
QGL maps is pooled by its mean (mQGL, higher is better) or its population
standard deviation (sQGL, higher is worse).
"""
import math
from dataclasses import dataclass, field, replace
from typing import NamedTuple, Optional

import numpy as np

from .errors import DegenerateInputError, InvalidArgumentError, InvalidParameterError
from .filters import convolve, gaussian_smooth, make_dx, make_dy, make_log
from .images import as_gray

#: Energy values at or below this are treated as exactly zero when ``c0 == 0``.
ENERGY_FLOOR = 1e-20


@dataclass(frozen=True)
class QglConfig:
    """Tunables of the QGL pipeline.

    ``k`` defaults to ``sqrt(2) * sigma``, the 2-D counterpart of the
    1-D optimum ``k = sigma``. Use :meth:`for_shift` for the larger scale
    used in translation experiments.
    """

    sigma: float = 0.5
    k: Optional[float] = None
    c0: float = 1.0
    c1: float = 0.0009
    norm_scale_mult: float = 2.0
    boundary: str = field(default="reflect")

    def __post_init__(self):
        if self.k is None:
            object.__setattr__(self, "k", math.sqrt(2.0) * float(self.sigma))
        for name in ("sigma", "k", "c1", "norm_scale_mult"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
                raise InvalidParameterError(f"{name} must be finite and > 0, got {value!r}")
        if not (math.isfinite(self.c0) and self.c0 >= 0):
            raise InvalidParameterError(f"c0 must be finite and >= 0, got {self.c0!r}")
        if self.boundary != "reflect":
            raise InvalidParameterError(f"unsupported boundary mode {self.boundary!r}")

    @classmethod
    def for_shift(cls, **overrides) -> "QglConfig":
        """Defaults for shift-robustness runs (``sigma = 1``)."""
        overrides.setdefault("sigma", 1.0)
        return cls(**overrides)

    def with_sigma(self, sigma: float) -> "QglConfig":
        """Copy with a new ``sigma`` and ``k`` re-derived from it."""
        return replace(self, sigma=sigma, k=None)


class FeaturePair(NamedTuple):
    """Normalized LOG map ``u``, normalized GM map ``v`` and QGL map ``q``."""

    u: np.ndarray
    v: np.ndarray
    q: np.ndarray


class Scores(NamedTuple):
    mqgl: float
    sqgl: float


def log_response(img, sigma: float, boundary: str = "reflect") -> np.ndarray:
    return convolve(img, make_log(sigma), boundary)


def gradient_magnitude(img, sigma: float, boundary: str = "reflect") -> np.ndarray:
    """``sqrt(dx² + dy²)`` of the derivative-of-Gaussian responses."""
    img = as_gray(img)
    dx = convolve(img, make_dx(sigma), boundary)
    dy = convolve(img, make_dy(sigma), boundary)
    return np.sqrt(dx * dx + dy * dy)


def divisive_normalize(D, L, cfg: QglConfig):
    """Divide ``k·L`` and ``D`` by the pooled local energy.

    The denominator at each pixel is
    ``sqrt(G * (D² + k²L²) + c0)`` where ``G *`` is convolution with a
    Gaussian window of scale ``cfg.norm_scale_mult * cfg.sigma``.

    Returns
    -------
    U, V : ndarray
        Normalized LOG and GM maps.

    Raises
    ------
    DegenerateInputError
        If ``c0 == 0`` and the pooled energy vanishes somewhere.
    """
    D = np.asarray(D, dtype=np.float64)
    L = np.asarray(L, dtype=np.float64)
    if D.shape != L.shape or D.ndim != 2:
        raise InvalidArgumentError(f"D and L must be matching 2-D maps, got {D.shape} and {L.shape}")
    if np.any(D < 0):
        raise InvalidArgumentError("gradient magnitude must be non-negative")
    kL = cfg.k * L
    energy = gaussian_smooth(D * D + kL * kL, cfg.norm_scale_mult * cfg.sigma, cfg.boundary)
    if cfg.c0 == 0 and np.any(energy <= ENERGY_FLOOR):
        raise DegenerateInputError("pooled energy is zero and c0 = 0; normalization is undefined")
    denom = np.sqrt(energy + cfg.c0)
    return kL / denom, D / denom


def qgl_feature(img, cfg: QglConfig = QglConfig()) -> FeaturePair:
    img = as_gray(img)
    L = log_response(img, cfg.sigma, cfg.boundary)
    D = gradient_magnitude(img, cfg.sigma, cfg.boundary)
    u, v = divisive_normalize(D, L, cfg)
    return FeaturePair(u, v, np.sqrt(u * u + v * v))


def similarity_map(qR, qD, c1: float = 0.0009) -> np.ndarray:
    """Pointwise ``(2 qR qD + c1) / (qR² + qD² + c1)``; symmetric, in (0, 1]."""
    qR = np.asarray(qR, dtype=np.float64)
    qD = np.asarray(qD, dtype=np.float64)
    if qR.shape != qD.shape:
        raise InvalidArgumentError(f"shape mismatch: {qR.shape} vs {qD.shape}")
    if not (math.isfinite(c1) and c1 > 0):
        raise InvalidParameterError(f"c1 must be finite and > 0, got {c1!r}")
    return (2.0 * qR * qD + c1) / (qR * qR + qD * qD + c1)


def _pool_input(Q) -> np.ndarray:
    Q = np.asarray(Q, dtype=np.float64)
    if Q.size == 0:
        raise InvalidArgumentError("cannot pool an empty similarity map")
    return Q


def mqgl(Q) -> float:
    """Mean similarity."""
    return float(np.mean(_pool_input(Q)))


def sqgl(Q) -> float:
    """Population (1/N) standard deviation of the similarity map."""
    return float(np.std(_pool_input(Q)))


def score_pair(ref, dist, cfg: QglConfig = QglConfig()) -> Scores:
    """Score a distorted image against its reference.

    Examples
    --------
    >>> import numpy as np
    >>> img = np.arange(64.0).reshape(8, 8)
    >>> score_pair(img, img)
    Scores(mqgl=1.0, sqgl=0.0)
    """
    ref = as_gray(ref)
    dist = as_gray(dist)
    if ref.shape != dist.shape:
        raise InvalidArgumentError(
            f"reference is {ref.shape[1]}x{ref.shape[0]} but distorted is {dist.shape[1]}x{dist.shape[0]}"
        )
    Q = similarity_map(qgl_feature(ref, cfg).q, qgl_feature(dist, cfg).q, cfg.c1)
    return Scores(mqgl(Q), sqgl(Q))
