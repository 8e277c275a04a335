"""Sampled Gaussian-family kernels and mirrored-boundary convolution.

All kernels are sampled at integer offsets on a square support of radius
``ceil(3 * sigma)`` (at least 1). Taps are indexed ``taps[y, x]`` with the
origin at ``taps[radius, radius]``; ``x`` grows to the right (columns) and
``y`` grows downwards (rows).
"""
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy import ndimage

from .errors import DegenerateInputError, InvalidArgumentError, InvalidParameterError
from .images import as_gray

#: ``scipy.ndimage`` name of the symmetric, edge-sample-not-repeated extension.
_NDIMAGE_MODE = {"reflect": "mirror"}


@dataclass(frozen=True)
class Kernel2D:
    """Square filter taps with odd side ``2 * radius + 1``.

    ``sigma`` is the generating Gaussian scale, or ``None`` for kernels not
    derived from a Gaussian (e.g. :meth:`identity`).
    """

    taps: np.ndarray
    sigma: Optional[float] = None
    radius: int = field(init=False)

    def __post_init__(self):
        taps = np.array(self.taps, dtype=np.float64)
        if taps.ndim != 2 or taps.shape[0] != taps.shape[1] or taps.shape[0] % 2 != 1:
            raise InvalidArgumentError(f"kernel taps must be odd and square, got {taps.shape}")
        if taps.shape[0] < 3:
            raise InvalidArgumentError("kernel radius must be at least 1")
        taps.setflags(write=False)
        object.__setattr__(self, "taps", taps)
        object.__setattr__(self, "radius", taps.shape[0] // 2)

    @property
    def size(self) -> int:
        return self.taps.shape[0]

    @classmethod
    def identity(cls) -> "Kernel2D":
        taps = np.zeros((3, 3))
        taps[1, 1] = 1.0
        return cls(taps)


def _check_sigma(sigma) -> float:
    try:
        sigma = float(sigma)
    except (TypeError, ValueError):
        raise InvalidParameterError(f"sigma must be a real number, got {sigma!r}") from None
    if not math.isfinite(sigma) or sigma <= 0:
        raise InvalidParameterError(f"sigma must be finite and > 0, got {sigma}")
    return sigma


def kernel_radius(sigma: float) -> int:
    """Truncation radius ``max(1, ceil(3 * sigma))``."""
    return max(1, math.ceil(3.0 * _check_sigma(sigma)))


def _grid(sigma):
    r = kernel_radius(sigma)
    offsets = np.arange(-r, r + 1, dtype=np.float64)
    y, x = np.meshgrid(offsets, offsets, indexing="ij")
    return x, y


def gaussian_1d(sigma: float) -> np.ndarray:
    """Unit-sum sampled 1-D Gaussian on ``[-radius, radius]``."""
    sigma = _check_sigma(sigma)
    r = kernel_radius(sigma)
    x = np.arange(-r, r + 1, dtype=np.float64)
    g = np.exp(-(x * x) / (2.0 * sigma * sigma))
    return g / g.sum()


def make_gaussian(sigma: float) -> Kernel2D:
    """2-D Gaussian kernel renormalized to unit sum after truncation."""
    g = gaussian_1d(sigma)
    return Kernel2D(np.outer(g, g), sigma=float(sigma))


def make_log(sigma: float, zero_mean: bool = True) -> Kernel2D:
    """Laplacian-of-Gaussian kernel.

    Taps follow

    .. math::
        h(x, y) = -\\frac{1}{\\pi\\sigma^4}
            \\left(1 - \\frac{x^2 + y^2}{2\\sigma^2}\\right)
            e^{-(x^2 + y^2) / 2\\sigma^2}

    With ``zero_mean`` (the default) the mean tap is subtracted so the
    truncated kernel annihilates constant images.
    """
    sigma = _check_sigma(sigma)
    x, y = _grid(sigma)
    rr = (x * x + y * y) / (2.0 * sigma * sigma)
    taps = -(1.0 - rr) * np.exp(-rr) / (math.pi * sigma**4)
    if zero_mean:
        taps = taps - taps.mean()
    return Kernel2D(taps, sigma=sigma)


def make_dx(sigma: float) -> Kernel2D:
    """Horizontal derivative-of-Gaussian, ``-x exp(-(x²+y²)/2σ²) / (2πσ⁴)``."""
    sigma = _check_sigma(sigma)
    x, y = _grid(sigma)
    taps = -x * np.exp(-(x * x + y * y) / (2.0 * sigma * sigma)) / (2.0 * math.pi * sigma**4)
    return Kernel2D(taps, sigma=sigma)


def make_dy(sigma: float) -> Kernel2D:
    """Vertical derivative-of-Gaussian; the transpose of :func:`make_dx`."""
    return Kernel2D(make_dx(sigma).taps.T, sigma=_check_sigma(sigma))


def _check_support(img: np.ndarray, radius: int):
    if 2 * radius + 1 > 2 * min(img.shape) + 1:
        raise DegenerateInputError(
            f"kernel of radius {radius} is too large for a {img.shape[1]}x{img.shape[0]} image"
        )


def convolve(img, kernel: Kernel2D, boundary: str = "reflect") -> np.ndarray:
    """True 2-D convolution (kernel flipped) with a same-size output.

    ``boundary="reflect"`` extends the image symmetrically about the edge
    samples without repeating them (``d c b | a b c d | c b a``).
    """
    img = as_gray(img)
    if boundary not in _NDIMAGE_MODE:
        raise InvalidParameterError(f"unsupported boundary mode {boundary!r}")
    _check_support(img, kernel.radius)
    return ndimage.convolve(img, kernel.taps, mode=_NDIMAGE_MODE[boundary])


def gaussian_smooth(img, sigma: float, boundary: str = "reflect") -> np.ndarray:
    """Separable two-pass equivalent of ``convolve(img, make_gaussian(sigma))``."""
    img = as_gray(img)
    if boundary not in _NDIMAGE_MODE:
        raise InvalidParameterError(f"unsupported boundary mode {boundary!r}")
    g = gaussian_1d(sigma)
    _check_support(img, g.size // 2)
    mode = _NDIMAGE_MODE[boundary]
    out = ndimage.convolve1d(img, g, axis=0, mode=mode)
    return ndimage.convolve1d(out, g, axis=1, mode=mode)
