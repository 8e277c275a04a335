"""Grayscale image validation and decoding.

Images are plain 2-D ``float64`` arrays holding luminance on the [0, 255]
scale. Color inputs are reduced to Rec. 601 luma before any filtering.
"""
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import InvalidArgumentError

REC601 = np.array([0.299, 0.587, 0.114])


def as_gray(img) -> np.ndarray:
    """Validate ``img`` and return it as a 2-D float64 array.

    Raises
    ------
    InvalidArgumentError
        If the array is not 2-D, is empty, or holds non-finite samples.
    """
    arr = np.asarray(img, dtype=np.float64)
    if arr.ndim != 2:
        raise InvalidArgumentError(f"expected a 2-D image, got shape {arr.shape}")
    if arr.size == 0:
        raise InvalidArgumentError("image is empty")
    if not np.all(np.isfinite(arr)):
        raise InvalidArgumentError("image contains non-finite samples")
    return arr


def rgb_to_luma(rgb) -> np.ndarray:
    """Rec. 601 luma ``0.299 R + 0.587 G + 0.114 B`` of an (H, W, 3) array."""
    rgb = np.asarray(rgb, dtype=np.float64)
    if rgb.ndim != 3 or rgb.shape[2] < 3:
        raise InvalidArgumentError(f"expected an (H, W, 3) array, got {rgb.shape}")
    return rgb[..., :3] @ REC601


def load_image(path) -> np.ndarray:
    """Decode an 8-bit gray or 24-bit color image file to luminance.

    Alpha channels are dropped. 16-bit grayscale is rescaled to [0, 255].
    """
    path = Path(path)
    with Image.open(path) as im:
        im.load()
        if im.mode in ("I;16", "I;16B", "I;16L", "I"):
            arr = np.asarray(im, dtype=np.float64)
            return as_gray(arr * (255.0 / 65535.0))
        if im.mode == "L":
            return as_gray(np.asarray(im, dtype=np.float64))
        if im.mode != "RGB":
            im = im.convert("RGB")
        return as_gray(rgb_to_luma(np.asarray(im)))
