"""Shared test data: natural images, a seeded noise suite and PNG writing."""
import numpy as np
from PIL import Image
from skimage import data

from qgliqa.images import rgb_to_luma

NOISE_VARIANCES = (10.0, 40.0, 90.0, 160.0, 250.0)
SUITE_SEED = 20240611


def natural_images():
    return {
        "camera": data.camera().astype(np.float64),
        "coins": data.coins().astype(np.float64),
        "astronaut": rgb_to_luma(data.astronaut()),
    }


def noise_suite(img, variances=NOISE_VARIANCES, seed=SUITE_SEED):
    """One noisy copy of ``img`` per variance, all drawn from one seeded stream."""
    rng = np.random.default_rng(seed)
    return [np.clip(img + rng.normal(0.0, np.sqrt(v), img.shape), 0, 255) for v in variances]


def write_png(path, arr):
    Image.fromarray(np.clip(np.rint(arr), 0, 255).astype(np.uint8)).save(path)
    return path


#: (criterion, passed, detail) lines collected by the acceptance module.
ACCEPTANCE = []


def record(criterion, passed, detail=""):
    ACCEPTANCE.append((criterion, bool(passed), detail))
    return passed
