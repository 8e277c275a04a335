"""
Scoring distorted images with mQGL and sQGL
===========================================

Both scores compare the QGL maps of a reference and a distorted image.
mQGL is the mean similarity (1 for identical images, lower is worse);
sQGL is the spread of the similarity map (0 for identical images,
higher is worse).
"""

import numpy as np
from scipy.ndimage import gaussian_filter
from skimage import data

from qgliqa import QglConfig, psnr, qgl_feature, score_pair

ref = data.camera().astype(float)

# An image compared with itself is perfect on both scales.
print("identical:", score_pair(ref, ref))

# Increasing white noise: mQGL falls and sQGL rises.
rng = np.random.default_rng(0)
for var in (10, 40, 90, 160, 250):
    noisy = np.clip(ref + rng.normal(0, np.sqrt(var), ref.shape), 0, 255)
    s = score_pair(ref, noisy)
    print(f"noise var {var:4d}: mqgl={s.mqgl:.4f} sqgl={s.sqgl:.4f} psnr={psnr(ref, noisy):.2f} dB")

# Blur reads the same way.
for width in (0.5, 1.0, 2.0):
    s = score_pair(ref, gaussian_filter(ref, width))
    print(f"blur {width}: mqgl={s.mqgl:.4f} sqgl={s.sqgl:.4f}")

# The feature maps themselves are available for inspection.
f = qgl_feature(ref)
print("QGL map range:", f.q.min(), f.q.max())

# Parameters live in QglConfig; k follows sigma unless given explicitly.
cfg = QglConfig(sigma=1.0)
print(cfg)

# Inputs must be on the [0, 255] scale. Rescale [0, 1] data before scoring.
unit = ref / 255.0
print("rescaled:", score_pair(unit * 255.0, unit * 255.0))
