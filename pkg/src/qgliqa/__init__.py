"""Shift-insensitive full-reference image quality assessment with QGL features.

The QGL feature is the quadratic sum of divisively normalized gradient
magnitude and Laplacian-of-Gaussian responses. Two pooled scores are
provided: ``mqgl`` (mean similarity, higher is better) and ``sqgl``
(similarity deviation, higher is worse).

>>> import numpy as np
>>> from qgliqa import score_pair
>>> ref = np.random.default_rng(0).uniform(0, 255, (32, 32))
>>> score_pair(ref, ref)
Scores(mqgl=1.0, sqgl=0.0)
"""
from .bench import (EvalReport, ManifestRecord, ShiftCurve, emit_report, evaluate_database,
                    load_manifest, shift_experiment, translate_crop)
from .edge_analysis import edge_response, ideal_k_curves, r_derivative, r_profile
from .errors import (DataValidationError, DegenerateInputError, InvalidArgumentError,
                     InvalidParameterError, QglError, UndefinedCorrelationError)
from .filters import Kernel2D, convolve, make_dx, make_dy, make_gaussian, make_log
from .images import as_gray, load_image
from .qgl import (FeaturePair, QglConfig, Scores, divisive_normalize, gradient_magnitude,
                  log_response, mqgl, qgl_feature, score_pair, similarity_map, sqgl)
from .stats import psnr, srocc, weighted_average

__version__ = "0.1.0"
