"""
Running the benchmark harness on a manifest
===========================================

A manifest is a CSV with one row per distorted image:
``database,distortion_type,ref_path,dist_path,subjective``.
This demo builds a tiny synthetic one, evaluates it and runs the shift
experiment. Real databases work the same way once converted (see the
``convert_*.py`` scripts in this directory).
"""

import tempfile
from pathlib import Path

import numpy as np
from PIL import Image
from scipy.ndimage import gaussian_filter
from skimage import data

from qgliqa.bench import emit_report, emit_summary, evaluate_database, load_manifest, shift_experiment

out = Path(tempfile.mkdtemp(prefix="qgliqa_demo_"))
ref = data.camera()[100:228, 150:278].astype(float)
rng = np.random.default_rng(1)


def save(name, arr):
    Image.fromarray(np.clip(np.rint(arr), 0, 255).astype(np.uint8)).save(out / name)


save("ref.png", ref)
rows = ["database,distortion_type,ref_path,dist_path,subjective"]
for i, var in enumerate((5, 20, 60, 120, 200, 300)):
    save(f"wn{i}.png", ref + rng.normal(0, np.sqrt(var), ref.shape))
    rows.append(f"DEMO,wn,ref.png,wn{i}.png,{var / 10}")
for i, width in enumerate((0.5, 0.8, 1.2, 1.8, 2.5, 3.5)):
    save(f"gb{i}.png", gaussian_filter(ref, width))
    rows.append(f"DEMO,gb,ref.png,gb{i}.png,{10 * width}")
(out / "manifest.csv").write_text("\n".join(rows) + "\n")

records = load_manifest(out / "manifest.csv")
report = evaluate_database(records, metrics=["mqgl", "sqgl", "psnr"])
print("per database:", report.per_database)
print("per distortion:", report.per_distortion)
print("hit number:", report.hit_number)

emit_report(report, out / "report.csv")
emit_summary(report, out / "summary.csv")
print((out / "report.csv").read_text())

curves = shift_experiment(records, max_shift=4)
for c in curves:
    print(c.direction, np.round(c.curve("mqgl"), 3))
emit_report(curves, out / "shift.csv")
print("outputs in", out)
