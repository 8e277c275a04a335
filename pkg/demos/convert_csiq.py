"""
Manifest for CSIQ
=================

CSIQ ships its scores as a spreadsheet. Export the per-image sheet to CSV
with at least the columns ``image,dst_type,dst_lev,dmos`` first. Images
are looked up as ``src_imgs/<image>.png`` and
``dst_imgs/<folder>/<image>.<TAG>.<lev>.png``. The folder and tag names
below match the common distribution; adjust ``LAYOUT`` if your copy
differs.

Usage: python convert_csiq.py /path/to/CSIQ scores.csv > csiq.csv
"""

import csv
import sys
from pathlib import Path

LAYOUT = {
    "noise": ("awgn", "AWGN"),
    "jpeg": ("jpeg", "JPEG"),
    "jpeg 2000": ("jpeg2000", "jpeg2000"),
    "fnoise": ("fnoise", "fnoise"),
    "blur": ("blur", "BLUR"),
    "contrast": ("contrast", "contrast"),
}


def main(root, scores):
    root = Path(root)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["database", "distortion_type", "ref_path", "dist_path", "subjective"])
    with open(scores, newline="") as fh:
        for row in csv.DictReader(fh):
            kind = row["dst_type"].strip().lower()
            folder, tag = LAYOUT[kind]
            image = row["image"].strip()
            ref = root / "src_imgs" / f"{image}.png"
            dist = root / "dst_imgs" / folder / f"{image}.{tag}.{int(float(row['dst_lev']))}.png"
            w.writerow(["CSIQ", folder, ref, dist, row["dmos"]])


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
