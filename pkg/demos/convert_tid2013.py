"""
Manifest for TID2013
====================

Expects the standard layout::

    TID2013/mos_with_names.txt       "<MOS> <file>" per line
    TID2013/reference_images/I01.BMP ...
    TID2013/distorted_images/i01_01_1.bmp ...

Usage: python convert_tid2013.py /path/to/TID2013 > tid2013.csv
"""

import csv
import sys
from pathlib import Path

TYPES = ["AWGN", "ANMC", "SCN", "MN", "HFN", "IMN", "QN", "GB", "DEN", "JPEG", "JP2K", "JGTE",
         "J2TE", "NEPN", "Block", "Mean shift", "Contrast", "CCS", "MGN", "CN", "LCN", "CQD",
         "Chr. abr.", "Sampling"]


def find(folder: Path, name: str) -> Path:
    # file name case varies between copies of the database
    for p in folder.iterdir():
        if p.name.lower() == name.lower():
            return p
    raise FileNotFoundError(folder / name)


def main(root):
    root = Path(root)
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["database", "distortion_type", "ref_path", "dist_path", "subjective"])
    for line in (root / "mos_with_names.txt").read_text().splitlines():
        if not line.strip():
            continue
        mos, name = line.split()
        ref_id, dist_id, _ = Path(name).stem.split("_")
        ref = find(root / "reference_images", f"I{ref_id[1:]}.BMP")
        dist = find(root / "distorted_images", name)
        w.writerow(["TID2013", TYPES[int(dist_id) - 1], ref, dist, mos])


if __name__ == "__main__":
    main(sys.argv[1])
