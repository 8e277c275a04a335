"""
Manifest for LIVE Release 2
===========================

Reads ``dmos.mat`` (fields ``dmos`` and ``orgs``) and the per-folder
``info.txt`` listings. The 982 DMOS entries are ordered jp2k (227),
jpeg (233), wn (174), gblur (174), fastfading (174); entries flagged in
``orgs`` are reference copies and are skipped, leaving 779 rows.

Usage: python convert_live.py /path/to/databaserelease2 > live.csv
"""

import csv
import sys
from pathlib import Path

from scipy.io import loadmat

FOLDERS = [("jp2k", 227), ("jpeg", 233), ("wn", 174), ("gblur", 174), ("fastfading", 174)]


def main(root):
    root = Path(root)
    mat = loadmat(root / "dmos.mat")
    dmos, orgs = mat["dmos"].ravel(), mat["orgs"].ravel()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["database", "distortion_type", "ref_path", "dist_path", "subjective"])
    offset = 0
    for folder, count in FOLDERS:
        refs = {}
        for line in (root / folder / "info.txt").read_text().splitlines():
            parts = line.split()
            if len(parts) >= 2:
                refs[parts[1]] = parts[0]
        for i in range(count):
            if not orgs[offset + i]:
                name = f"img{i + 1}.bmp"
                w.writerow(["LIVE", folder, root / "refimgs" / refs[name], root / folder / name,
                            f"{dmos[offset + i]:.6f}"])
        offset += count


if __name__ == "__main__":
    main(sys.argv[1])
