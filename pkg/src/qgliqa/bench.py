"""Database evaluation and shift-robustness experiments.

Databases are described by a CSV manifest with the header
``database,distortion_type,ref_path,dist_path,subjective``. Relative paths
resolve against the manifest's directory.

All SROCC values reported here are absolute values, so metrics whose
scores fall as quality rises (sQGL, or anything scored against DMOS)
read the same way as those that rise with it.
"""
import csv
import logging
import math
import os
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DataValidationError, InvalidArgumentError, UndefinedCorrelationError
from .filters import kernel_radius
from .images import as_gray, load_image
from .qgl import QglConfig, score_pair
from .stats import psnr, srocc, weighted_average

logger = logging.getLogger(__name__)

MANIFEST_FIELDS = ("database", "distortion_type", "ref_path", "dist_path", "subjective")
METRICS = ("mqgl", "sqgl", "psnr")
DIRECTIONS = ("horizontal", "vertical")
#: Value written to report CSVs for undefined correlations.
UNDEFINED = "undefined"


@dataclass(frozen=True)
class ManifestRecord:
    database: str
    distortion_type: str
    ref_path: Path
    dist_path: Path
    subjective: float


@dataclass
class EvalReport:
    """SROCC tables for one evaluation run.

    ``per_database[db][metric]`` and ``per_distortion[(db, tag)][metric]``
    hold ``|SROCC|`` or NaN where undefined. ``counts`` maps a database
    to its number of pairs and ``group_counts`` does the same per
    ``(db, tag)``.
    """

    metrics: Tuple[str, ...]
    per_database: Dict[str, Dict[str, float]] = field(default_factory=dict)
    per_distortion: Dict[Tuple[str, str], Dict[str, float]] = field(default_factory=dict)
    counts: Dict[str, int] = field(default_factory=dict)
    group_counts: Dict[Tuple[str, str], int] = field(default_factory=dict)
    weighted_average: Dict[str, float] = field(default_factory=dict)
    hit_number: Dict[str, int] = field(default_factory=dict)


@dataclass
class ShiftCurve:
    database: str
    direction: str
    displacements: np.ndarray
    metrics: Tuple[str, ...]
    srocc: np.ndarray  # (len(metrics), len(displacements))
    excluded: int = 0

    def curve(self, metric: str) -> np.ndarray:
        return self.srocc[self.metrics.index(metric)]


def load_manifest(path, validate_images: bool = True) -> List[ManifestRecord]:
    """Read and validate a manifest CSV.

    The load is all-or-nothing: every bad row is collected and reported in
    one :class:`DataValidationError` whose ``rows`` lists their line numbers.
    With ``validate_images`` each pair is decoded to check that both files
    exist and share dimensions.
    """
    path = Path(path)
    base = path.parent
    records, problems = [], []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataValidationError(f"{path}: missing header", rows=[1]) from None
        header = [h.strip() for h in header]
        if tuple(header) != MANIFEST_FIELDS:
            raise DataValidationError(
                f"{path}:1: expected header {','.join(MANIFEST_FIELDS)}, got {','.join(header)}", rows=[1]
            )
        for line_no, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(MANIFEST_FIELDS):
                problems.append((line_no, f"expected {len(MANIFEST_FIELDS)} fields, got {len(row)}"))
                continue
            db, tag, ref, dist, subj = (c.strip() for c in row)
            try:
                subjective = float(subj)
            except ValueError:
                problems.append((line_no, f"subjective score {subj!r} is not a number"))
                continue
            if not math.isfinite(subjective):
                problems.append((line_no, "subjective score is not finite"))
                continue
            records.append((line_no, ManifestRecord(db, tag, base / ref, base / dist, subjective)))
    if validate_images:
        for line_no, rec in records:
            msg = _image_problem(rec)
            if msg:
                problems.append((line_no, msg))
    if problems:
        problems.sort()
        detail = "; ".join(f"line {n}: {m}" for n, m in problems)
        raise DataValidationError(f"{path}: {len(problems)} invalid row(s): {detail}",
                                  rows=[n for n, _ in problems])
    return [rec for _, rec in records]


def _image_problem(rec: ManifestRecord) -> Optional[str]:
    try:
        from PIL import Image

        sizes = []
        for p in (rec.ref_path, rec.dist_path):
            with Image.open(p) as im:
                sizes.append(im.size)
    except FileNotFoundError as exc:
        return f"missing image {exc.filename}"
    except OSError as exc:
        return f"cannot decode image: {exc}"
    if sizes[0] != sizes[1]:
        return f"reference is {sizes[0][0]}x{sizes[0][1]} but distorted is {sizes[1][0]}x{sizes[1][1]}"
    return None


def translate_crop(img, dx: int, dy: int) -> np.ndarray:
    """Window of ``img`` displaced by ``(dx, dy)`` over the common overlap.

    The result has shape ``(H - |dy|, W - |dx|)``. Pair it with
    ``translate_crop(img, -dx, -dy)`` (for non-negative shifts, the
    top-left crop of the same size) to compare the image with itself
    moved by exactly ``(dx, dy)``.
    """
    img = as_gray(img)
    h, w = img.shape
    dx, dy = int(dx), int(dy)
    if abs(dx) >= w or abs(dy) >= h:
        raise InvalidArgumentError(f"displacement ({dx}, {dy}) does not fit a {w}x{h} image")
    return img[max(dy, 0):h - max(-dy, 0), max(dx, 0):w - max(-dx, 0)]


def _score(ref, dist, cfg: QglConfig, metrics) -> Dict[str, float]:
    out = {}
    if "mqgl" in metrics or "sqgl" in metrics:
        s = score_pair(ref, dist, cfg)
        out["mqgl"], out["sqgl"] = s.mqgl, s.sqgl
    if "psnr" in metrics:
        out["psnr"] = psnr(ref, dist)
    return {m: out[m] for m in metrics}


def _check_metrics(metrics) -> Tuple[str, ...]:
    metrics = tuple(metrics)
    unknown = [m for m in metrics if m not in METRICS]
    if unknown or not metrics:
        raise InvalidArgumentError(f"unknown or empty metric selection: {unknown or metrics}")
    return tuple(m for m in METRICS if m in metrics)


def _parallel_map(fn, items, threads: Optional[int]):
    # Executor.map preserves input order, so results never depend on scheduling.
    if threads is None:
        threads = os.cpu_count() or 1
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def abs_srocc(objective, subjective) -> float:
    """``|SROCC|``, or NaN if fewer than two pairs or a constant vector."""
    objective = np.asarray(objective, dtype=np.float64)
    if objective.size < 2:
        return math.nan
    # PSNR is infinite for identical pairs; rank them above every finite score.
    if np.any(np.isinf(objective)):
        finite = objective[np.isfinite(objective)]
        top = (finite.max() if finite.size else 0.0) + 1.0
        objective = np.where(np.isposinf(objective), top, objective)
    try:
        return abs(srocc(objective, subjective))
    except UndefinedCorrelationError:
        return math.nan


def count_hits(table: Dict, metrics: Sequence[str], top: int = 3) -> Dict[str, int]:
    """Count rows of ``table`` in which each metric ranks among the top ``top``.

    ``table`` maps a group key to ``{metric: value}``. A metric is a hit in a
    row when fewer than ``top`` other metrics beat it strictly, so ties at
    the cut-off all count. NaN entries never count and never beat anything.
    """
    hits = {m: 0 for m in metrics}
    for row in table.values():
        vals = {m: row.get(m, math.nan) for m in metrics}
        for m in metrics:
            v = vals[m]
            if math.isnan(v):
                continue
            better = sum(1 for o in metrics if o != m and not math.isnan(vals[o]) and vals[o] > v)
            if better < top:
                hits[m] += 1
    return hits


def evaluate_scores(records: Sequence[ManifestRecord], scores: Sequence[Dict[str, float]],
                    metrics: Sequence[str]) -> EvalReport:
    """Aggregate precomputed per-record scores into an :class:`EvalReport`."""
    metrics = _check_metrics(metrics)
    by_db, by_group = defaultdict(list), defaultdict(list)
    for i, rec in enumerate(records):
        by_db[rec.database].append(i)
        by_group[(rec.database, rec.distortion_type)].append(i)
    subj = np.array([r.subjective for r in records], dtype=np.float64)

    def table(groups):
        out = {}
        for key in sorted(groups):
            idx = groups[key]
            out[key] = {m: abs_srocc([scores[i][m] for i in idx], subj[idx]) for m in metrics}
        return out

    report = EvalReport(metrics=metrics)
    report.per_database = table(by_db)
    report.per_distortion = table(by_group)
    report.counts = {db: len(by_db[db]) for db in sorted(by_db)}
    report.group_counts = {key: len(by_group[key]) for key in sorted(by_group)}
    for m in metrics:
        vals = [report.per_database[db][m] for db in report.counts]
        defined = [(v, report.counts[db]) for v, db in zip(vals, report.counts) if not math.isnan(v)]
        report.weighted_average[m] = (
            weighted_average([v for v, _ in defined], [w for _, w in defined]) if defined else math.nan
        )
    report.hit_number = count_hits(report.per_distortion, metrics)
    return report


def evaluate_database(records: Sequence[ManifestRecord], cfg: QglConfig = QglConfig(),
                      metrics: Sequence[str] = ("mqgl", "sqgl"),
                      threads: Optional[int] = None, loader=load_image) -> EvalReport:
    """Score every record and compute the per-database and per-distortion tables."""
    if not records:
        raise InvalidArgumentError("no records to evaluate")
    metrics = _check_metrics(metrics)

    def job(rec):
        return _score(loader(rec.ref_path), loader(rec.dist_path), cfg, metrics)

    scores = _parallel_map(job, list(records), threads)
    return evaluate_scores(records, scores, metrics)


def _shift_window(img, d: int, direction: str, moved: bool) -> np.ndarray:
    sign = 1 if moved else -1
    if direction == "horizontal":
        return translate_crop(img, sign * d, 0)
    return translate_crop(img, 0, sign * d)


def shift_experiment(records: Sequence[ManifestRecord], cfg: Optional[QglConfig] = None,
                     max_shift: int = 10, directions: Sequence[str] = DIRECTIONS,
                     metrics: Sequence[str] = ("mqgl", "sqgl"),
                     threads: Optional[int] = None, loader=load_image) -> List[ShiftCurve]:
    """SROCC against subjective scores as the reference is translated.

    For each displacement ``d`` in ``0..max_shift`` the reference is replaced
    by its window moved ``d`` pixels right (horizontal) or down (vertical),
    and the distorted image by the unmoved window of the same size. One
    curve is returned per ``(database, direction)``. Records too small for
    ``max_shift`` are skipped and counted in :attr:`ShiftCurve.excluded`.
    """
    if not records:
        raise InvalidArgumentError("no records to evaluate")
    if max_shift < 0:
        raise InvalidArgumentError("max_shift must be >= 0")
    cfg = QglConfig.for_shift() if cfg is None else cfg
    metrics = _check_metrics(metrics)
    for d in directions:
        if d not in DIRECTIONS:
            raise InvalidArgumentError(f"unknown direction {d!r}")
    displacements = np.arange(max_shift + 1)
    # The kernels must still fit the cropped window.
    radius = max(kernel_radius(cfg.sigma), kernel_radius(cfg.norm_scale_mult * cfg.sigma))

    def job(rec):
        ref, dist = loader(rec.ref_path), loader(rec.dist_path)
        if ref.shape != dist.shape:
            raise DataValidationError(f"{rec.dist_path}: dimensions differ from {rec.ref_path}")
        if min(ref.shape) - max_shift < radius:
            return None
        out = {}
        for direction in directions:
            for d in displacements:
                r = _shift_window(ref, d, direction, moved=True)
                t = _shift_window(dist, d, direction, moved=False)
                out[(direction, int(d))] = _score(r, t, cfg, metrics)
        return out

    results = _parallel_map(job, list(records), threads)
    curves = []
    for db in sorted({r.database for r in records}):
        idx = [i for i, r in enumerate(records) if r.database == db and results[i] is not None]
        excluded = sum(1 for i, r in enumerate(records) if r.database == db and results[i] is None)
        if excluded:
            logger.warning("%s: %d record(s) too small for max_shift=%d were excluded", db, excluded, max_shift)
        subj = np.array([records[i].subjective for i in idx])
        for direction in directions:
            table = np.full((len(metrics), displacements.size), math.nan)
            for j, d in enumerate(displacements):
                for mi, m in enumerate(metrics):
                    table[mi, j] = abs_srocc([results[i][(direction, int(d))][m] for i in idx], subj)
            curves.append(ShiftCurve(db, direction, displacements, metrics, table, excluded))
    return curves


def _fmt(v) -> str:
    return UNDEFINED if math.isnan(v) else f"{v:.6f}"


def _parse(s: str) -> float:
    return math.nan if s == UNDEFINED else float(s)


REPORT_HEADER = ["database", "distortion_type", "metric", "n", "srocc"]
SUMMARY_HEADER = ["metric", "weighted_average", "hit_number"]
SHIFT_HEADER = ["database", "direction", "displacement", "metric", "srocc"]


def _write_rows(path, header, rows) -> None:
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(header)
            w.writerows(rows)
    except OSError as exc:
        raise OSError(f"cannot write report {path}: {exc.strerror or exc}") from exc


def report_rows(report: EvalReport) -> List[list]:
    """Rows of the group table; whole-database rows have an empty distortion tag."""
    rows = []
    for db, vals in report.per_database.items():
        for m, v in vals.items():
            rows.append([db, "", m, report.counts.get(db, 0), v])
    for (db, tag), vals in report.per_distortion.items():
        for m, v in vals.items():
            rows.append([db, tag, m, report.group_counts.get((db, tag), 0), v])
    rows.sort(key=lambda r: (r[0], r[1], r[2]))
    return [[db, tag, m, str(n), _fmt(v)] for db, tag, m, n, v in rows]


def emit_report(report, path) -> None:
    """Write an :class:`EvalReport` group table or shift curves as CSV.

    Values carry 6 fractional digits; undefined correlations are written
    as ``undefined``. Rows are sorted so identical inputs give identical
    bytes. ``report`` may be an :class:`EvalReport`, a :class:`ShiftCurve`
    or a list of shift curves.
    """
    if isinstance(report, EvalReport):
        _write_rows(path, REPORT_HEADER, report_rows(report))
        return
    curves = [report] if isinstance(report, ShiftCurve) else list(report)
    rows = []
    for c in curves:
        for j, d in enumerate(c.displacements):
            for mi, m in enumerate(c.metrics):
                rows.append((c.database, c.direction, int(d), m, c.srocc[mi, j]))
    rows.sort(key=lambda r: r[:4])
    _write_rows(path, SHIFT_HEADER, [[db, dr, str(d), m, _fmt(v)] for db, dr, d, m, v in rows])


def emit_summary(report: EvalReport, path) -> None:
    """Write the weighted average and hit number of each metric."""
    rows = [[m, _fmt(report.weighted_average.get(m, math.nan)), str(report.hit_number.get(m, 0))]
            for m in sorted(report.metrics)]
    _write_rows(path, SUMMARY_HEADER, rows)


def read_report(path) -> Dict[Tuple[str, str, str], float]:
    """Parse a group table back into ``{(database, tag, metric): srocc}``."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        return {(r["database"], r["distortion_type"], r["metric"]): _parse(r["srocc"]) for r in reader}


def read_shift_report(path) -> Dict[Tuple[str, str, int, str], float]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        return {(r["database"], r["direction"], int(r["displacement"]), r["metric"]): _parse(r["srocc"])
                for r in reader}
