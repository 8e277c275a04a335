import csv
import math

import numpy as np
import pytest
from PIL import Image

from support import NOISE_VARIANCES, noise_suite, write_png
from qgliqa import bench
from qgliqa.bench import (EvalReport, ManifestRecord, ShiftCurve, count_hits, emit_report, emit_summary,
                          evaluate_database, evaluate_scores, load_manifest, read_report,
                          read_shift_report, shift_experiment, translate_crop)
from qgliqa.errors import DataValidationError, InvalidArgumentError
from qgliqa.images import load_image
from qgliqa.qgl import QglConfig, score_pair
from qgliqa.reference import TABLE2, TABLE2_HIT_NUMBER, TABLE2_METRICS

HEADER = "database,distortion_type,ref_path,dist_path,subjective\n"


def in_memory_suite(img):
    images = {"ref": img}
    records = []
    for i, (var, noisy) in enumerate(zip(NOISE_VARIANCES, noise_suite(img))):
        images[f"d{i}"] = noisy
        records.append(ManifestRecord("SUITE", "noise", "ref", f"d{i}", var))
    return records, lambda p: images[str(p)]


class TestManifest:
    def test_header_only(self, tmp_path):
        p = tmp_path / "m.csv"
        p.write_text(HEADER)
        assert load_manifest(p) == []

    def test_one_row_round_trip(self, tmp_path):
        write_png(tmp_path / "r.png", np.zeros((8, 8)))
        write_png(tmp_path / "d dist.png", np.ones((8, 8)))
        p = tmp_path / "m.csv"
        p.write_text(HEADER + 'LIVE,jp2k,r.png,"d dist.png",42.125\n')
        (rec,) = load_manifest(p)
        assert rec == ManifestRecord("LIVE", "jp2k", tmp_path / "r.png", tmp_path / "d dist.png", 42.125)

    def test_dimension_mismatch_names_row(self, tmp_path):
        write_png(tmp_path / "r.png", np.zeros((8, 8)))
        write_png(tmp_path / "ok.png", np.zeros((8, 8)))
        write_png(tmp_path / "bad.png", np.zeros((8, 9)))
        p = tmp_path / "m.csv"
        p.write_text(HEADER + "A,x,r.png,ok.png,1\nA,x,r.png,bad.png,2\n")
        with pytest.raises(DataValidationError) as err:
            load_manifest(p)
        assert err.value.rows == (3,)
        assert "line 3" in str(err.value) and "9x8" in str(err.value)

    def test_collects_all_bad_rows(self, tmp_path):
        write_png(tmp_path / "r.png", np.zeros((8, 8)))
        p = tmp_path / "m.csv"
        p.write_text(HEADER + "A,x,r.png,r.png,abc\nA,x,r.png,r.png,1\nA,x,r.png,missing.png,1\nA,x,r.png\n")
        with pytest.raises(DataValidationError) as err:
            load_manifest(p)
        assert err.value.rows == (2, 4, 5)

    def test_bad_header(self, tmp_path):
        p = tmp_path / "m.csv"
        p.write_text("ref,dist,mos\n")
        with pytest.raises(DataValidationError):
            load_manifest(p)


class TestImages:
    def test_rgb_to_luma(self, tmp_path):
        rgb = np.zeros((4, 5, 3), dtype=np.uint8)
        rgb[..., 0], rgb[..., 1], rgb[..., 2] = 200, 100, 50
        Image.fromarray(rgb).save(tmp_path / "c.bmp")
        np.testing.assert_allclose(load_image(tmp_path / "c.bmp"), 0.299 * 200 + 0.587 * 100 + 0.114 * 50)

    def test_gray(self, tmp_path):
        a = np.arange(20, dtype=np.uint8).reshape(4, 5)
        Image.fromarray(a).save(tmp_path / "g.png")
        np.testing.assert_array_equal(load_image(tmp_path / "g.png"), a.astype(float))


class TestTranslateCrop:
    def test_zero(self, rng):
        img = rng.uniform(0, 255, (5, 6))
        np.testing.assert_array_equal(translate_crop(img, 0, 0), img)

    def test_one_column(self):
        img = np.arange(9.0).reshape(3, 3)
        out = translate_crop(img, 1, 0)
        assert out.shape == (3, 2)
        np.testing.assert_array_equal(out, img[:, 1:])

    def test_companion_window(self):
        img = np.arange(20.0).reshape(4, 5)
        np.testing.assert_array_equal(translate_crop(img, -2, -1), img[:3, :3])
        np.testing.assert_array_equal(translate_crop(img, 2, 1), img[1:, 2:])

    def test_too_large(self):
        with pytest.raises(InvalidArgumentError):
            translate_crop(np.zeros((3, 3)), 3, 0)

    def test_only_zero_shift_is_perfect(self, camera):
        img = camera[100:164, 100:164]
        for d in range(4):
            s = score_pair(translate_crop(img, d, 0), translate_crop(img, -d, 0))
            if d == 0:
                assert s.mqgl == pytest.approx(1.0, abs=1e-12) and s.sqgl == pytest.approx(0.0, abs=1e-12)
            else:
                assert s.mqgl < 1.0 - 1e-3


class TestEvaluate:
    def test_rank_matched_pair(self):
        recs = [ManifestRecord("A", "x", "r", f"d{i}", float(i)) for i in range(2)]
        rep = evaluate_scores(recs, [{"mqgl": 0.9}, {"mqgl": 0.5}], ["mqgl"])
        assert rep.per_database["A"]["mqgl"] == 1.0

    def test_small_groups_are_undefined(self):
        recs = [ManifestRecord("A", "x", "r", "d0", 1.0), ManifestRecord("A", "y", "r", "d1", 2.0),
                ManifestRecord("A", "y", "r", "d2", 3.0)]
        rep = evaluate_scores(recs, [{"sqgl": 0.1}, {"sqgl": 0.2}, {"sqgl": 0.3}], ["sqgl"])
        assert math.isnan(rep.per_distortion[("A", "x")]["sqgl"])
        assert rep.per_distortion[("A", "y")]["sqgl"] == 1.0
        assert ("A", "x") in rep.group_counts

    def test_synthetic_database(self, synthetic_db):
        recs = load_manifest(synthetic_db)
        rep = evaluate_database(recs, metrics=["mqgl", "sqgl", "psnr"], threads=1)
        assert set(rep.per_database) == {"ALPHA", "BETA"}
        assert rep.counts == {"ALPHA": 10, "BETA": 10}
        for key, vals in rep.per_distortion.items():
            assert vals["sqgl"] == 1.0 and vals["mqgl"] == 1.0, key
        for m in rep.metrics:
            expected = (rep.per_database["ALPHA"][m] * 10 + rep.per_database["BETA"][m] * 10) / 20
            assert rep.weighted_average[m] == pytest.approx(expected, abs=1e-15)

    def test_parallel_equals_sequential(self, synthetic_db, tmp_path):
        recs = load_manifest(synthetic_db)
        a = evaluate_database(recs, threads=1)
        b = evaluate_database(recs, threads=4)
        emit_report(a, tmp_path / "a.csv")
        emit_report(b, tmp_path / "b.csv")
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_unknown_metric(self, synthetic_db):
        with pytest.raises(InvalidArgumentError):
            evaluate_database(load_manifest(synthetic_db), metrics=["ssim"])

    def test_empty(self):
        with pytest.raises(InvalidArgumentError):
            evaluate_database([])


class TestHits:
    def test_published_hit_numbers_recount(self):
        assert count_hits(TABLE2, TABLE2_METRICS) == TABLE2_HIT_NUMBER

    def test_nan_never_counts(self):
        table = {"g": {"a": math.nan, "b": 0.1, "c": 0.2, "d": 0.3, "e": 0.4}}
        assert count_hits(table, "abcde") == {"a": 0, "b": 0, "c": 1, "d": 1, "e": 1}

    def test_recount_from_emitted_table(self, synthetic_db, tmp_path):
        rep = evaluate_database(load_manifest(synthetic_db), metrics=["mqgl", "sqgl", "psnr"], threads=1)
        emit_report(rep, tmp_path / "r.csv")
        groups = {}
        with open(tmp_path / "r.csv") as fh:
            for row in csv.DictReader(fh):
                if row["distortion_type"]:
                    v = math.nan if row["srocc"] == "undefined" else float(row["srocc"])
                    groups.setdefault((row["database"], row["distortion_type"]), {})[row["metric"]] = v
        hits = 0
        for vals in groups.values():
            ranked = sorted((v for v in vals.values() if not math.isnan(v)), reverse=True)
            if not math.isnan(vals["sqgl"]) and vals["sqgl"] >= ranked[min(2, len(ranked) - 1)]:
                hits += 1
        assert rep.hit_number["sqgl"] == hits


class TestShift:
    def test_zero_displacement_matches_evaluation(self, synthetic_db):
        recs = load_manifest(synthetic_db)
        cfg = QglConfig.for_shift()
        rep = evaluate_database(recs, cfg, ["mqgl", "sqgl"], threads=1)
        curves = shift_experiment(recs, cfg, max_shift=3, threads=1)
        assert len(curves) == 4
        for c in curves:
            for m in ("mqgl", "sqgl"):
                assert c.curve(m)[0] == rep.per_database[c.database][m]

    def test_default_config_uses_unit_sigma(self, synthetic_db):
        recs = load_manifest(synthetic_db)
        rep = evaluate_database(recs, QglConfig(sigma=1.0), ["mqgl"], threads=1)
        (c,) = shift_experiment(recs[:10], max_shift=1, directions=["vertical"], metrics=["mqgl"], threads=1)
        assert c.curve("mqgl")[0] == rep.per_database["ALPHA"]["mqgl"]

    def test_too_small_records_excluded(self, tmp_path):
        write_png(tmp_path / "r.png", np.random.default_rng(0).uniform(0, 255, (12, 12)))
        write_png(tmp_path / "big.png", np.random.default_rng(1).uniform(0, 255, (40, 40)))
        for i in range(3):
            write_png(tmp_path / f"b{i}.png", np.random.default_rng(2 + i).uniform(0, 255, (40, 40)))
        p = tmp_path / "m.csv"
        p.write_text(HEADER + "A,x,r.png,r.png,1\n" + "".join(f"A,x,big.png,b{i}.png,{i}\n" for i in range(3)))
        curves = shift_experiment(load_manifest(p), max_shift=10, threads=1)
        assert all(c.excluded == 1 for c in curves)
        assert all(c.srocc.shape == (2, 11) for c in curves)

    def test_parallel_equals_sequential(self, synthetic_db, tmp_path):
        recs = load_manifest(synthetic_db)
        emit_report(shift_experiment(recs, max_shift=2, threads=1), tmp_path / "a.csv")
        emit_report(shift_experiment(recs, max_shift=2, threads=3), tmp_path / "b.csv")
        assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()

    def test_larger_scale_curve_dominates(self, camera):
        records, loader = in_memory_suite(camera)
        hi = shift_experiment(records, QglConfig(sigma=1.0), 5, metrics=["mqgl"], threads=1, loader=loader)
        lo = shift_experiment(records, QglConfig(sigma=0.5), 5, metrics=["mqgl"], threads=1, loader=loader)
        for a, b in zip(hi, lo):
            assert a.direction == b.direction
            assert np.all(a.curve("mqgl")[1:6] >= b.curve("mqgl")[1:6])


class TestReports:
    def test_empty_report(self, tmp_path):
        emit_report(EvalReport(metrics=("mqgl",)), tmp_path / "e.csv")
        assert (tmp_path / "e.csv").read_text() == "database,distortion_type,metric,n,srocc\n"

    def test_one_group(self, tmp_path):
        rep = EvalReport(metrics=("sqgl",), per_database={"LIVE": {"sqgl": 0.95741234}}, counts={"LIVE": 779})
        emit_report(rep, tmp_path / "o.csv")
        lines = (tmp_path / "o.csv").read_text().splitlines()
        assert lines == ["database,distortion_type,metric,n,srocc", "LIVE,,sqgl,779,0.957412"]

    def test_round_trip_and_order(self, synthetic_db, tmp_path):
        rep = evaluate_database(load_manifest(synthetic_db), metrics=["sqgl", "mqgl"], threads=1)
        emit_report(rep, tmp_path / "r.csv")
        parsed = read_report(tmp_path / "r.csv")
        for db, vals in rep.per_database.items():
            for m, v in vals.items():
                assert parsed[(db, "", m)] == round(v, 6)
        for (db, tag), vals in rep.per_distortion.items():
            for m, v in vals.items():
                assert parsed[(db, tag, m)] == round(v, 6)
        keys = list(parsed)
        assert keys == sorted(keys)

    def test_undefined_written_explicitly(self, tmp_path):
        rep = EvalReport(metrics=("mqgl",), per_distortion={("A", "x"): {"mqgl": math.nan}},
                         group_counts={("A", "x"): 1})
        emit_report(rep, tmp_path / "u.csv")
        assert "A,x,mqgl,1,undefined" in (tmp_path / "u.csv").read_text()
        assert math.isnan(read_report(tmp_path / "u.csv")[("A", "x", "mqgl")])

    def test_shift_round_trip(self, tmp_path):
        c = ShiftCurve("LIVE", "vertical", np.arange(3), ("mqgl", "sqgl"),
                       np.array([[0.9, 0.8, 0.7], [0.95, 0.5, 0.25]]))
        emit_report(c, tmp_path / "s.csv")
        lines = (tmp_path / "s.csv").read_text().splitlines()
        assert lines[0] == "database,direction,displacement,metric,srocc"
        assert len(lines) == 7
        assert read_shift_report(tmp_path / "s.csv")[("LIVE", "vertical", 2, "sqgl")] == 0.25

    def test_summary(self, tmp_path):
        rep = EvalReport(metrics=("mqgl", "sqgl"), weighted_average={"mqgl": 0.5, "sqgl": math.nan},
                         hit_number={"mqgl": 3, "sqgl": 0})
        emit_summary(rep, tmp_path / "s.csv")
        assert (tmp_path / "s.csv").read_text() == (
            "metric,weighted_average,hit_number\nmqgl,0.500000,3\nsqgl,undefined,0\n")

    def test_io_error_has_path(self, tmp_path):
        with pytest.raises(OSError, match="nope"):
            emit_report(EvalReport(metrics=("mqgl",)), tmp_path / "nope" / "r.csv")
