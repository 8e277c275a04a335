import numpy as np
import pytest
from scipy.ndimage import gaussian_filter
from skimage import data

from support import NOISE_VARIANCES, write_png


@pytest.fixture(scope="session")
def camera():
    return data.camera().astype(np.float64)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def synthetic_db(tmp_path, camera):
    """Two small 'databases' of noisy and blurred crops.

    The subjective score grows with distortion strength, like DMOS.
    """
    rows = ["database,distortion_type,ref_path,dist_path,subjective"]
    for db, (y, x) in {"ALPHA": (100, 180), "BETA": (260, 300)}.items():
        ref = camera[y:y + 80, x:x + 96]
        write_png(tmp_path / f"{db}_ref.png", ref)
        rng = np.random.default_rng(len(db))
        for level, var in enumerate(NOISE_VARIANCES):
            name = f"{db}_noise{level}.png"
            write_png(tmp_path / name, ref + rng.normal(0, np.sqrt(var), ref.shape))
            rows.append(f"{db},noise,{db}_ref.png,{name},{var}")
        for level in range(5):
            name = f"{db}_blur{level}.png"
            write_png(tmp_path / name, gaussian_filter(ref, 0.4 + 0.5 * level))
            rows.append(f"{db},blur,{db}_ref.png,{name},{10.0 * (level + 1)}")
    path = tmp_path / "manifest.csv"
    path.write_text("\n".join(rows) + "\n")
    return path


def pytest_terminal_summary(terminalreporter):
    from support import ACCEPTANCE

    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}")
