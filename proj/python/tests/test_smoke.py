import math
import os
import subprocess

import pytest

import mchords


def test_gauge_and_lm():
    square = mchords.UnitDisk.load("builtin:square")
    assert square.gauge((3.0, 1.0)) == pytest.approx(3.0)
    assert mchords.lm(square, 0.0) == pytest.approx(3.0)
    circle = mchords.UnitDisk.load("builtin:euclidean")
    assert mchords.lm(circle, 0.3) == pytest.approx(2 * math.pi / 3, rel=1e-6)


def test_sweep_of_hexagon_is_flat():
    prof = mchords.lm_sweep(mchords.UnitDisk.load("builtin:hexagon"), 60)
    assert prof["min"] == pytest.approx(2.0)
    assert prof["max"] == pytest.approx(2.0)


def test_chord_checker():
    circle = mchords.UnitDisk.load("builtin:euclidean")
    assert mchords.check_increasing_chords(circle, [(0, 0), (1, 0.2), (2, 0)])["holds"]
    bad = mchords.check_increasing_chords(circle, [(0, 0), (1, 0), (0.5, 0.1)])
    assert not bad["holds"]
    assert bad["witnesses"]


def test_involute_and_convexify():
    circle = mchords.UnitDisk.load("builtin:euclidean", 16384)
    thetas, pts = mchords.involute(circle, circle, (0.0, -1.0), 0.0, math.pi, 64)
    x, y = pts[-1]
    assert thetas[-1] == pytest.approx(math.pi)
    assert x == pytest.approx(math.pi, abs=1e-5)
    assert y == pytest.approx(1.0, abs=1e-5)
    out = mchords.convexify([(0, 0), (1, 0.1), (2, 1.0), (3, 0)])
    assert out[0] == (0, 0) and out[-1] == (3, 0)


def test_hypercube():
    assert len(mchords.hypercube_curve(4)) == 16
    assert mchords.check_hypercube(4)["holds"]


def test_errors_raise():
    with pytest.raises(mchords.MchordsError):
        mchords.UnitDisk.load("builtin:nothing")
    with pytest.raises(mchords.MchordsError):
        mchords.hypercube_curve(0)


def test_cli_binary():
    exe = os.environ.get("MCHORDS_BIN")
    if not exe:
        pytest.skip("MCHORDS_BIN not set")
    out = subprocess.run([exe, "hypercube", "-d", "3", "--check"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "length=7 increasing_chords=OK"
