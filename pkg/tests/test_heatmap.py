import numpy as np
import pytest

from qpadc import write_heatmap_csv, write_heatmap_pgm

PROBS = np.array([
    [1.0, 0.0, 0.0, 0.0],
    [0.25, 0.5, 0.25, 0.0],
    [0.1, 0.2, 0.3, 0.4],
])


def test_csv_full_precision_round_trips(tmp_path):
    path = tmp_path / "trace.csv"
    matrix = PROBS * (1 / 3)   # force non-terminating decimals
    write_heatmap_csv(matrix, path)
    lines = path.read_text().splitlines()
    assert len(lines) == 3
    parsed = np.array([[float(v) for v in line.split(",")] for line in lines])
    assert np.array_equal(parsed, matrix)


def test_csv_compat_mode_fixes_six_decimals(tmp_path):
    path = tmp_path / "trace.csv"
    write_heatmap_csv(PROBS, path, compat6=True)
    first = path.read_text().splitlines()[0]
    assert first == "1.000000,0.000000,0.000000,0.000000"


def test_pgm_ascii_layout(tmp_path):
    path = tmp_path / "trace.pgm"
    write_heatmap_pgm(PROBS, path)
    tokens = path.read_text().split()
    assert tokens[:4] == ["P2", "4", "3", "255"]
    pixels = [int(v) for v in tokens[4:]]
    assert len(pixels) == 12
    assert pixels[0] == 255          # global peak maps to white
    assert pixels[1] == 0
    assert pixels[5] == 128          # 0.5 of peak rounds to 128


def test_pgm_binary_matches_ascii_pixels(tmp_path):
    ascii_path = tmp_path / "a.pgm"
    raw_path = tmp_path / "b.pgm"
    write_heatmap_pgm(PROBS, ascii_path)
    write_heatmap_pgm(PROBS, raw_path, binary=True)
    ascii_pixels = [int(v) for v in ascii_path.read_text().split()[4:]]
    raw = raw_path.read_bytes()
    header_end = raw.index(b"255\n") + 4
    assert raw[:2] == b"P5"
    assert list(raw[header_end:]) == ascii_pixels


def test_writers_reject_bad_input(tmp_path):
    with pytest.raises(ValueError):
        write_heatmap_csv(np.array([1.0, 2.0]), tmp_path / "x.csv")
    with pytest.raises(ValueError):
        write_heatmap_pgm(-PROBS, tmp_path / "x.pgm")
    with pytest.raises(ValueError):
        write_heatmap_pgm(np.zeros((2, 2)), tmp_path / "x.pgm")
    with pytest.raises(ValueError):
        write_heatmap_pgm(PROBS, tmp_path / "x.pgm", maxval=600)
