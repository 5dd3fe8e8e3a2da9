"""Writers for probability traces: CSV for analysis, PGM for viewing.

Both formats put one row per step (step 0 first) and one column per
cell. CSV values default to 17 significant digits so the floats
round-trip exactly; compat6 trims to 6 decimal places. PGM grayscale is
scaled linearly from [0, max probability in the trace] to [0, maxval],
so the brightest pixel marks the peak of the whole evolution.
"""

from __future__ import annotations

import os

import numpy as np

from .validation import check_probability_matrix


def write_heatmap_csv(probs: np.ndarray, path: str | os.PathLike,
                      compat6: bool = False) -> None:
    probs = check_probability_matrix(probs)
    fmt = "{:.6f}" if compat6 else "{:.17g}"
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for row in probs:
            handle.write(",".join(fmt.format(value) for value in row))
            handle.write("\n")


def write_heatmap_pgm(probs: np.ndarray, path: str | os.PathLike,
                      binary: bool = False, maxval: int = 255) -> None:
    probs = check_probability_matrix(probs)
    if not 1 <= maxval <= 255:
        raise ValueError(f"maxval must lie in [1, 255], got {maxval}")
    peak = probs.max()
    if peak <= 0:
        raise ValueError("trace has no probability mass to scale against")
    pixels = np.rint(probs / peak * maxval).astype(np.uint8)
    height, width = pixels.shape
    header = f"P5\n{width} {height}\n{maxval}\n" if binary \
        else f"P2\n{width} {height}\n{maxval}\n"
    if binary:
        with open(path, "wb") as handle:
            handle.write(header.encode("ascii"))
            handle.write(pixels.tobytes())
    else:
        with open(path, "w", encoding="ascii", newline="\n") as handle:
            handle.write(header)
            for row in pixels:
                handle.write(" ".join(str(int(value)) for value in row))
                handle.write("\n")
