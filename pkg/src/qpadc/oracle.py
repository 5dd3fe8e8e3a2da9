"""Slow reference implementations used to cross-check the fast kernels.

The dense route materializes each step as an explicit num_cells by
num_cells matrix and evolves by matrix-vector products. It shares no
stepping code with the pairwise kernel, so agreement between the two is
real evidence rather than an identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .unitary import UnitaryParams, block_unitary
from .validation import check_cell_count, check_int, check_state

PARITIES = ("odd", "even")


def dense_step_matrix(params: UnitaryParams, parity: str,
                      num_cells: int) -> np.ndarray:
    """Explicit one-step operator for the given pairing parity."""
    if parity not in PARITIES:
        raise ValueError(f"parity must be one of {PARITIES}, got {parity!r}")
    num_cells = check_cell_count(num_cells)
    block = block_unitary(params)
    matrix = np.zeros((num_cells, num_cells), dtype=complex)
    offset = 0 if parity == "odd" else 1
    for k in range(num_cells // 2):
        a = (2 * k + offset) % num_cells
        b = (a + 1) % num_cells
        matrix[a, a] = block[0, 0]
        matrix[a, b] = block[0, 1]
        matrix[b, a] = block[1, 0]
        matrix[b, b] = block[1, 1]
    return matrix


def dense_evolve(state: np.ndarray, params: UnitaryParams,
                 steps: int) -> np.ndarray:
    """Trace of shape (steps + 1, num_cells) via dense matrix products."""
    state = check_state(state)
    steps = check_int("steps", steps, minimum=1)
    num_cells = state.shape[0]
    odd = dense_step_matrix(params, "odd", num_cells)
    even = dense_step_matrix(params, "even", num_cells)
    trace = np.empty((steps + 1, num_cells), dtype=complex)
    trace[0] = state
    current = state
    for t in range(1, steps + 1):
        current = (odd if t % 2 == 1 else even) @ current
        trace[t] = current
    return trace


@dataclass(frozen=True)
class SpeedEstimate:
    """Least-squares drift rate of the probability peak, in cells per step."""

    speed: float
    window: tuple[int, int]
    method: str


def measure_speed(trace: np.ndarray, window: tuple[int, int] = (1, 64),
                  tie_tol: float = 1e-12) -> SpeedEstimate:
    """Fit the peak position over a step window and return its slope.

    The peak is the probability argmax; ties within tie_tol resolve to
    the candidate cyclically nearest the previous peak, and positions
    are unwrapped by accumulating the shortest cyclic displacement per
    step, so the fit is meaningful on a ring. The window must stop
    before the packet first wraps or interferes with itself.
    """
    trace = np.asarray(trace)
    if trace.ndim != 2:
        raise ValueError(f"trace must be 2-D, got shape {trace.shape}")
    start, end = window
    start = check_int("window start", start, minimum=0)
    end = check_int("window end", end, minimum=0)
    if end >= trace.shape[0]:
        raise ValueError(
            f"window end {end} exceeds the trace's last step {trace.shape[0] - 1}")
    if end - start + 1 < 4:
        raise ValueError("window must cover at least 4 steps for a stable fit")

    probs = np.abs(trace) ** 2
    num_cells = trace.shape[1]

    def peak_cell(row: np.ndarray, previous: int | None) -> int:
        best = float(row.max())
        candidates = np.flatnonzero(row >= best - tie_tol)
        if previous is None or candidates.size == 1:
            return int(candidates[0])
        cyc = np.abs((candidates - previous + num_cells // 2) % num_cells
                     - num_cells // 2)
        return int(candidates[np.argmin(cyc)])

    # Unwrap: accumulate the signed shortest cyclic hop between steps.
    positions = np.empty(end - start + 1, dtype=float)
    previous = peak_cell(probs[start], None)
    unwrapped = float(previous)
    positions[0] = unwrapped
    for t in range(start + 1, end + 1):
        cell = peak_cell(probs[t], previous)
        hop = (cell - previous + num_cells // 2) % num_cells - num_cells // 2
        unwrapped += hop
        positions[t - start] = unwrapped
        previous = cell

    steps = np.arange(start, end + 1, dtype=float)
    steps_c = steps - steps.mean()
    slope = float((steps_c @ (positions - positions.mean())) / (steps_c @ steps_c))
    return SpeedEstimate(
        speed=slope,
        window=(start, end),
        method="argmax peak tracking, least-squares slope of unwrapped position",
    )
