"""Time evolution of a single particle on a ring of cells.

One step applies the block unitary to every disjoint cell pair. The
pairing alternates with the step index t (counted from 1): odd steps pair
(0,1), (2,3), ...; even steps pair (1,2), (3,4), ... plus the wrap pair
(last, 0). Two consecutive steps therefore commute with translation by
two cells, which is what lets a localized packet propagate.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .unitary import UnitaryParams, block_unitary
from .validation import check_cell_count, check_cell_index, check_int, check_state


def basis_state(num_cells: int, cell: int) -> np.ndarray:
    """Unit amplitude on one cell, zero elsewhere."""
    num_cells = check_cell_count(num_cells)
    cell = check_cell_index(cell, num_cells)
    state = np.zeros(num_cells, dtype=complex)
    state[cell] = 1.0
    return state


def step(state: np.ndarray, t: int, unitary: np.ndarray) -> np.ndarray:
    """Apply the step-t pairing of the block unitary; returns a new array.

    The caller is trusted on state shape (hot path); use evolve for a
    validated entry point.
    """
    t = check_int("t", t, minimum=1)
    ut = unitary.T
    if t % 2 == 1:
        return (state.reshape(-1, 2) @ ut).ravel()
    # Even pairing is the odd one shifted down a cell, wrap included.
    shifted = np.roll(state, -1)
    return np.roll((shifted.reshape(-1, 2) @ ut).ravel(), 1)


def evolve(state: np.ndarray, params: UnitaryParams, steps: int) -> np.ndarray:
    """Full trace of shape (steps + 1, num_cells); row t is the state after t steps."""
    state = check_state(state)
    steps = check_int("steps", steps, minimum=1)
    unitary = block_unitary(params)
    trace = np.empty((steps + 1, state.shape[0]), dtype=complex)
    trace[0] = state
    current = state
    for t in range(1, steps + 1):
        current = step(current, t, unitary)
        trace[t] = current
    return trace


def iter_steps(state: np.ndarray, params: UnitaryParams,
               steps: int) -> Iterator[np.ndarray]:
    """Yield the state after each step without keeping the whole trace."""
    state = check_state(state)
    steps = check_int("steps", steps, minimum=1)
    unitary = block_unitary(params)
    for t in range(1, steps + 1):
        state = step(state, t, unitary)
        yield state


def probabilities(states: np.ndarray) -> np.ndarray:
    """Squared magnitudes of a state vector or a trace of them."""
    states = np.asarray(states, dtype=complex)
    return np.abs(states) ** 2
