"""Reading a class out of the particle's probability distribution.

Direct mode starts the particle at the cell holding the input and sums
probability over the partition's zero-class cells. Rotated mode exploits
translation covariance: one evolution from cell 0 serves every input, and
sample i (the input whose start cell is i) instead reads the partition
rotated by i, position p consulting partition bit (p - i) mod L.

The one-class mass is always the exact complement 1 - zero_mass so the
two masses sum to 1 by construction; a sample sitting exactly at 0.5
belongs to neither class and counts against every target.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coding import cell_for_input, majority_table, partition_from_z
from .evolution import basis_state, evolve, iter_steps
from .unitary import UnitaryParams
from .validation import (check_code, check_digit_count, check_int,
                         check_partition_value, check_probability_matrix)


@dataclass(frozen=True)
class FitnessReport:
    """Best per-step score of a rule over a whole evolution.

    fitness counts correctly classified samples (max 2^n) at the best
    step; best_step is the earliest step attaining it; per_input_correct
    is indexed by start cell, which under the binary code is the input
    value itself and under Gray holds input gray_encode(cell).
    """

    fitness: int
    best_step: int
    per_input_correct: tuple[bool, ...]


def rotation_weights(bits) -> np.ndarray:
    """Matrix W with W[i, p] = 1 - bits[(p - i) mod L]: row i is the
    zero-class indicator seen by sample i."""
    zero_ind = 1.0 - np.asarray(bits, dtype=float)
    if zero_ind.ndim != 1:
        raise ValueError("bits must be one-dimensional")
    num = zero_ind.shape[0]
    return np.stack([np.roll(zero_ind, i) for i in range(num)])


def classify_rotated(probs, bits, sample: int) -> tuple[int | None, float]:
    """Class of one sample from a snapshot's probabilities.

    Returns (class, zero_mass) where class is 0, 1, or None at an exact
    tie.
    """
    probs = np.asarray(probs, dtype=float)
    if probs.ndim != 1:
        raise ValueError("probs must be a single snapshot")
    zero_ind = 1.0 - np.asarray(bits, dtype=float)
    sample = check_int("sample", sample, minimum=0, maximum=probs.shape[0] - 1)
    zero_mass = float(probs @ np.roll(zero_ind, sample))
    return _resolve_class(zero_mass), zero_mass


def _resolve_class(zero_mass: float) -> int | None:
    one_mass = 1.0 - zero_mass
    if zero_mass > 0.5:
        return 0
    if one_mass > 0.5:
        return 1
    return None


def evaluate_fitness(params: UnitaryParams, z: int, code: str = "binary",
                     max_steps: int = 2048, n_digits: int = 5) -> FitnessReport:
    """Score a (unitary, partition) rule against the majority targets.

    A single evolution from cell 0 is classified for all 2^n samples at
    every step from 1 to max_steps; the report carries the best per-step
    count and the earliest step where it occurs.
    """
    code = check_code(code)
    n_digits = check_digit_count(n_digits)
    max_steps = check_int("max_steps", max_steps, minimum=1)
    num_cells = 1 << n_digits
    z = check_partition_value(z, num_cells)

    targets = majority_table(code, n_digits)
    weights = rotation_weights(partition_from_z(z, num_cells).bits)
    trace = evolve(basis_state(num_cells, 0), params, max_steps)
    probs = check_probability_matrix(np.abs(trace) ** 2)

    zero_mass = probs @ weights.T            # (steps + 1, samples)
    one_mass = 1.0 - zero_mass
    correct = np.where(targets == 0, zero_mass > 0.5, one_mass > 0.5)
    counts = correct.sum(axis=1)

    best_rel = int(np.argmax(counts[1:]))    # step 0 is the start, not scored
    best_step = best_rel + 1
    return FitnessReport(
        fitness=int(counts[best_step]),
        best_step=best_step,
        per_input_correct=tuple(bool(c) for c in correct[best_step]),
    )


def input_zero_mass(params: UnitaryParams, z: int, x: int, code: str = "binary",
                    steps: int = 2048, n_digits: int = 5) -> float:
    """Zero-class probability mass for one input after the given steps."""
    code = check_code(code)
    n_digits = check_digit_count(n_digits)
    num_cells = 1 << n_digits
    z = check_partition_value(z, num_cells)
    start = cell_for_input(x, code, n_digits)
    state = basis_state(num_cells, start)
    for state in iter_steps(state, params, steps):
        pass
    probs = np.abs(state) ** 2
    zero_ind = 1.0 - partition_from_z(z, num_cells).bit_array().astype(float)
    return float(probs @ zero_ind)


def classify_input(params: UnitaryParams, z: int, x: int, code: str = "binary",
                   steps: int = 2048, n_digits: int = 5) -> int | None:
    """Direct-mode class of one input: 0, 1, or None at an exact tie."""
    return _resolve_class(input_zero_mass(params, z, x, code, steps, n_digits))
