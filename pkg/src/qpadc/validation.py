"""Input validation helpers shared across the package.

Each helper either returns a normalized value or raises ValueError with a
message naming the offending argument.
"""

from __future__ import annotations

import math

import numpy as np

CODES = ("binary", "gray")

# A state vector must stay normalized; unitary stepping preserves the norm
# to far better than this, so any larger drift means the input was bad.
NORM_TOL = 1e-9


def check_real(name: str, value) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ValueError(f"{name} must be a real number, got {value!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


def check_in_range(name: str, value, lower: float, upper: float) -> float:
    value = check_real(name, value)
    if not lower <= value <= upper:
        raise ValueError(f"{name} must lie in [{lower}, {upper}], got {value}")
    return value


def check_int(name: str, value, minimum: int | None = None,
              maximum: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if minimum is not None and value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")
    if maximum is not None and value > maximum:
        raise ValueError(f"{name} must be <= {maximum}, got {value}")
    return value


def check_cell_count(num_cells) -> int:
    """Lattice sizes must be even so every cell has a partner each step."""
    num_cells = check_int("num_cells", num_cells, minimum=2)
    if num_cells % 2 != 0:
        raise ValueError(f"num_cells must be even, got {num_cells}")
    return num_cells


def check_cell_index(cell, num_cells: int) -> int:
    return check_int("cell", cell, minimum=0, maximum=num_cells - 1)


def check_digit_count(n_digits) -> int:
    """The majority rule needs an odd number of digits to avoid ties."""
    n_digits = check_int("n_digits", n_digits, minimum=1)
    if n_digits % 2 == 0:
        raise ValueError(f"n_digits must be odd, got {n_digits}")
    return n_digits


def check_code(code) -> str:
    if code not in CODES:
        raise ValueError(f"code must be one of {CODES}, got {code!r}")
    return code


def check_partition_value(z, num_cells: int = 32) -> int:
    return check_int("z", z, minimum=0, maximum=(1 << num_cells) - 1)


def check_state(state, num_cells: int | None = None) -> np.ndarray:
    """Validate and return a complex state vector (without copying if clean)."""
    state = np.asarray(state, dtype=complex)
    if state.ndim != 1:
        raise ValueError(f"state must be one-dimensional, got shape {state.shape}")
    check_cell_count(state.shape[0])
    if num_cells is not None and state.shape[0] != num_cells:
        raise ValueError(
            f"state has {state.shape[0]} cells, expected {num_cells}")
    if not np.all(np.isfinite(state.view(float))):
        raise ValueError("state contains non-finite amplitudes")
    norm = np.linalg.norm(state)
    if abs(norm - 1.0) > NORM_TOL:
        raise ValueError(f"state norm {norm} deviates from 1 by more than {NORM_TOL}")
    return state


def check_probability_matrix(probs) -> np.ndarray:
    probs = np.asarray(probs, dtype=float)
    if probs.ndim != 2:
        raise ValueError(f"probability matrix must be 2-D, got shape {probs.shape}")
    if probs.size == 0:
        raise ValueError("probability matrix must be non-empty")
    if not np.all(np.isfinite(probs)) or np.any(probs < 0):
        raise ValueError("probabilities must be finite and non-negative")
    return probs


def check_input_matrix(X, n_digits: int) -> np.ndarray:
    """Validate a (n_samples, n_digits) matrix of 0/1 digits, MSB first."""
    X = np.asarray(X)
    if X.ndim != 2:
        raise ValueError(f"X must be a 2-D digit matrix, got shape {X.shape}")
    if X.shape[1] != n_digits:
        raise ValueError(
            f"X must have {n_digits} columns (one per digit), got {X.shape[1]}")
    if not np.isin(X, (0, 1)).all():
        raise ValueError("X entries must be 0 or 1")
    return X.astype(int)
