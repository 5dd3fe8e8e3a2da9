import numpy as np

from qpadc import UnitaryParams


def random_params(rng: np.random.Generator) -> UnitaryParams:
    """Uniform draw over the whole parameter box."""
    return UnitaryParams.from_angles(
        rng.uniform(0.0, 90.0),
        rng.uniform(-180.0, 180.0),
        rng.uniform(-180.0, 180.0),
        rng.uniform(-180.0, 180.0),
    )


def random_state(rng: np.random.Generator, num_cells: int) -> np.ndarray:
    """Normalized complex state with Gaussian components."""
    amplitudes = rng.normal(size=num_cells) + 1j * rng.normal(size=num_cells)
    return amplitudes / np.linalg.norm(amplitudes)
