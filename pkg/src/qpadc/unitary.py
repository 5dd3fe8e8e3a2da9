"""Parameterized two-cell block unitaries.

All angles are degrees. The mixing angle theta sets how much amplitude
stays on its cell versus hopping to the partner cell: theta = 0 gives a
pure swap, theta = 90 leaves both cells in place.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .validation import check_in_range, check_real

THETA_RANGE = (0.0, 90.0)
PHASE_RANGE = (-180.0, 180.0)

# Tolerance for the phase constraint that makes the block unitary.
_CONSTRAINT_TOL = 1e-9


def derive_delta(alpha: float, beta: float, gamma: float) -> float:
    """Fourth phase forced by unitarity, reduced into [0, 360)."""
    alpha = check_real("alpha", alpha)
    beta = check_real("beta", beta)
    gamma = check_real("gamma", gamma)
    return (180.0 - alpha + beta + gamma) % 360.0


@dataclass(frozen=True)
class UnitaryParams:
    """The four free angles plus the derived one, all in degrees.

    Use :meth:`from_angles` to construct from the free angles; direct
    construction insists that delta already satisfies the constraint
    alpha - beta - gamma + delta = 180 (mod 360).
    """

    theta: float
    alpha: float
    beta: float
    gamma: float
    delta: float

    def __post_init__(self):
        object.__setattr__(
            self, "theta", check_in_range("theta", self.theta, *THETA_RANGE))
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(
                self, name, check_in_range(name, getattr(self, name), *PHASE_RANGE))
        object.__setattr__(self, "delta", check_real("delta", self.delta))
        residue = (self.alpha - self.beta - self.gamma + self.delta - 180.0) % 360.0
        if min(residue, 360.0 - residue) > _CONSTRAINT_TOL:
            raise ValueError(
                "delta breaks the unitarity constraint: "
                f"alpha - beta - gamma + delta = 180 (mod 360) fails by {residue}")

    @classmethod
    def from_angles(cls, theta: float, alpha: float, beta: float,
                    gamma: float) -> "UnitaryParams":
        return cls(theta, alpha, beta, gamma, derive_delta(alpha, beta, gamma))

    def angles(self) -> tuple[float, float, float, float]:
        return (self.theta, self.alpha, self.beta, self.gamma)


def block_unitary(params: UnitaryParams) -> np.ndarray:
    """The 2x2 complex matrix applied to each cell pair."""
    rad = math.pi / 180.0
    sin_t = math.sin(params.theta * rad)
    cos_t = math.cos(params.theta * rad)

    def phase(angle_deg: float) -> complex:
        return complex(math.cos(angle_deg * rad), math.sin(angle_deg * rad))

    return np.array(
        [[sin_t * phase(params.alpha), cos_t * phase(params.beta)],
         [cos_t * phase(params.gamma), sin_t * phase(params.delta)]],
        dtype=complex)


def unitarity_defect(matrix: np.ndarray) -> float:
    """Max elementwise deviation of U*U from the identity."""
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {matrix.shape}")
    product = matrix.conj().T @ matrix
    return float(np.abs(product - np.eye(2)).max())
