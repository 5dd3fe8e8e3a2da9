"""Estimator-style wrappers around the rule engine.

Samples are rows of 0/1 digits, most significant digit first (see
coding.input_matrix for the full enumeration). The target concept is the
majority digit, so a perfect classifier maps each row to 1 exactly when
it contains more ones than zeros.

DensityClassifier applies one fixed rule. Its defaults are the
closed-form rule (hold-in-place unitary, majority-table partition, one
step), which classifies every input correctly and serves as a baseline.
GeneticDensityClassifier searches for a rule with the genetic algorithm
at fit time and then behaves like the fixed classifier it found.
"""

from __future__ import annotations

import math

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin
from sklearn.utils.validation import check_is_fitted

from .classify import input_zero_mass
from .coding import digits_to_int, majority_table, partition_from_bits, \
    partition_from_z
from .ga import GAConfig, run_ga
from .unitary import UnitaryParams
from .validation import check_code, check_digit_count, check_input_matrix, \
    check_int


class DensityClassifier(ClassifierMixin, BaseEstimator):
    """Classify digit rows with one fixed (unitary, partition) rule.

    Parameters mirror the rule: the four free angles in degrees, the
    partition integer (None selects the majority-table partition), the
    placement code, the digit count, and how many steps to evolve before
    reading out. predict breaks an exact 0.5/0.5 tie toward class 1;
    predict_proba exposes the tie as is.
    """

    def __init__(self, theta: float = 90.0, alpha: float = 0.0,
                 beta: float = 180.0, gamma: float = 0.0,
                 partition: int | None = None, code: str = "binary",
                 n_digits: int = 5, steps: int = 1):
        self.theta = theta
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma
        self.partition = partition
        self.code = code
        self.n_digits = n_digits
        self.steps = steps

    def fit(self, X=None, y=None):
        """Validate parameters and derive the rule; X and y are ignored
        because the rule is fully specified by the constructor."""
        self.n_digits_ = check_digit_count(self.n_digits)
        self.code_ = check_code(self.code)
        self.steps_ = check_int("steps", self.steps, minimum=1)
        self.params_ = UnitaryParams.from_angles(self.theta, self.alpha,
                                                 self.beta, self.gamma)
        if self.partition is None:
            self.partition_ = partition_from_bits(
                majority_table(self.code_, self.n_digits_))
        else:
            self.partition_ = partition_from_z(self.partition,
                                               1 << self.n_digits_)
        self.classes_ = np.array([0, 1])
        return self

    def _zero_mass(self, x: int, cache: dict) -> float:
        if x not in cache:
            cache[x] = input_zero_mass(self.params_, self.partition_.z, x,
                                       self.code_, self.steps_,
                                       self.n_digits_)
        return cache[x]

    def predict_proba(self, X) -> np.ndarray:
        check_is_fitted(self, "params_")
        X = check_input_matrix(X, self.n_digits_)
        cache: dict = {}
        zero = np.array([self._zero_mass(digits_to_int(row), cache)
                         for row in X])
        return np.column_stack([zero, 1.0 - zero])

    def predict(self, X) -> np.ndarray:
        proba = self.predict_proba(X)
        return np.where(proba[:, 0] > 0.5, 0, 1)


class GeneticDensityClassifier(ClassifierMixin, BaseEstimator):
    """Search for a rule at fit time, then classify with it.

    fit ignores X and y: the search is scored against the majority
    concept itself, not against a training sample. After fitting, the
    discovered rule is available as classifier_ (a fitted
    DensityClassifier), the raw genes as best_individual_, and the
    per-generation statistics as history_.
    """

    def __init__(self, pop_size: int = 200, max_gen: int = 1000,
                 crossover_rate: float = 0.25, mutation_rate: float = 0.90,
                 theta_std: float = math.degrees(0.05),
                 phase_std: float = math.degrees(0.1), z_std: float = 20.0,
                 code: str = "binary", max_steps: int = 2048,
                 n_digits: int = 5, seed: int = 0):
        self.pop_size = pop_size
        self.max_gen = max_gen
        self.crossover_rate = crossover_rate
        self.mutation_rate = mutation_rate
        self.theta_std = theta_std
        self.phase_std = phase_std
        self.z_std = z_std
        self.code = code
        self.max_steps = max_steps
        self.n_digits = n_digits
        self.seed = seed

    def fit(self, X=None, y=None):
        cfg = GAConfig(
            pop_size=self.pop_size, max_gen=self.max_gen,
            crossover_rate=self.crossover_rate,
            mutation_rate=self.mutation_rate, theta_std=self.theta_std,
            phase_std=self.phase_std, z_std=self.z_std, code=self.code,
            max_steps=self.max_steps, n_digits=self.n_digits,
            master_seed=self.seed)
        result = run_ga(cfg)
        best = result.best
        self.best_individual_ = best
        self.history_ = result.history
        self.best_fitness_ = best.fitness
        self.classifier_ = DensityClassifier(
            theta=best.theta, alpha=best.alpha, beta=best.beta,
            gamma=best.gamma, partition=best.z, code=self.code,
            n_digits=self.n_digits, steps=best.best_step).fit()
        self.classes_ = np.array([0, 1])
        return self

    def predict_proba(self, X) -> np.ndarray:
        check_is_fitted(self, "classifier_")
        return self.classifier_.predict_proba(X)

    def predict(self, X) -> np.ndarray:
        check_is_fitted(self, "classifier_")
        return self.classifier_.predict(X)
