"""Genetic search over (unitary, partition) rules.

An individual carries five genes: the four free angles and the partition
integer z. Offspring production is gated crossover (whole-individual
probability) followed by always-attempted per-gene mutation; survivor
selection is pairwise between each parent and its offspring, the child
winning ties. Generations are synchronous: every offspring is derived
from the current population before any survivor replaces a parent.

Randomness is drawn from per-(generation, index) streams spawned off one
master seed, so any individual's lineage can be replayed in isolation
and runs are reproducible regardless of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

import numpy as np

from .classify import evaluate_fitness
from .unitary import PHASE_RANGE, THETA_RANGE, UnitaryParams
from .validation import (check_code, check_digit_count, check_in_range,
                         check_int, check_real)

GENE_NAMES = ("theta", "alpha", "beta", "gamma", "z")


@dataclass(frozen=True)
class Individual:
    theta: float
    alpha: float
    beta: float
    gamma: float
    z: int
    fitness: int | None = None
    best_step: int | None = None

    def genes(self) -> tuple[float, float, float, float, int]:
        return (self.theta, self.alpha, self.beta, self.gamma, self.z)

    def params(self) -> UnitaryParams:
        return UnitaryParams.from_angles(self.theta, self.alpha, self.beta,
                                         self.gamma)


@dataclass(frozen=True)
class GAConfig:
    """Search settings; defaults reproduce the reference configuration.

    Mutation widths are in gene units (degrees for angles, integer steps
    for z).
    """

    pop_size: int = 200
    max_gen: int = 1000
    crossover_rate: float = 0.25
    mutation_rate: float = 0.90
    theta_std: float = math.degrees(0.05)
    phase_std: float = math.degrees(0.1)
    z_std: float = 20.0
    code: str = "binary"
    max_steps: int = 2048
    n_digits: int = 5
    master_seed: int = 0

    def __post_init__(self):
        check_int("pop_size", self.pop_size, minimum=2)
        check_int("max_gen", self.max_gen, minimum=0)
        check_in_range("crossover_rate", self.crossover_rate, 0.0, 1.0)
        check_in_range("mutation_rate", self.mutation_rate, 0.0, 1.0)
        for name in ("theta_std", "phase_std", "z_std"):
            value = check_real(name, getattr(self, name))
            if value < 0:
                raise ValueError(f"{name} must be non-negative, got {value}")
        check_code(self.code)
        check_int("max_steps", self.max_steps, minimum=1)
        check_digit_count(self.n_digits)
        check_int("master_seed", self.master_seed, minimum=0,
                  maximum=(1 << 64) - 1)

    @property
    def z_upper(self) -> int:
        return (1 << (1 << self.n_digits)) - 1

    @property
    def full_score(self) -> int:
        return 1 << self.n_digits


@dataclass(frozen=True)
class OffspringOrigin:
    """Which operators actually fired while producing an offspring."""

    crossed: bool
    mutated: bool


@dataclass(frozen=True)
class GenerationRecord:
    generation: int
    best_fitness: int
    mean_fitness: float
    best: Individual


@dataclass(frozen=True)
class GAResult:
    best: Individual
    history: tuple[GenerationRecord, ...]


def gene_stream(master_seed: int, generation: int, index: int) -> np.random.Generator:
    """The RNG stream owned by one (generation, population slot) pair."""
    return np.random.default_rng([master_seed, generation, index])


def random_individual(cfg: GAConfig, rng: np.random.Generator) -> Individual:
    return Individual(
        theta=float(rng.uniform(*THETA_RANGE)),
        alpha=float(rng.uniform(*PHASE_RANGE)),
        beta=float(rng.uniform(*PHASE_RANGE)),
        gamma=float(rng.uniform(*PHASE_RANGE)),
        z=int(rng.integers(0, cfg.z_upper + 1)),
    )


def initial_population(cfg: GAConfig) -> list[Individual]:
    return [random_individual(cfg, gene_stream(cfg.master_seed, 0, i))
            for i in range(cfg.pop_size)]


def _repair_angle(value: float, bounds: tuple[float, float],
                  rng: np.random.Generator) -> float:
    if bounds[0] <= value <= bounds[1]:
        return value
    return float(rng.uniform(*bounds))


def _repair_z(value: int, upper: int, rng: np.random.Generator) -> int:
    if 0 <= value <= upper:
        return value
    return int(rng.integers(0, upper + 1))


def repair(ind: Individual, cfg: GAConfig, rng: np.random.Generator) -> Individual:
    """Redraw any out-of-range gene uniformly inside its range."""
    return replace(
        ind,
        theta=_repair_angle(ind.theta, THETA_RANGE, rng),
        alpha=_repair_angle(ind.alpha, PHASE_RANGE, rng),
        beta=_repair_angle(ind.beta, PHASE_RANGE, rng),
        gamma=_repair_angle(ind.gamma, PHASE_RANGE, rng),
        z=_repair_z(ind.z, cfg.z_upper, rng),
    )


def _mutate_tracked(ind: Individual, cfg: GAConfig,
                    rng: np.random.Generator) -> tuple[Individual, bool]:
    stds = (cfg.theta_std, cfg.phase_std, cfg.phase_std, cfg.phase_std)
    angles = list(ind.genes()[:4])
    bounds = (THETA_RANGE, PHASE_RANGE, PHASE_RANGE, PHASE_RANGE)
    hit = False
    for k in range(4):
        if rng.random() < cfg.mutation_rate:
            hit = True
            angles[k] = _repair_angle(
                angles[k] + float(rng.normal(0.0, stds[k])), bounds[k], rng)
    z = ind.z
    if rng.random() < cfg.mutation_rate:
        hit = True
        z = _repair_z(z + round(float(rng.normal(0.0, cfg.z_std))),
                      cfg.z_upper, rng)
    child = Individual(angles[0], angles[1], angles[2], angles[3], z)
    return child, hit


def mutate(ind: Individual, cfg: GAConfig,
           rng: np.random.Generator) -> Individual:
    """Perturb each gene with probability mutation_rate, repairing any
    excursion out of range. Fitness is reset to unevaluated."""
    child, _ = _mutate_tracked(ind, cfg, rng)
    return child


def crossover(ind: Individual, partner: Individual, crossover_rate: float,
              rng: np.random.Generator) -> Individual:
    """Per-gene mix: each gene keeps ind's value with probability
    crossover_rate, otherwise takes the partner's."""
    own = ind.genes()
    other = partner.genes()
    picked = [own[k] if rng.random() < crossover_rate else other[k]
              for k in range(5)]
    return Individual(picked[0], picked[1], picked[2], picked[3],
                      int(picked[4]))


def make_offspring(population: Sequence[Individual], index: int, cfg: GAConfig,
                   rng: np.random.Generator) -> tuple[Individual, OffspringOrigin]:
    """One offspring for the parent at index, plus which operators fired.

    The crossover partner is drawn uniformly from the other population
    slots, so the parent never mates with itself.
    """
    if len(population) < 2:
        raise ValueError("population must hold at least two individuals")
    index = check_int("index", index, minimum=0, maximum=len(population) - 1)
    parent = population[index]
    crossed = bool(rng.random() < cfg.crossover_rate)
    child = parent
    if crossed:
        j = int(rng.integers(0, len(population) - 1))
        if j >= index:
            j += 1
        child = crossover(parent, population[j], cfg.crossover_rate, rng)
    child, mutated = _mutate_tracked(child, cfg, rng)
    return child, OffspringOrigin(crossed=crossed, mutated=mutated)


def select_survivor(parent: Individual, child: Individual) -> Individual:
    """Parent survives only with strictly better fitness; ties go to the
    child so drift is possible on plateaus."""
    if parent.fitness is None or child.fitness is None:
        raise ValueError("both individuals must be evaluated before selection")
    return parent if parent.fitness > child.fitness else child


def evaluate_individual(ind: Individual, cfg: GAConfig) -> Individual:
    if ind.fitness is not None:
        return ind
    report = evaluate_fitness(ind.params(), ind.z, cfg.code, cfg.max_steps,
                              cfg.n_digits)
    return replace(ind, fitness=report.fitness, best_step=report.best_step)


def _record(generation: int, population: Sequence[Individual]) -> GenerationRecord:
    best = max(population, key=lambda ind: ind.fitness)
    mean = float(np.mean([ind.fitness for ind in population]))
    return GenerationRecord(generation, best.fitness, mean, best)


def run_ga(cfg: GAConfig,
           on_generation: Callable[[GenerationRecord], None] | None = None
           ) -> GAResult:
    """Run the search; stops early once any member scores full marks.

    The history has one record per completed generation, the initial
    population counting as generation 0.
    """
    population = [evaluate_individual(ind, cfg)
                  for ind in initial_population(cfg)]
    history = [_record(0, population)]
    if on_generation is not None:
        on_generation(history[-1])

    for generation in range(1, cfg.max_gen + 1):
        if history[-1].best_fitness >= cfg.full_score:
            break
        survivors = []
        for i in range(cfg.pop_size):
            rng = gene_stream(cfg.master_seed, generation, i)
            child, _ = make_offspring(population, i, cfg, rng)
            child = evaluate_individual(child, cfg)
            survivors.append(select_survivor(population[i], child))
        population = survivors
        history.append(_record(generation, population))
        if on_generation is not None:
            on_generation(history[-1])

    return GAResult(best=history[-1].best, history=tuple(history))
