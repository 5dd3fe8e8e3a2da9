"""Particle automaton simulation and rule search for density classification.

The package evolves a single-particle wavefunction on a ring of cells
under a parameterized two-cell block unitary, reads classes out of the
probability distribution through a learned cell partition, and searches
the joint (unitary, partition) space with a genetic algorithm.
"""

from .classify import (FitnessReport, classify_input, classify_rotated,
                       evaluate_fitness, input_zero_mass, rotation_weights)
from .coding import (Partition, cell_for_input, digits_to_int, gray_decode,
                     gray_encode, input_matrix, majority_bit, majority_table,
                     partition_from_bits, partition_from_z)
from .estimators import DensityClassifier, GeneticDensityClassifier
from .evolution import basis_state, evolve, iter_steps, probabilities, step
from .ga import (GAConfig, GAResult, GenerationRecord, Individual,
                 OffspringOrigin, crossover, gene_stream, initial_population,
                 make_offspring, mutate, random_individual, repair, run_ga,
                 select_survivor)
from .heatmap import write_heatmap_csv, write_heatmap_pgm
from .oracle import SpeedEstimate, dense_evolve, dense_step_matrix, measure_speed
from .solutions import (ALL_RUNS, BINARY_RUNS, GRAY_RUNS, SolutionRecord,
                        VerificationResult, dataset_passes, format_record,
                        load_records, parse_record, parse_records,
                        verify_record, verify_records)
from .unitary import (PHASE_RANGE, THETA_RANGE, UnitaryParams, block_unitary,
                      derive_delta, unitarity_defect)

__version__ = "0.1.0"

__all__ = [
    "ALL_RUNS", "BINARY_RUNS", "GRAY_RUNS", "DensityClassifier",
    "FitnessReport", "GAConfig", "GAResult", "GenerationRecord",
    "GeneticDensityClassifier", "Individual", "OffspringOrigin", "Partition",
    "PHASE_RANGE", "SolutionRecord", "SpeedEstimate", "THETA_RANGE",
    "UnitaryParams", "VerificationResult", "basis_state", "block_unitary",
    "cell_for_input", "classify_input", "classify_rotated", "crossover",
    "dataset_passes", "dense_evolve", "dense_step_matrix", "derive_delta",
    "digits_to_int", "evaluate_fitness", "evolve", "format_record",
    "gene_stream", "gray_decode", "gray_encode", "initial_population",
    "input_matrix", "input_zero_mass", "iter_steps", "load_records",
    "majority_bit", "majority_table", "make_offspring", "measure_speed",
    "mutate", "parse_record", "parse_records", "partition_from_bits",
    "partition_from_z", "probabilities", "random_individual", "repair",
    "run_ga",
    "select_survivor", "step", "unitarity_defect", "verify_record",
    "verify_records", "write_heatmap_csv", "write_heatmap_pgm",
]
