import numpy as np
import pytest

from conftest import random_params
from qpadc import (UnitaryParams, basis_state, classify_input,
                   classify_rotated, evaluate_fitness, evolve,
                   input_zero_mass, majority_bit, majority_table,
                   partition_from_bits, probabilities, rotation_weights)

HOLD = UnitaryParams.from_angles(90, 0, 180, 0)


def reflected_majority_z(code: str) -> int:
    """Partition whose bit j is the majority target of sample (L - j) % L.

    With the hold unitary all probability stays at cell 0, where sample i
    reads bit (0 - i) mod L, so this partition scores every sample."""
    table = majority_table(code)
    num = len(table)
    return partition_from_bits(
        [int(table[(num - j) % num]) for j in range(num)]).z


def test_rotation_weights_layout():
    bits = (0, 1, 1, 0)
    weights = rotation_weights(bits)
    # Row i, column p holds 1 - bits[(p - i) mod L].
    assert weights.tolist() == [
        [1, 0, 0, 1],
        [1, 1, 0, 0],
        [0, 1, 1, 0],
        [0, 0, 1, 1],
    ]


def test_classify_rotated_point_mass():
    partition = np.array([(4279011723 >> j) & 1 for j in range(32)])
    probs = probabilities(basis_state(32, 2))
    # Cell 2 is in the zero class for this partition.
    label, zero_mass = classify_rotated(probs, partition, 0)
    assert (label, zero_mass) == (0, 1.0)
    # Sample 1 reads bit (2 - 1) = 1, which is a one-class cell.
    label, zero_mass = classify_rotated(probs, partition, 1)
    assert (label, zero_mass) == (1, 0.0)


def test_classify_rotated_exact_tie_is_neither():
    probs = np.full(32, 1.0 / 32.0)
    bits = [1] * 16 + [0] * 16
    label, zero_mass = classify_rotated(probs, bits, 0)
    assert label is None
    assert zero_mass == 0.5


def test_classify_rotated_validates_sample():
    with pytest.raises(ValueError):
        classify_rotated(np.full(4, 0.25), (0, 1, 0, 1), 4)


def test_hold_rule_scores_everything_at_step_one():
    for code in ("binary", "gray"):
        report = evaluate_fitness(HOLD, reflected_majority_z(code), code)
        assert report.fitness == 32
        assert report.best_step == 1
        assert all(report.per_input_correct)


def test_reference_rule_fitness_binary():
    params = UnitaryParams.from_angles(57.076225, -111.908294, 88.120218,
                                       -106.898772)
    z = sum(int(ch) << j for j, ch in
            enumerate("01011000000100001111110111011001"))
    report = evaluate_fitness(params, z, "binary")
    assert report.fitness == 32
    assert report.best_step == 768


def test_reference_rule_fitness_gray():
    params = UnitaryParams.from_angles(12.565333, -133.764371, -116.992579,
                                       27.211073)
    z = sum(int(ch) << j for j, ch in
            enumerate("01011100101111000101111011000000"))
    report = evaluate_fitness(params, z, "gray")
    assert report.fitness == 32
    assert report.best_step == 624


def test_evaluate_fitness_is_deterministic():
    rng = np.random.default_rng(17)
    params = random_params(rng)
    z = int(rng.integers(0, 1 << 32))
    first = evaluate_fitness(params, z, "binary", max_steps=128)
    second = evaluate_fitness(params, z, "binary", max_steps=128)
    assert first == second
    assert first.fitness == sum(first.per_input_correct)


def test_evaluate_fitness_reports_earliest_best_step():
    # The hold rule ties at every step, so the earliest must win.
    report = evaluate_fitness(HOLD, reflected_majority_z("binary"), "binary",
                              max_steps=64)
    assert report.best_step == 1


def test_evaluate_fitness_validation():
    with pytest.raises(ValueError):
        evaluate_fitness(HOLD, 1 << 32, "binary")
    with pytest.raises(ValueError):
        evaluate_fitness(HOLD, 0, "binary", max_steps=0)
    with pytest.raises(ValueError):
        evaluate_fitness(HOLD, 0, "octal")


def test_classify_input_with_hold_rule():
    z = partition_from_bits(majority_table("binary")).z
    assert classify_input(HOLD, z, 8, "binary", steps=1) == 0
    assert classify_input(HOLD, z, 7, "binary", steps=1) == 1
    # All 32 inputs, both codes: the lookup rule labels every input with
    # the majority of its own digits.
    for code in ("binary", "gray"):
        z = partition_from_bits(majority_table(code)).z
        got = [classify_input(HOLD, z, x, code, steps=1) for x in range(32)]
        assert got == [majority_bit(x, 5) for x in range(32)]


def test_all_zero_partition_always_says_zero():
    swap = UnitaryParams.from_angles(0, 0, 0, 0)
    for x in (0, 13, 31):
        assert classify_input(swap, 0, x, "binary", steps=9) == 0


def test_rotated_sample_zero_matches_direct_input_zero():
    # Input 0 sits at cell 0 under both codes, so the unrotated readout
    # of the shared evolution must agree with the direct route.
    rng = np.random.default_rng(23)
    for code in ("binary", "gray"):
        params = random_params(rng)
        z = int(rng.integers(0, 1 << 32))
        bits = [(z >> j) & 1 for j in range(32)]
        steps = 37
        trace = evolve(basis_state(32, 0), params, steps)
        label, zero_mass = classify_rotated(probabilities(trace[steps]),
                                            bits, 0)
        assert classify_input(params, z, 0, code, steps) == label
        assert input_zero_mass(params, z, 0, code, steps) == \
            pytest.approx(zero_mass, abs=1e-12)
