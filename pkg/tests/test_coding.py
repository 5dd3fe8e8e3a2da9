import numpy as np
import pytest
from hypothesis import given, strategies as st

from qpadc import (Partition, cell_for_input, digits_to_int, gray_decode,
                   gray_encode, input_matrix, majority_bit, majority_table,
                   partition_from_bits, partition_from_z)

# Majority of the input held by each cell, for both placement codes.
MAJORITY_BINARY = [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1,
                   0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1]
MAJORITY_GRAY = [0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0,
                 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0]


@pytest.mark.parametrize("i,expected", [(0, 0), (2, 3), (5, 7), (8, 12)])
def test_gray_encode(i, expected):
    assert gray_encode(i) == expected


@given(st.integers(min_value=0, max_value=(1 << 20) - 1))
def test_gray_round_trip(i):
    assert gray_decode(gray_encode(i)) == i
    assert gray_encode(gray_decode(i)) == i


def test_cell_for_input_binary_is_identity():
    for x in (0, 8, 31):
        assert cell_for_input(x, "binary") == x


def test_cell_for_input_gray_decodes():
    assert cell_for_input(3, "gray") == 2
    # Placement uses the decode direction: gray_encode(8) is 12, but the
    # cell holding input 8 is 15.
    assert cell_for_input(8, "gray") == 15
    assert gray_encode(8) == 12


def test_cell_for_input_validation():
    with pytest.raises(ValueError):
        cell_for_input(32, "binary")
    with pytest.raises(ValueError):
        cell_for_input(0, "ternary")


@pytest.mark.parametrize("x,expected", [(0, 0), (3, 0), (7, 1), (22, 1)])
def test_majority_bit(x, expected):
    assert majority_bit(x, 5) == expected


def test_majority_bit_needs_odd_digits():
    with pytest.raises(ValueError):
        majority_bit(3, 4)


def test_majority_tables_match_reference():
    assert majority_table("binary").tolist() == MAJORITY_BINARY
    assert majority_table("gray").tolist() == MAJORITY_GRAY


def test_majority_table_single_digit():
    assert majority_table("binary", 1).tolist() == [0, 1]


def test_partition_reference_example():
    partition = partition_from_z(4279011723)
    assert partition.zero_cells == frozenset(
        {2, 4, 5, 6, 9, 10, 12, 13, 14, 16, 17, 20, 21, 22, 23})
    assert partition.one_cells == frozenset(range(32)) - partition.zero_cells
    assert partition.num_cells == 32


def test_partition_extremes():
    assert partition_from_z(0).zero_cells == frozenset(range(32))
    assert partition_from_z((1 << 32) - 1).one_cells == frozenset(range(32))


def test_partition_bits_are_lsb_first():
    partition = partition_from_z(0b110)
    assert partition.bits[:4] == (0, 1, 1, 0)


def test_partition_range_check():
    with pytest.raises(ValueError):
        partition_from_z(1 << 32)
    with pytest.raises(ValueError):
        partition_from_z(-1)


def test_partition_rejects_inconsistent_fields():
    with pytest.raises(ValueError):
        Partition(z=1, bits=(0, 1), zero_cells=frozenset({0}),
                  one_cells=frozenset({1}))


@given(st.integers(min_value=0, max_value=(1 << 32) - 1))
def test_partition_round_trip(z):
    partition = partition_from_z(z)
    assert partition_from_bits(partition.bits).z == z
    assert len(partition.zero_cells) + len(partition.one_cells) == 32


def test_input_matrix_is_msb_first():
    X = input_matrix(5)
    assert X.shape == (32, 5)
    assert X[8].tolist() == [0, 1, 0, 0, 0]
    assert X[31].tolist() == [1, 1, 1, 1, 1]
    assert all(digits_to_int(row) == value for value, row in enumerate(X))


def test_digits_to_int_validation():
    with pytest.raises(ValueError):
        digits_to_int([0, 2, 1])
