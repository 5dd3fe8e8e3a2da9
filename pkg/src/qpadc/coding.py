"""Mapping binary inputs onto lattice cells and partitioning the lattice.

An n-digit input (n odd) selects one of 2^n cells as the particle's start.
Under the binary code, input x starts at cell x. Under the Gray code,
cell i holds the input gray_encode(i), so the start cell for input x is
gray_decode(x); the two directions differ and mixing them up places most
inputs on the wrong cell.

A partition splits the cells into a zero-class and a one-class set. It is
packed into an integer z read LSB first: bit j of z is the class of cell j.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .validation import (check_cell_index, check_code, check_digit_count,
                         check_int, check_partition_value)


def gray_encode(i: int) -> int:
    """Value stored at cell i under the Gray code."""
    i = check_int("i", i, minimum=0)
    return i ^ (i >> 1)


def gray_decode(x: int) -> int:
    """Inverse of gray_encode: the cell whose Gray value is x."""
    x = check_int("x", x, minimum=0)
    result = 0
    while x:
        result ^= x
        x >>= 1
    return result


def cell_for_input(x: int, code: str, n_digits: int = 5) -> int:
    """Start cell for input x under the given code."""
    code = check_code(code)
    n_digits = check_digit_count(n_digits)
    x = check_cell_index(x, 1 << n_digits)
    if code == "binary":
        return x
    return gray_decode(x)


def majority_bit(x: int, n_digits: int = 5) -> int:
    """1 when more than half of the n digits of x are ones."""
    n_digits = check_digit_count(n_digits)
    x = check_int("x", x, minimum=0, maximum=(1 << n_digits) - 1)
    ones = bin(x).count("1")
    return 1 if ones > n_digits // 2 else 0


def majority_table(code: str, n_digits: int = 5) -> np.ndarray:
    """Majority of the input held by each cell, indexed by cell."""
    code = check_code(code)
    n_digits = check_digit_count(n_digits)
    cells = 1 << n_digits
    table = np.empty(cells, dtype=np.uint8)
    for cell in range(cells):
        x = gray_encode(cell) if code == "gray" else cell
        table[cell] = majority_bit(x, n_digits)
    return table


@dataclass(frozen=True)
class Partition:
    """A two-way split of the cells, packed into the integer z (LSB first)."""

    z: int
    bits: tuple[int, ...]
    zero_cells: frozenset[int] = field(repr=False)
    one_cells: frozenset[int] = field(repr=False)

    def __post_init__(self):
        packed = sum(bit << j for j, bit in enumerate(self.bits))
        if packed != self.z:
            raise ValueError(f"bits {self.bits} do not pack to z={self.z}")

    @property
    def num_cells(self) -> int:
        return len(self.bits)

    def bit_array(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)


def partition_from_z(z: int, num_cells: int = 32) -> Partition:
    z = check_partition_value(z, num_cells)
    bits = tuple((z >> j) & 1 for j in range(num_cells))
    zero_cells = frozenset(j for j, bit in enumerate(bits) if bit == 0)
    one_cells = frozenset(range(num_cells)) - zero_cells
    return Partition(z, bits, zero_cells, one_cells)


def partition_from_bits(bits) -> Partition:
    bits = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("partition bits must be 0 or 1")
    z = sum(bit << j for j, bit in enumerate(bits))
    return partition_from_z(z, len(bits))


def input_matrix(n_digits: int = 5) -> np.ndarray:
    """All 2^n inputs as rows of 0/1 digits, most significant digit first."""
    n_digits = check_digit_count(n_digits)
    values = np.arange(1 << n_digits)
    shifts = np.arange(n_digits - 1, -1, -1)
    return ((values[:, None] >> shifts) & 1).astype(int)


def digits_to_int(row) -> int:
    """Fold a digit row (MSB first) back into the input value."""
    value = 0
    for digit in row:
        digit = int(digit)
        if digit not in (0, 1):
            raise ValueError(f"digits must be 0 or 1, got {digit}")
        value = (value << 1) | digit
    return value
