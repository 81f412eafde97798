from typing import Sequence, Tuple

import numpy as np


def encode_tuple(digits: Sequence[int], base: int) -> int:
    """Lexicographic index of a tuple, leftmost coordinate most significant."""
    value = 0
    for digit in digits:
        value = value * base + int(digit)
    return value


def decode_tuple(value: int, base: int, length: int) -> Tuple[int, ...]:
    digits = []
    for _ in range(length):
        value, digit = divmod(value, base)
        digits.append(digit)
    return tuple(reversed(digits))


def coordinate_arrays(base: int, length: int) -> Tuple[np.ndarray, ...]:
    """For every position, the digit at that position of each encoded tuple."""
    if length == 0:
        return ()
    grids = np.indices((base,) * length).reshape(length, -1)
    return tuple(grids[position] for position in range(length))


def frozen(array, dtype=np.int64) -> np.ndarray:
    array = np.array(array, dtype=dtype, copy=True)
    array.flags.writeable = False
    return array
