"""Bit-packed truth tables.

A Boolean function on m variables is stored as a single Python int of
2^m bits: bit x of the int is f(x), with variable x_{j+1} living in bit j
of the index x (LSB-first). All transforms below work directly on the
packed int with masked shifts, so a whole table is one machine word for
m <= 6 and stays cache-friendly well beyond that.
"""

from functools import lru_cache

import numpy as np


def table_size(m: int) -> int:
    return 1 << m


def full_mask(m: int) -> int:
    """All-ones table: the constant-1 function."""
    return (1 << (1 << m)) - 1


@lru_cache(maxsize=None)
def _level_masks(m: int):
    # For each variable j: (shift, mask of table positions whose index has bit j = 0).
    size = 1 << m
    full = (1 << size) - 1
    out = []
    for j in range(m):
        s = 1 << j
        unit = (1 << s) - 1
        low = (full // ((1 << (2 * s)) - 1)) * unit
        out.append((s, low))
    return tuple(out)


def xor_shuffle(bits: int, m: int, a: int) -> int:
    """Packed table of x -> f(x ^ a)."""
    for j in range(m):
        if a >> j & 1:
            s, low = _level_masks(m)[j]
            bits = ((bits >> s) & low) | ((bits & low) << s)
    return bits


def derivative_bits(bits: int, m: int, a: int) -> int:
    """Packed table of the directional derivative x -> f(x^a) ^ f(x)."""
    return bits ^ xor_shuffle(bits, m, a)


def mobius(bits: int, m: int) -> int:
    """Binary Moebius transform (truth table <-> ANF coefficients); an involution."""
    for s, low in _level_masks(m):
        bits ^= (bits & low) << s
    return bits


def unpack(bits: int, m: int) -> np.ndarray:
    """Packed table -> numpy uint8 array of 0/1 entries, index order 0..2^m-1."""
    size = 1 << m
    raw = bits.to_bytes((size + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size]

def pack(arr) -> int:
    data = np.packbits(np.asarray(arr, dtype=np.uint8) & 1, bitorder="little")
    return int.from_bytes(data.tobytes(), "little")


# Parity of a byte, vectorized; table entries for a vectorial function with
# m <= 8 always fit one byte.
_POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)
PARITY8 = _POP8 & 1
