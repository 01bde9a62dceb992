"""Small GF(2) matrix helpers.

An m x m binary matrix is a tuple of m row masks; (A @ x)_i is the parity
of rows[i] AND x. Vectors are ints with bit j = coordinate j+1.
"""

from __future__ import annotations

import random


def identity(m: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(m))


def mat_vec(rows, x: int) -> int:
    y = 0
    for i, r in enumerate(rows):
        y |= ((r & x).bit_count() & 1) << i
    return y


def transpose(rows, m: int) -> tuple[int, ...]:
    return tuple(
        sum(((rows[i] >> j) & 1) << i for i in range(len(rows))) for j in range(m)
    )


def mat_mul(a, b, m: int) -> tuple[int, ...]:
    bt = transpose(b, m)
    return tuple(
        sum(((row & bt[j]).bit_count() & 1) << j for j in range(m)) for row in a
    )


def rank(rows) -> int:
    pivots = []
    for r in rows:
        for p in pivots:
            r = min(r, r ^ p)
        if r:
            pivots.append(r)
    return len(pivots)


def is_invertible(rows, m: int) -> bool:
    return len(rows) == m and rank(rows) == m


def inverse(rows, m: int) -> tuple[int, ...]:
    """Invert over GF(2) by Gauss-Jordan; raises ValueError on a singular matrix."""
    a = list(rows)
    e = [1 << i for i in range(m)]
    for col in range(m):
        piv = None
        for r in range(col, m):
            if a[r] >> col & 1:
                piv = r
                break
        if piv is None:
            raise ValueError("matrix is singular over GF(2)")
        a[col], a[piv] = a[piv], a[col]
        e[col], e[piv] = e[piv], e[col]
        for r in range(m):
            if r != col and (a[r] >> col & 1):
                a[r] ^= a[col]
                e[r] ^= e[col]
    return tuple(e)


def random_invertible(m: int, rng: random.Random) -> tuple[int, ...]:
    while True:
        rows = tuple(rng.getrandbits(m) for _ in range(m))
        if is_invertible(rows, m):
            return rows
