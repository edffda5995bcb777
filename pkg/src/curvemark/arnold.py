"""Arnold Cat map scrambling: the map, its period, and its inverse.

The map sends pixel position (x, y) to ((x + a*y) mod n, (b*x + (a*b+1)*y)
mod n), with (x, y) = (row, column).  The matrix [[1, a], [b, a*b+1]] has
determinant 1, so the map is a permutation of the n x n grid and some power
of it is the identity; that power is the period used to invert the map.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ArnoldParams:
    a: int
    b: int
    n: int
    iterations: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"side n must be >= 2, got {self.n}")
        if self.a < 1 or self.b < 1:
            raise ValueError(f"control parameters must be >= 1, got a={self.a} b={self.b}")
        if self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")


def _matrix_power_mod(a, b, k, n):
    """k-th power of [[1, a], [b, a*b+1]] mod n, by binary exponentiation."""
    m = ((1, a), (b, a * b + 1))
    r = ((1, 0), (0, 1))
    while k:
        if k & 1:
            r = _matmul_mod(r, m, n)
        m = _matmul_mod(m, m, n)
        k >>= 1
    return r


def _matmul_mod(p, q, n):
    return (
        ((p[0][0] * q[0][0] + p[0][1] * q[1][0]) % n,
         (p[0][0] * q[0][1] + p[0][1] * q[1][1]) % n),
        ((p[1][0] * q[0][0] + p[1][1] * q[1][0]) % n,
         (p[1][0] * q[0][1] + p[1][1] * q[1][1]) % n),
    )


def arnold_step(x, y, p: ArnoldParams):
    """One application of the map to a single (row, column) coordinate."""
    if not (0 <= x < p.n and 0 <= y < p.n):
        raise ValueError(f"coordinate ({x}, {y}) out of range for n={p.n}")
    return (x + p.a * y) % p.n, (p.b * x + (p.a * p.b + 1) * y) % p.n


def arnold_map(img, p: ArnoldParams):
    """Scramble all pixel positions by `iterations` applications of the map.

    Pure permutation: the intensity histogram is unchanged.
    """
    img = np.asarray(img)
    if img.shape != (p.n, p.n):
        raise ValueError(f"image shape {img.shape} does not match n={p.n}")
    m = _matrix_power_mod(p.a, p.b, p.iterations, p.n)
    x, y = np.meshgrid(np.arange(p.n), np.arange(p.n), indexing="ij")
    x2 = (m[0][0] * x + m[0][1] * y) % p.n
    y2 = (m[1][0] * x + m[1][1] * y) % p.n
    out = np.empty_like(img)
    out[x2, y2] = img
    return out


def arnold_period(n, a, b):
    """Smallest k >= 1 with the map matrix to the k-th power == I (mod n)."""
    if n < 2:
        raise ValueError(f"side n must be >= 2, got {n}")
    ident = ((1, 0), (0, 1))
    m = ((1 % n, a % n), (b % n, (a * b + 1) % n))
    acc = m
    cap = 3 * n * n
    for k in range(1, cap + 1):
        if acc == ident:
            return k
        acc = _matmul_mod(acc, m, n)
    raise RuntimeError(f"period search exceeded cap {cap} for n={n} a={a} b={b}")


def arnold_unmap(img, p: ArnoldParams):
    """Exact inverse of arnold_map, via period - iterations applications."""
    period = arnold_period(p.n, p.a, p.b)
    if p.iterations >= period:
        raise ValueError(f"iterations {p.iterations} must be < period {period}")
    inv = ArnoldParams(p.a, p.b, p.n, period - p.iterations if p.iterations else 0)
    return arnold_map(img, inv)
