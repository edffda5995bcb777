"""Orthonormal 2-D DCT of the approximation band and its HF coefficient region.

The high-frequency region is the anti-diagonal corner u + v >= threshold of
the coefficient matrix (0-based indices), visited in lexicographic (u, v)
order.  The default threshold 30 on a 21x21 band selects 66 coefficients.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy import fft as sfft


@dataclass(frozen=True)
class HfRegion:
    size: int = 21
    threshold: int = 30
    indices: tuple = field(init=False)

    def __post_init__(self):
        idx = tuple(
            (u, v)
            for u in range(self.size)
            for v in range(self.size)
            if u + v >= self.threshold
        )
        if not idx:
            raise ValueError(f"threshold {self.threshold} selects no coefficients")
        object.__setattr__(self, "indices", idx)

    @property
    def count(self):
        return len(self.indices)


def dct2(m):
    """Orthonormal type-II 2-D DCT."""
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected square matrix, got shape {m.shape}")
    return sfft.dctn(m, type=2, norm="ortho")


def idct2(c):
    """Inverse of dct2."""
    c = np.asarray(c, dtype=np.float64)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise ValueError(f"expected square matrix, got shape {c.shape}")
    return sfft.idctn(c, type=2, norm="ortho")


def extract_hf(c, region: HfRegion = HfRegion()):
    """HF coefficients of c as a vector in region index order."""
    c = np.asarray(c)
    if c.shape != (region.size, region.size):
        raise ValueError(f"matrix shape {c.shape} != region size {region.size}")
    rows, cols = zip(*region.indices)
    return c[list(rows), list(cols)].copy()


def replace_hf(c, v, region: HfRegion = HfRegion()):
    """Copy of c with the HF region overwritten by vector v."""
    c = np.asarray(c, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if c.shape != (region.size, region.size):
        raise ValueError(f"matrix shape {c.shape} != region size {region.size}")
    if v.shape != (region.count,):
        raise ValueError(f"vector length {v.shape} != region count {region.count}")
    out = c.copy()
    rows, cols = zip(*region.indices)
    out[list(rows), list(cols)] = v
    return out
