"""Seeded ternary pseudo-noise pair with weak mutual correlation.

The two sequences are the symbols for watermark bits 1 and 0.  Each element
is round(2*(r - 0.5)) for uniform r in [0, 1), with round-half-away-from-zero,
so symbols -1/0/+1 appear with probabilities 1/4, 1/2, 1/4.  Pairs are
redrawn until |corr2| <= 0.1, so attack damage is unlikely to flip the
detector's decision between the two symbols.

The generator is numpy's PCG64 (np.random.default_rng); the seed is key
material and embed/extract must use the same generator to agree.
"""

from dataclasses import dataclass

import numpy as np

CORR_BOUND = 0.1
_MAX_RETRIES = 10_000


@dataclass(frozen=True)
class PnPair:
    seq_one: np.ndarray
    seq_zero: np.ndarray
    seed: int
    length: int


def corr2(a, b):
    """Pearson correlation of two equal-shape arrays."""
    a = np.asarray(a, dtype=np.float64).ravel()
    b = np.asarray(b, dtype=np.float64).ravel()
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    da = a - a.mean()
    db = b - b.mean()
    na = np.sqrt(np.sum(da * da))
    nb = np.sqrt(np.sum(db * db))
    if na == 0.0 or nb == 0.0:
        raise ValueError("corr2 undefined for zero-variance input")
    return float(np.sum(da * db) / (na * nb))


def _ternary(rng, length):
    x = 2.0 * (rng.random(length) - 0.5)
    # round half away from zero, unlike np.rint's banker's rounding
    return np.sign(x) * np.floor(np.abs(x) + 0.5)


def gen_pn_pair(seed, length):
    """Deterministic weakly-correlated ternary sequence pair for one seed."""
    if length < 8:
        raise ValueError(f"length must be >= 8, got {length}")
    rng = np.random.default_rng(seed)
    for _ in range(_MAX_RETRIES):
        one = _ternary(rng, length)
        zero = _ternary(rng, length)
        if one.std() == 0.0 or zero.std() == 0.0:
            continue
        if abs(corr2(one, zero)) <= CORR_BOUND:
            one.flags.writeable = False
            zero.flags.writeable = False
            return PnPair(one, zero, seed, length)
    raise RuntimeError(f"no weakly-correlated pair found in {_MAX_RETRIES} draws")
