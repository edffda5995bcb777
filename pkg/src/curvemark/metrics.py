"""Quality and robustness measures: PSNR, normalized correlation, BER."""

import numpy as np


def psnr(f, fw):
    """Peak signal-to-noise ratio in dB; peak taken over the reference f.

    Identical images give +inf.
    """
    f = np.asarray(f, dtype=np.float64)
    fw = np.asarray(fw, dtype=np.float64)
    if f.shape != fw.shape:
        raise ValueError(f"shape mismatch: {f.shape} vs {fw.shape}")
    mse = np.mean((fw - f) ** 2)
    if mse == 0.0:
        return float("inf")
    peak = np.max(f ** 2)
    return float(10.0 * np.log10(peak / mse))


def nc(w, w2):
    """Normalized correlation of two bit sequences under the {-1,+1} mapping.

    1.0 for identical watermarks, -1.0 for the complement; nc == 1 - 2*ber.
    """
    w = np.asarray(w, dtype=np.int64)
    w2 = np.asarray(w2, dtype=np.int64)
    if w.shape != w2.shape:
        raise ValueError(f"length mismatch: {w.shape} vs {w2.shape}")
    return float(np.mean((2 * w - 1) * (2 * w2 - 1)))


def ber(w, w2):
    """Fraction of mismatched bits."""
    w = np.asarray(w, dtype=np.int64)
    w2 = np.asarray(w2, dtype=np.int64)
    if w.shape != w2.shape:
        raise ValueError(f"length mismatch: {w.shape} vs {w2.shape}")
    return float(np.mean(w != w2))
