"""Wrapping-style fast discrete curvelet transform for square blocks.

The frequency plane is tiled by a smooth partition of unity: a separable
low-pass window for the approximation (coarse) band, concentric coronae
split into angular wedges for the directional bands, and an outer corona
for the finest band.  Each windowed spectrum is wrapped to its canonical
rectangle around the origin and inverse-FFT'd to give the coefficients.
Because the squared windows sum to one everywhere, the transform is a
tight frame: the adjoint (same windows, FFT back, accumulate) inverts it
exactly and total coefficient energy equals pixel energy.

For a 64x64 block with the default 3 scales the coarse band is 21x21,
which is the sub-band the watermark codec embeds into.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import fft as sfft


@dataclass(frozen=True)
class CurveletParams:
    scales: int = 3
    angles_coarsest_detail: int = 16
    real_input: bool = True
    # fraction of each radial band that stays at unit gain before the
    # smooth decay begins; larger keeps embedded coefficients stronger
    passband_flat: float = 0.53

    def __post_init__(self):
        if self.scales < 2:
            raise ValueError(f"scales must be >= 2, got {self.scales}")
        if self.angles_coarsest_detail < 4 or self.angles_coarsest_detail % 4:
            raise ValueError(
                f"angle count must be a positive multiple of 4, got {self.angles_coarsest_detail}"
            )


@dataclass
class CurveletPyramid:
    coarse: np.ndarray          # real approximation band (21x21 for side 64)
    bands: list                 # per middle scale: list of complex wedge arrays
    fine: np.ndarray            # finest-scale coefficients, side x side
    params: CurveletParams
    source_side: int


def _smooth_pair(t):
    """C-infinity crossfade pair (fall, rise) with fall^2 + rise^2 == 1.

    fall goes 1 -> 0 over t in [0, 1]; rise is its mirror.
    """
    t = np.clip(np.asarray(t, dtype=np.float64), 0.0, 1.0)

    def raw(u):
        out = np.zeros_like(u)
        inside = (u > 0) & (u < 1)
        ui = u[inside]
        out[inside] = np.exp(1.0 - 1.0 / (1.0 - np.exp(1.0 - 1.0 / ui)))
        out[u <= 0] = 1.0
        return out

    fall = raw(t)
    rise = raw(1.0 - t)
    norm = np.sqrt(fall * fall + rise * rise)
    return fall / norm, rise / norm


def _lowpass_1d(k, m, flat=0.5):
    """1-D window: 1 on |k| <= 2m*flat, smooth decay to 0 at |k| >= 2m."""
    lo = 2.0 * m * flat
    t = (np.abs(k) - lo) / (2.0 * m - lo)
    fall, _ = _smooth_pair(t)
    return np.where(np.abs(k) <= lo, 1.0, np.where(np.abs(k) >= 2 * m, 0.0, fall))


def _angular_windows(theta, nang):
    """Smooth angular partition: nang windows with squares summing to 1."""
    delta = 2.0 * np.pi / nang
    q = (theta + np.pi) / delta - 0.5
    l0 = np.floor(q).astype(int)
    frac = q - l0
    fall, rise = _smooth_pair(frac)
    windows = np.zeros((nang,) + theta.shape)
    flat = np.arange(theta.size)
    windows.reshape(nang, -1)[(l0 % nang).ravel(), flat] = fall.ravel()
    windows.reshape(nang, -1)[((l0 + 1) % nang).ravel(), flat] += rise.ravel()
    return windows


class _WindowBank:
    """Precomputed frequency windows and wrapping boxes for one (side, params)."""

    def __init__(self, side, params: CurveletParams):
        n, s = side, params.scales
        k = np.arange(n) - n // 2       # fftshift-ordered frequencies
        kx, ky = np.meshgrid(k, k, indexing="ij")

        m0 = n / 3.0 / 2.0 ** (s - 1)
        flat = params.passband_flat
        lows = [
            np.outer(_lowpass_1d(k, m0 * 2.0 ** j, flat), _lowpass_1d(k, m0 * 2.0 ** j, flat))
            for j in range(s - 1)
        ]

        self.side = n
        self.params = params
        half = int(np.floor(2.0 * m0))
        self.coarse_slice = slice(n // 2 - half, n // 2 + half + 1)
        self.coarse_size = 2 * half + 1
        coarse_win = lows[0]

        theta = np.arctan2(ky, kx)
        wedge_wins = []                 # per middle scale: full-grid windows
        for j in range(1, s - 1):
            corona = np.sqrt(np.clip(lows[j] ** 2 - lows[j - 1] ** 2, 0.0, None))
            nang = params.angles_coarsest_detail * 2 ** ((j - 1) // 2)
            ang = _angular_windows(theta, nang)
            wedge_wins.append([corona * ang[l] for l in range(nang)])
        fine_win = np.sqrt(np.clip(1.0 - lows[-1] ** 2, 0.0, None))

        # Force an exact partition of unity (construction is already ~1e-15).
        total = coarse_win ** 2 + fine_win ** 2
        for scale in wedge_wins:
            for w in scale:
                total += w ** 2
        norm = np.sqrt(total)
        coarse_win /= norm
        fine_win /= norm
        self.coarse_win = coarse_win[self.coarse_slice, self.coarse_slice].copy()
        self.fine_win = fine_win
        self.wedges = []                # (scale_idx, wedge_idx, window_patch, rows, cols)
        for j, scale in enumerate(wedge_wins):
            for l, w in enumerate(scale):
                w = w / norm
                rows, cols = np.nonzero(w)
                rs = slice(rows.min(), rows.max() + 1)
                cs = slice(cols.min(), cols.max() + 1)
                self.wedges.append((j, l, w[rs, cs].copy(), rs, cs))
        self.n_middle_scales = len(wedge_wins)
        self.angles_per_scale = [len(scale) for scale in wedge_wins]


@lru_cache(maxsize=8)
def _bank(side, params: CurveletParams):
    return _WindowBank(side, params)


def _spectrum(block):
    return sfft.fftshift(sfft.fft2(block, norm="ortho"))


def fdcut_forward(block, params: CurveletParams = CurveletParams()):
    """Analyze a square block into a curvelet pyramid."""
    block = np.asarray(block, dtype=np.float64 if params.real_input else np.complex128)
    if block.ndim != 2 or block.shape[0] != block.shape[1]:
        raise ValueError(f"block must be square, got shape {block.shape}")
    bank = _bank(block.shape[0], params)
    xf = _spectrum(block)

    cs = bank.coarse_slice
    coarse = sfft.ifft2(sfft.ifftshift(xf[cs, cs] * bank.coarse_win), norm="ortho")
    if params.real_input:
        coarse = coarse.real

    bands = [[] for _ in range(bank.n_middle_scales)]
    for j, _l, win, rs, colsl in bank.wedges:
        bands[j].append(sfft.ifft2(xf[rs, colsl] * win, norm="ortho"))
    fine = sfft.ifft2(xf * bank.fine_win, norm="ortho")
    return CurveletPyramid(coarse, bands, fine, params, block.shape[0])


def fdcut_inverse(pyr: CurveletPyramid):
    """Adjoint synthesis: exact inverse of fdcut_forward for tight frames."""
    bank = _bank(pyr.source_side, pyr.params)
    _check_structure(pyr, bank)
    xf = np.zeros((pyr.source_side, pyr.source_side), dtype=np.complex128)

    cs = bank.coarse_slice
    xf[cs, cs] += sfft.fftshift(sfft.fft2(pyr.coarse, norm="ortho")) * bank.coarse_win
    for j, l, win, rs, colsl in bank.wedges:
        xf[rs, colsl] += sfft.fft2(pyr.bands[j][l], norm="ortho") * win
    xf += sfft.fft2(pyr.fine, norm="ortho") * bank.fine_win

    x = sfft.ifft2(sfft.ifftshift(xf), norm="ortho")
    return x.real if pyr.params.real_input else x


def _check_structure(pyr, bank):
    if pyr.coarse.shape != (bank.coarse_size, bank.coarse_size):
        raise ValueError(
            f"coarse band shape {pyr.coarse.shape} inconsistent, "
            f"expected {(bank.coarse_size, bank.coarse_size)}"
        )
    if len(pyr.bands) != bank.n_middle_scales or any(
        len(scale) != nang for scale, nang in zip(pyr.bands, bank.angles_per_scale)
    ):
        raise ValueError("directional band layout inconsistent with parameters")
    if pyr.fine.shape != (pyr.source_side, pyr.source_side):
        raise ValueError(f"fine band shape {pyr.fine.shape} != image shape")


def get_approx(pyr: CurveletPyramid):
    """Copy of the approximation (coarse) sub-band."""
    return pyr.coarse.copy()


def set_approx(pyr: CurveletPyramid, m):
    """New pyramid with the coarse band replaced by m."""
    m = np.asarray(m, dtype=np.float64)
    if m.shape != pyr.coarse.shape:
        raise ValueError(f"coarse band shape {m.shape} != {pyr.coarse.shape}")
    return CurveletPyramid(m.copy(), [list(s) for s in pyr.bands], pyr.fine,
                           pyr.params, pyr.source_side)


def pyramid_energy(pyr: CurveletPyramid):
    e = np.sum(np.abs(pyr.coarse) ** 2) + np.sum(np.abs(pyr.fine) ** 2)
    for scale in pyr.bands:
        for w in scale:
            e += np.sum(np.abs(w) ** 2)
    return e


def coarse_size(side, params: CurveletParams = CurveletParams()):
    return _bank(side, params).coarse_size


# Coarse-only shortcuts used by the codec.  Embedding touches nothing but
# the approximation band, so by linearity of the tight frame the full
# analysis/synthesis of the directional bands can be skipped.

def coarse_analysis(block, params: CurveletParams = CurveletParams()):
    """Approximation band only; equals get_approx(fdcut_forward(block))."""
    block = np.asarray(block, dtype=np.float64)
    bank = _bank(block.shape[0], params)
    cs = bank.coarse_slice
    xf = _spectrum(block)
    return sfft.ifft2(sfft.ifftshift(xf[cs, cs] * bank.coarse_win), norm="ortho").real


def coarse_replace(block, new_coarse, params: CurveletParams = CurveletParams()):
    """Block whose pyramid has its coarse band replaced by new_coarse.

    Equals fdcut_inverse(set_approx(fdcut_forward(block), new_coarse)).
    """
    block = np.asarray(block, dtype=np.float64)
    bank = _bank(block.shape[0], params)
    cs = bank.coarse_slice
    xf = _spectrum(block)
    old = sfft.ifft2(sfft.ifftshift(xf[cs, cs] * bank.coarse_win), norm="ortho").real
    delta = np.asarray(new_coarse, dtype=np.float64) - old
    xf[cs, cs] += sfft.fftshift(sfft.fft2(delta, norm="ortho")) * bank.coarse_win
    return sfft.ifft2(sfft.ifftshift(xf), norm="ortho").real
