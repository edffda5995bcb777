"""Attack simulator producing degraded watermarked images.

Every attack preserves image dimensions so blind block-aligned extraction
can still run: cropping zeroes a corner instead of shrinking, and scaling
goes down and back up to the original size.  Noise attacks are
deterministic given the rng seed.  Noise variances are interpreted on the
[0, 1] intensity scale.
"""

import io
from dataclasses import dataclass

import numpy as np
from PIL import Image
from scipy import ndimage

KINDS = (
    "jpeg", "jpeg2000", "gaussian_noise", "salt_pepper", "speckle",
    "average_filter", "median_filter", "gaussian_filter", "histogram_eq",
    "crop", "scale",
)


@dataclass(frozen=True)
class AttackSpec:
    kind: str
    param: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown attack kind {self.kind!r}")


class AttackSkipped(RuntimeError):
    """Raised when an optional attack cannot run (missing codec support)."""


def _to_uint8(img):
    return np.clip(np.rint(img), 0, 255).astype(np.uint8)


def apply_attack(img, spec: AttackSpec, rng_seed=0):
    img = np.asarray(img, dtype=np.float64)
    rng = np.random.default_rng(rng_seed)
    fn = _DISPATCH[spec.kind]
    return fn(img, spec.param, rng)


def _jpeg(img, qf, rng):
    qf = int(qf)
    if not 1 <= qf <= 100:
        raise ValueError(f"JPEG quality factor {qf} out of range [1, 100]")
    buf = io.BytesIO()
    Image.fromarray(_to_uint8(img), mode="L").save(buf, "JPEG", quality=qf)
    buf.seek(0)
    with Image.open(buf) as im:
        return np.asarray(im, dtype=np.float64)


def _jpeg2000(img, ratio, rng):
    # Optional: requires Pillow built with OpenJPEG. param is the target
    # compression ratio (e.g. 10 -> one tenth of the original size).
    if ratio <= 1:
        raise ValueError(f"JPEG2000 compression ratio {ratio} must be > 1")
    buf = io.BytesIO()
    try:
        Image.fromarray(_to_uint8(img), mode="L").save(
            buf, "JPEG2000", irreversible=True,
            quality_mode="rates", quality_layers=[float(ratio)],
        )
        buf.seek(0)
        with Image.open(buf) as im:
            return np.asarray(im, dtype=np.float64)
    except (OSError, ValueError) as e:
        raise AttackSkipped(f"JPEG2000 codec unavailable: {e}") from e


def _gaussian_noise(img, var, rng):
    if var < 0:
        raise ValueError(f"variance must be >= 0, got {var}")
    x = img / 255.0 + rng.normal(0.0, np.sqrt(var), img.shape)
    return np.clip(x, 0.0, 1.0) * 255.0


def _salt_pepper(img, density, rng):
    if not 0 <= density <= 1:
        raise ValueError(f"density {density} out of range [0, 1]")
    u = rng.random(img.shape)
    out = img.copy()
    out[u < density / 2] = 0.0
    out[(u >= density / 2) & (u < density)] = 255.0
    return out


def _speckle(img, var, rng):
    if var < 0:
        raise ValueError(f"variance must be >= 0, got {var}")
    # zero-mean uniform multiplicative noise of the given variance
    half = np.sqrt(3.0 * var)
    u = rng.uniform(-half, half, img.shape)
    x = (img / 255.0) * (1.0 + u)
    return np.clip(x, 0.0, 1.0) * 255.0


def _check_kernel(k):
    k = int(k)
    if k < 1:
        raise ValueError(f"kernel size {k} must be >= 1")
    return k


def _average_filter(img, k, rng):
    return ndimage.uniform_filter(img, size=_check_kernel(k), mode="nearest")


def _median_filter(img, k, rng):
    return ndimage.median_filter(img, size=_check_kernel(k), mode="nearest")


def _gaussian_filter(img, k, rng, sigma=0.5):
    # k x k truncated Gaussian kernel with sigma 0.5, edge replication
    k = _check_kernel(k)
    if k == 1:
        return img.copy()
    ax = np.arange(k) - (k - 1) / 2.0
    g = np.exp(-(ax ** 2) / (2.0 * sigma ** 2))
    kernel = np.outer(g, g)
    kernel /= kernel.sum()
    return ndimage.correlate(img, kernel, mode="nearest")


def _histogram_eq(img, _param, rng):
    data = _to_uint8(img)
    hist = np.bincount(data.ravel(), minlength=256)
    cdf = np.cumsum(hist).astype(np.float64)
    nonzero = cdf[cdf > 0]
    if nonzero.size == 0:
        return img.copy()
    cdf_min = nonzero[0]
    total = data.size
    lut = np.rint((cdf - cdf_min) / max(total - cdf_min, 1) * 255.0)
    lut = np.clip(lut, 0, 255)
    return lut[data].astype(np.float64)


def _crop(img, fraction, rng):
    if not 0 <= fraction <= 1:
        raise ValueError(f"crop fraction {fraction} out of range [0, 1]")
    n = img.shape[0]
    side = int(round(n * np.sqrt(fraction)))
    out = img.copy()
    out[:side, :side] = 0.0
    return out


def _scale(img, fraction, rng):
    # param is the retained area fraction: 1/4 halves each side
    if not 0 < fraction <= 1:
        raise ValueError(f"scale fraction {fraction} out of range (0, 1]")
    n = img.shape[0]
    small = max(1, int(round(n * np.sqrt(fraction))))
    im = Image.fromarray(_to_uint8(img), mode="L")
    down = im.resize((small, small), Image.BICUBIC)
    up = down.resize((n, n), Image.BICUBIC)
    return np.asarray(up, dtype=np.float64)


_DISPATCH = {
    "jpeg": _jpeg,
    "jpeg2000": _jpeg2000,
    "gaussian_noise": _gaussian_noise,
    "salt_pepper": _salt_pepper,
    "speckle": _speckle,
    "average_filter": _average_filter,
    "median_filter": _median_filter,
    "gaussian_filter": _gaussian_filter,
    "histogram_eq": _histogram_eq,
    "crop": _crop,
    "scale": _scale,
}
