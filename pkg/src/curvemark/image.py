"""Grayscale image I/O and the block tiling shared by embed and extract.

Images are plain 2-D float64 numpy arrays in row-major order, origin at the
top-left.  Values live in [0, 255] at the file boundary; inside the
transform pipeline they are real-valued and only clamped/rounded when
written back to disk.
"""

import warnings

import numpy as np
from PIL import Image

# ITU-R BT.601 luma weights for color inputs.
_LUMA = np.array([0.299, 0.587, 0.114])


def load_image(path):
    """Load a PGM/PNG image as a square float64 array.

    Color inputs are converted to luma with a warning; non-square images
    are rejected.
    """
    try:
        with Image.open(path) as im:
            arr = np.asarray(im)
    except OSError as e:
        raise OSError(f"cannot read image {path!r}: {e}") from e
    if arr.ndim == 3:
        warnings.warn(f"{path}: color image converted to grayscale (BT.601 luma)")
        arr = arr[..., :3].astype(np.float64) @ _LUMA
    if arr.ndim != 2:
        raise ValueError(f"{path}: unsupported image layout with shape {arr.shape}")
    if arr.shape[0] != arr.shape[1]:
        raise ValueError(
            f"{path}: image must be square, got {arr.shape[0]}x{arr.shape[1]}"
        )
    return arr.astype(np.float64)


def quantize(img):
    """Clamp to [0, 255] and round to the nearest integer (still float64)."""
    return np.clip(np.rint(img), 0.0, 255.0)


def save_image(img, path):
    """Write an image as 8-bit grayscale; values are clamped and rounded."""
    img = np.asarray(img, dtype=np.float64)
    data = quantize(img).astype(np.uint8)
    try:
        Image.fromarray(data, mode="L").save(path)
    except (OSError, ValueError) as e:
        raise OSError(f"cannot write image {path!r}: {e}") from e


def divide_blocks(img, block=64):
    """Tile a square image into non-overlapping block x block tiles.

    Returns the tiles as an array of shape (side_count**2, block, block) in
    row-major block order; block (r, c) holds pixel rows [block*r, block*r+block)
    and the matching columns.
    """
    img = np.asarray(img, dtype=np.float64)
    n = img.shape[0]
    if img.shape[0] != img.shape[1]:
        raise ValueError(f"image must be square, got {img.shape}")
    if n % block != 0:
        raise ValueError(f"side {n} not divisible by block size {block}")
    side = n // block
    tiles = img.reshape(side, block, side, block).swapaxes(1, 2)
    return tiles.reshape(side * side, block, block).copy()


def accumulate_blocks(blocks):
    """Exact inverse of divide_blocks: reassemble tiles into one image."""
    blocks = np.asarray(blocks, dtype=np.float64)
    count, b, b2 = blocks.shape
    if b != b2:
        raise ValueError(f"blocks must be square, got {b}x{b2}")
    side = int(round(np.sqrt(count)))
    if side * side != count:
        raise ValueError(f"block count {count} is not a perfect square")
    tiles = blocks.reshape(side, side, b, b).swapaxes(1, 2)
    return tiles.reshape(side * b, side * b).copy()
