"""Blind robust image watermarking in the curvelet domain.

A 64-bit watermark is hidden in a square grayscale image: the host is
scrambled with an Arnold Cat map, split into 64x64 blocks, and each block
carries one bit as an amplified pseudo-noise string written into the
high-frequency DCT coefficients of the block's curvelet approximation
sub-band.  Extraction is blind: only the keys are needed, and the bit is
decided by correlation against the two candidate noise strings.
"""

from curvemark.arnold import ArnoldParams, arnold_map, arnold_period, arnold_step, arnold_unmap
from curvemark.attacks import AttackSkipped, AttackSpec, apply_attack
from curvemark.codec import KeySet, embed, extract, wm_from_bits, wm_from_hex, wm_to_hex
from curvemark.curvelet import CurveletParams, CurveletPyramid, fdcut_forward, fdcut_inverse, get_approx, set_approx
from curvemark.dct import HfRegion, dct2, extract_hf, idct2, replace_hf
from curvemark.image import accumulate_blocks, divide_blocks, load_image, save_image
from curvemark.metrics import ber, nc, psnr
from curvemark.pn import PnPair, corr2, gen_pn_pair

__all__ = [
    "ArnoldParams", "arnold_map", "arnold_period", "arnold_step", "arnold_unmap",
    "AttackSkipped", "AttackSpec", "apply_attack",
    "KeySet", "embed", "extract", "wm_from_bits", "wm_from_hex", "wm_to_hex",
    "CurveletParams", "CurveletPyramid", "fdcut_forward", "fdcut_inverse",
    "get_approx", "set_approx",
    "HfRegion", "dct2", "idct2", "extract_hf", "replace_hf",
    "load_image", "save_image", "divide_blocks", "accumulate_blocks",
    "psnr", "nc", "ber",
    "PnPair", "corr2", "gen_pn_pair",
]
