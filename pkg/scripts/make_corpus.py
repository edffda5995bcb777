#!/usr/bin/env python3
"""Materialize the 512x512 grayscale test corpus as PNG files.

The five hosts ship with scikit-image, so the corpus can be rebuilt
anywhere without network access.  Usage:

    python scripts/make_corpus.py [out_dir]
"""

import sys

import skimage.data

from curvemark.image import save_image

HOSTS = ("camera", "gravel", "brick", "grass", "moon")


def main(out_dir="corpus"):
    import os
    os.makedirs(out_dir, exist_ok=True)
    for name in HOSTS:
        img = getattr(skimage.data, name)()
        assert img.shape == (512, 512), (name, img.shape)
        path = os.path.join(out_dir, f"{name}.png")
        save_image(img, path)
        print(path)


if __name__ == "__main__":
    main(*sys.argv[1:])
