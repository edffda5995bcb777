#!/usr/bin/env python3
"""Full robustness sweep: embed, attack, extract over the whole corpus.

Builds the corpus, writes a bench config with the standard attack grid
(JPEG quality ladder, noise densities, filters, histogram equalization,
cropping, scaling), runs the bench, and leaves a deterministic CSV plus
the echoed config under the output directory.

    python scripts/run_robustness.py [out_dir]
"""

import os
import sys

from curvemark.cli import BenchConfig, run_bench

sys.path.insert(0, os.path.dirname(__file__))
from make_corpus import main as make_corpus  # noqa: E402

CONFIG_TEXT = """\
version=1
corpus_dir={corpus}
out_csv={csv}
# scrambling off for the robustness protocol: compression and filtering
# attacks act on the unscrambled mark (see README)
key2=0
gain=125
watermark=seed:7
attack=jpeg:10,20,30,40,50,60
attack=jpeg2000:10
attack=gaussian_noise:0.01,0.05,0.10
attack=salt_pepper:0.05,0.10,0.30
attack=speckle:0.01,0.05
attack=average_filter:3,5
attack=median_filter:3,5
attack=gaussian_filter:3,5
attack=histogram_eq:0
attack=crop:0.0625,0.25
attack=scale:0.25,0.5
"""


def main(out_dir="runs/robustness"):
    os.makedirs(out_dir, exist_ok=True)
    corpus = os.path.join(out_dir, "corpus")
    make_corpus(corpus)
    csv_path = os.path.join(out_dir, "robustness.csv")
    text = CONFIG_TEXT.format(corpus=corpus, csv=csv_path)
    cfg_path = os.path.join(out_dir, "bench.cfg")
    with open(cfg_path, "w") as fh:
        fh.write(text)
    cfg = BenchConfig.load(cfg_path)
    rows = run_bench(cfg, echo_text=text)
    print(f"wrote {len(rows)} rows to {csv_path}")


if __name__ == "__main__":
    main(*sys.argv[1:])
