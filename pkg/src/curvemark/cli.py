"""Command-line surface and benchmark orchestration.

Subcommands: embed, extract, attack, bench, period.  The bench runs an
attack grid over a corpus directory and writes one CSV row per
(image, attack, param) work item; rows are computed in a worker pool but
always written in sorted order with fixed number formatting, so the CSV
is byte-identical across runs of the same config.
"""

import argparse
import csv
import hashlib
import os
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from curvemark.arnold import arnold_period
from curvemark.attacks import KINDS, AttackSkipped, AttackSpec, apply_attack
from curvemark.codec import BLOCK, KeySet, embed, extract, wm_from_hex, wm_to_hex
from curvemark.image import load_image, save_image
from curvemark.metrics import ber, nc, psnr

BENCH_CONFIG_VERSION = 1

_IMAGE_EXTS = (".png", ".pgm", ".bmp", ".tif", ".tiff")


@dataclass
class BenchConfig:
    corpus_dir: str
    out_csv: str
    keys: KeySet = field(default_factory=KeySet)
    # watermark source: ("hex", digits) for one fixed mark, or
    # ("seed", base) for a per-image random mark derived from the base seed
    wm_source: tuple = ("seed", 7)
    attack_grid: list = field(default_factory=list)   # [(kind, [param, ...]), ...]
    attack_seed: int = 0
    workers: int = 0                                  # 0 -> os.cpu_count()

    def __post_init__(self):
        for kind, params in self.attack_grid:
            AttackSpec(kind, params[0] if params else 0.0)  # validates kind
        mode = self.wm_source[0]
        if mode not in ("hex", "seed"):
            raise ValueError(f"unknown watermark source {mode!r}")

    @classmethod
    def load(cls, path):
        kv, grid = {}, []
        with open(path) as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, _, value = line.partition("=")
                key, value = key.strip(), value.strip()
                if key == "attack":
                    kind, _, plist = value.partition(":")
                    params = [float(p) for p in plist.split(",")] if plist else [0.0]
                    grid.append((kind.strip(), params))
                else:
                    kv[key] = value
        version = int(kv.pop("version", "0"))
        if version != BENCH_CONFIG_VERSION:
            raise ValueError(f"unsupported bench config version {version}")
        keys = KeySet(
            key1=int(kv.pop("key1", str(KeySet.key1)), 0),
            key2=int(kv.pop("key2", KeySet.key2)),
            a=int(kv.pop("a", KeySet.a)),
            b=int(kv.pop("b", KeySet.b)),
            gain=float(kv.pop("gain", KeySet.gain)),
            hf_threshold=int(kv.pop("hf_threshold", KeySet.hf_threshold)),
        )
        wm = kv.pop("watermark", "seed:7")
        mode, _, arg = wm.partition(":")
        source = (mode, arg) if mode == "hex" else (mode, int(arg or "7"))
        cfg = cls(
            corpus_dir=kv.pop("corpus_dir"),
            out_csv=kv.pop("out_csv"),
            keys=keys,
            wm_source=source,
            attack_grid=grid,
            attack_seed=int(kv.pop("attack_seed", "0")),
            workers=int(kv.pop("workers", "0")),
        )
        if kv:
            raise ValueError(f"unknown bench config keys: {sorted(kv)}")
        return cfg


CSV_HEADER = ["image_id", "attack", "param", "psnr_db", "nc", "ber",
              "status", "seed", "keyset_hash"]


def _fmt(x):
    if x is None:
        return ""
    if np.isinf(x):
        return "inf"
    return f"{x:.6f}"


def _row_seed(base, image_id, kind, param):
    text = f"{base}|{image_id}|{kind}|{param:g}"
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:4], "big")


def _corpus_images(corpus_dir):
    try:
        names = sorted(os.listdir(corpus_dir))
    except OSError as e:
        raise OSError(f"cannot list corpus directory {corpus_dir!r}: {e}") from e
    paths = [os.path.join(corpus_dir, n) for n in names
             if n.lower().endswith(_IMAGE_EXTS)]
    if not paths:
        raise ValueError(f"no corpus images found under {corpus_dir!r}")
    return paths


def _image_watermark(cfg, index, block_count):
    mode, arg = cfg.wm_source
    if mode == "hex":
        wm = wm_from_hex(arg)
        if wm.size != block_count:
            raise ValueError(
                f"watermark length {wm.size} != block count {block_count}")
        return wm
    rng = np.random.default_rng([int(arg), index])
    return rng.integers(0, 2, block_count)


def run_bench(cfg: BenchConfig, echo_text=None, quiet=False):
    """Execute the grid and write the CSV; returns the list of rows."""
    paths = _corpus_images(cfg.corpus_dir)
    khash = cfg.keys.digest()

    marked = {}
    wms = {}
    embed_psnr = {}
    for idx, path in enumerate(paths):
        image_id = os.path.splitext(os.path.basename(path))[0]
        host = load_image(path)
        wm = _image_watermark(cfg, idx, (host.shape[0] // BLOCK) ** 2)
        wmk = embed(host, wm, cfg.keys)
        marked[image_id], wms[image_id] = wmk, wm
        embed_psnr[image_id] = psnr(host, wmk)

    items = sorted(
        (image_id, kind, param)
        for image_id in marked
        for kind, params in cfg.attack_grid
        for param in params
    )

    def work(item):
        image_id, kind, param = item
        seed = _row_seed(cfg.attack_seed, image_id, kind, param)
        try:
            hit = apply_attack(marked[image_id], AttackSpec(kind, param), seed)
            got = extract(hit, cfg.keys)
            row_nc, row_ber, status = nc(wms[image_id], got), ber(wms[image_id], got), "ok"
        except AttackSkipped as e:
            row_nc, row_ber, status = None, None, f"skipped: {e}"
        except Exception as e:                      # keep the run going per-row
            row_nc, row_ber, status = None, None, f"error: {e}"
        return [image_id, kind, f"{param:g}", _fmt(embed_psnr[image_id]),
                _fmt(row_nc), _fmt(row_ber), status, str(seed), khash]

    workers = cfg.workers or os.cpu_count() or 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows = list(pool.map(work, items))

    out_dir = os.path.dirname(os.path.abspath(cfg.out_csv))
    os.makedirs(out_dir, exist_ok=True)
    with open(cfg.out_csv, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(rows)
    if echo_text is not None:
        with open(cfg.out_csv + ".config", "w") as fh:
            fh.write(echo_text)

    if not quiet:
        _print_summary(rows)
    return rows


def _print_summary(rows):
    groups = {}
    for row in rows:
        if row[6] == "ok":
            groups.setdefault((row[1], row[2]), []).append(float(row[4]))
    print(f"{'attack':<18} {'param':>8} {'mean_nc':>8}  n")
    for (kind, param), vals in sorted(groups.items()):
        print(f"{kind:<18} {param:>8} {np.mean(vals):>8.4f}  {len(vals)}")


# ---------------------------------------------------------------------------
# argparse plumbing


def _add_key_flags(p):
    p.add_argument("--key1", type=lambda s: int(s, 0), default=None,
                   help="pseudo-noise seed (decimal or 0x hex)")
    p.add_argument("--key2", type=int, default=None, help="Arnold iterations")
    p.add_argument("--a", type=int, default=None, help="Arnold parameter a")
    p.add_argument("--b", type=int, default=None, help="Arnold parameter b")
    p.add_argument("--gain", type=float, default=None, help="embedding gain")
    p.add_argument("--hf-threshold", type=int, default=None,
                   help="DCT high-frequency boundary (u+v >= T)")
    p.add_argument("--keys", default=None, metavar="FILE",
                   help="key set file; explicit flags override its fields")


def _keys_from_args(args):
    base = KeySet.load(args.keys) if args.keys else KeySet()
    fields = {}
    for name in ("key1", "key2", "a", "b", "gain"):
        value = getattr(args, name)
        if value is not None:
            fields[name] = value
    if args.hf_threshold is not None:
        fields["hf_threshold"] = args.hf_threshold
    return KeySet(**{**base.__dict__, **fields})


def _cmd_embed(args):
    keys = _keys_from_args(args)
    host = load_image(args.input)
    wm = wm_from_hex(args.wm) if args.wm else None
    blocks = (host.shape[0] // BLOCK) ** 2
    if wm is None:
        wm = np.random.default_rng(args.seed).integers(0, 2, blocks)
        print(f"watermark {wm_to_hex(wm)}")
    elif wm.size != blocks:
        raise UsageError(f"watermark length {wm.size} != block count {blocks}")
    marked = embed(host, wm, keys)
    save_image(marked, args.out)
    print(f"PSNR {psnr(host, marked):.2f} dB")
    return 0


def _cmd_extract(args):
    keys = _keys_from_args(args)
    bits = extract(load_image(args.input), keys)
    print(wm_to_hex(bits))
    if args.expect:
        ref = wm_from_hex(args.expect)
        if ref.size != bits.size:
            raise UsageError(f"--expect length {ref.size} != extracted {bits.size}")
        print(f"NC {nc(ref, bits):.6f}  BER {ber(ref, bits):.6f}")
    return 0


def _cmd_attack(args):
    img = load_image(args.input)
    try:
        hit = apply_attack(img, AttackSpec(args.kind, args.param), args.seed)
    except AttackSkipped as e:
        print(f"skipped: {e}", file=sys.stderr)
        return 1
    save_image(hit, args.out)
    print(f"PSNR {psnr(img, hit):.2f} dB")
    return 0


def _cmd_bench(args):
    cfg = BenchConfig.load(args.config)
    if args.out:
        cfg.out_csv = args.out
    with open(args.config) as fh:
        echo = fh.read()
    rows = run_bench(cfg, echo_text=echo)
    print(f"wrote {len(rows)} rows to {cfg.out_csv}")
    return 0


def _cmd_period(args):
    print(arnold_period(args.n, args.a, args.b))
    return 0


class UsageError(ValueError):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="curvemark",
        description="Blind robust image watermarking in the curvelet domain.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="embed a watermark into a grayscale image")
    p.add_argument("input")
    p.add_argument("out")
    p.add_argument("--wm", help="watermark as hex digits (4 bits per digit)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for a random watermark when --wm is omitted")
    _add_key_flags(p)
    p.set_defaults(fn=_cmd_embed)

    p = sub.add_parser("extract", help="blind-extract a watermark")
    p.add_argument("input")
    p.add_argument("--expect", help="reference watermark hex; prints NC/BER")
    _add_key_flags(p)
    p.set_defaults(fn=_cmd_extract)

    p = sub.add_parser("attack", help="apply one attack to an image")
    p.add_argument("input")
    p.add_argument("out")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--param", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_attack)

    p = sub.add_parser("bench", help="run an attack grid over a corpus")
    p.add_argument("--config", required=True, help="bench config file")
    p.add_argument("--out", help="override the config's output CSV path")
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("period", help="print the Arnold map period")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.set_defaults(fn=_cmd_period)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.fn(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (OSError, ValueError, RuntimeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
