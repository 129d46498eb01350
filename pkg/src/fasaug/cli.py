"""Command-line entry point: ``fasaug augment | score | preview``.

Exit codes: 0 success, 1 validation or parse error, 2 per-sample processing failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from .errors import FasAugError, JobError
from .pipeline.io import read_image, read_mask, write_image
from .pipeline.jobs import AugmentJobConfig, AugmentRanges, parse_param, run_augment_job, run_score_job, write_report
from .rng import RngStream
from .sdsc import apply_sdsc, gauss_noise, sample_noise_sigma
from .spsc import apply_spsc, color_jitter, moire_pattern, sample_color_jitter, sample_moire_degree

EXIT_OK, EXIT_INVALID, EXIT_SAMPLE_FAILURE = 0, 1, 2

PROTOCOLS = ("p1", "p2.1", "p2.2")
PREVIEW_AUGS = ("spsc", "sdsc", "moire", "jitter", "noise")


def _u64(text):
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"{text} is not an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fasaug", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    aug = sub.add_parser("augment", help="turn live samples into simulated attack samples")
    aug.add_argument("--manifest", required=True, type=Path)
    aug.add_argument("--protocol", required=True, choices=PROTOCOLS)
    aug.add_argument("--out", required=True, type=Path)
    aug.add_argument("--seed", required=True, type=_u64)
    aug.add_argument("--multiplier", type=int, default=1)
    aug.add_argument("--workers", type=int, default=1)
    aug.add_argument("--param", action="append", default=[], metavar="KEY=LO:HI",
                     help="override a sampling range, e.g. spsc.moire_degree=0.001:0.005")

    score = sub.add_parser("score", help="compute APCER/BPCER/ACER/AUC for a prediction file")
    score.add_argument("--predictions", required=True, type=Path)
    grp = score.add_mutually_exclusive_group()
    grp.add_argument("--dev", type=Path, help="pick the threshold minimizing ACER on this file")
    grp.add_argument("--threshold", type=float)
    score.add_argument("--report", required=True, type=Path)

    prev = sub.add_parser("preview", help="write original and augmented image side by side")
    prev.add_argument("--input", required=True, type=Path)
    prev.add_argument("--aug", required=True, choices=PREVIEW_AUGS)
    prev.add_argument("--seed", required=True, type=_u64)
    prev.add_argument("--out", required=True, type=Path)
    prev.add_argument("--mask", type=Path, help="face mask for sdsc (default: centered ellipse)")
    return parser


def preview_image(img, aug: str, rng: RngStream, mask=None):
    if aug == "spsc":
        return apply_spsc(img, rng)
    if aug == "sdsc":
        return apply_sdsc(img, mask, rng)
    if aug == "moire":
        return moire_pattern(img, sample_moire_degree(rng))
    if aug == "jitter":
        return color_jitter(img, sample_color_jitter(rng))
    return gauss_noise(img, sample_noise_sigma(rng), rng)


def _run(args) -> int:
    if args.command == "augment":
        overrides = dict(parse_param(p) for p in args.param)
        config = AugmentJobConfig(
            manifest_path=args.manifest,
            protocol=args.protocol,
            output_dir=args.out,
            global_seed=args.seed,
            multiplier=args.multiplier,
            ranges=AugmentRanges().with_overrides(overrides),
            workers=args.workers,
        )
        print(run_augment_job(config))
    elif args.command == "score":
        report = run_score_job(args.predictions, args.dev, args.threshold)
        write_report(args.report, report)
        print(f"APCER {report.apcer:.4%}  BPCER {report.bpcer:.4%}  ACER {report.acer:.4%}  "
              f"AUC {report.auc:.4f}  threshold {report.threshold:g}")
    else:
        img = read_image(args.input)
        mask = read_mask(args.mask) if args.mask else None
        out = preview_image(img, args.aug, RngStream(args.seed), mask)
        write_image(args.out, np.concatenate([img, out], axis=1))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(args)
    except JobError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SAMPLE_FAILURE
    except (FasAugError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
