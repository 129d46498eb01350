"""Batch augmentation and scoring jobs."""
from __future__ import annotations

import dataclasses
import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..errors import ContractViolation, InvalidInputError, InvalidParameterError, JobError, SampleIOError
from ..imgcore import as_image
from ..metrics import MetricsReport, evaluate, select_threshold
from ..rng import RngStream, derive_seed
from ..sdsc import SdscRanges, apply_sdsc
from ..spsc import SpscRanges, apply_spsc
from .io import read_image, read_mask, write_image
from .policy import SDSC, SPSC, ProtocolPolicy, policy_for_protocol, preprocess_window
from .records import SampleRecord, load_manifest, load_predictions, resolve, write_manifest

log = logging.getLogger(__name__)

OUTPUT_MANIFEST = "manifest.csv"
DEFAULT_THRESHOLD = 0.5


@dataclass(frozen=True)
class AugmentRanges:
    spsc: SpscRanges = SpscRanges()
    sdsc: SdscRanges = SdscRanges()

    def with_overrides(self, overrides: dict) -> "AugmentRanges":
        """Apply ``{"spsc.hue": (lo, hi), "sdsc.blur_sigma": (lo, hi), ...}``."""
        groups = {"spsc": {}, "sdsc": {}}
        for key, value in overrides.items():
            group, _, name = key.partition(".")
            if group not in groups:
                raise InvalidParameterError(f"parameter key must start with spsc. or sdsc., got {key!r}")
            target = getattr(self, group)
            if name not in {f.name for f in dataclasses.fields(target)}:
                raise InvalidParameterError(f"unknown parameter {key!r}")
            groups[group][name] = tuple(value)
        return AugmentRanges(
            spsc=dataclasses.replace(self.spsc, **groups["spsc"]),
            sdsc=dataclasses.replace(self.sdsc, **groups["sdsc"]),
        )


def parse_param(text: str):
    """``KEY=LO:HI`` (or ``KEY=V`` for a fixed value) -> (key, (lo, hi))."""
    key, sep, value = text.partition("=")
    if not sep or not key:
        raise InvalidParameterError(f"expected KEY=RANGE, got {text!r}")
    parts = value.split(":")
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        raise InvalidParameterError(f"range values must be numbers in {text!r}") from None
    if len(nums) == 1:
        nums = nums * 2
    if len(nums) != 2:
        raise InvalidParameterError(f"expected LO:HI in {text!r}")
    return key.strip(), (nums[0], nums[1])


@dataclass
class AugmentJobConfig:
    manifest_path: Path
    protocol: str
    output_dir: Path
    global_seed: int
    multiplier: int = 1
    ranges: AugmentRanges = field(default_factory=AugmentRanges)
    workers: int = 1

    def validate(self):
        if self.multiplier < 1:
            raise InvalidParameterError(f"multiplier must be >= 1, got {self.multiplier}")
        if self.workers < 1:
            raise InvalidParameterError(f"workers must be >= 1, got {self.workers}")
        if not 0 <= self.global_seed < 2**64:
            raise InvalidParameterError(f"seed must be an unsigned 64-bit integer, got {self.global_seed}")


def augmented_id(sample_id: str, rep: int) -> str:
    return f"{sample_id}__aug{rep}"


def load_sample(record: SampleRecord, base_dir: Path):
    """Read the image and optional mask of a record, cropped to the network-facing window."""
    try:
        img = read_image(resolve(base_dir, record.path))
        mask = read_mask(resolve(base_dir, record.mask_path)) if record.mask_path else None
    except OSError as exc:
        raise SampleIOError(record.sample_id, str(exc)) from exc
    if mask is not None and mask.shape != img.shape[:2]:
        raise SampleIOError(record.sample_id, f"mask shape {mask.shape} != image shape {img.shape[:2]}")
    x0, y0, x1, y1 = preprocess_window(img.shape[0], img.shape[1], record)
    img = img[y0:y1, x0:x1].copy()
    if mask is not None:
        mask = mask[y0:y1, x0:x1].copy()
    return img, mask


def augment_image(img, mask, policy: ProtocolPolicy, rng: RngStream, ranges: AugmentRanges = AugmentRanges()):
    """Pick the augmentation for one repetition and run it; returns (image, attack_type).

    When the policy holds both families the first draw picks SPSC (0) or SDSC (1).
    """
    choices = sorted(policy.augmentations)
    kind = choices[rng.integer(0, len(choices) - 1)] if len(choices) > 1 else choices[0]
    if kind == SPSC:
        return apply_spsc(img, rng, ranges.spsc), "simulated_physical"
    return apply_sdsc(img, mask, rng, ranges.sdsc), "simulated_digital"


def augment_sample(record: SampleRecord, policy: ProtocolPolicy, rng: RngStream,
                   base_dir=".", ranges: AugmentRanges = AugmentRanges()):
    """Load, preprocess and augment one live record into a simulated attack sample."""
    if record.label != "live":
        raise ContractViolation(f"only live samples are augmented; {record.sample_id!r} is {record.label}")
    img, mask = load_sample(record, Path(base_dir))
    out, attack_type = augment_image(img, mask, policy, rng, ranges)
    return as_image(out), SampleRecord(record.sample_id, record.path, "attack", attack_type)


def _absolute(record: SampleRecord, base_dir: Path) -> SampleRecord:
    return dataclasses.replace(
        record,
        path=str(resolve(base_dir, record.path).resolve()),
        mask_path=str(resolve(base_dir, record.mask_path).resolve()) if record.mask_path else None,
    )


def run_augment_job(config: AugmentJobConfig) -> Path:
    """Augment every live record ``multiplier`` times and write the output manifest.

    Originals are listed first (paths made absolute), each followed by its
    augmented copies ``<sample_id>__aug<rep>.png``. Pixel output depends only on
    the config, never on ``workers``.
    """
    config.validate()
    manifest_path = Path(config.manifest_path)
    base_dir = manifest_path.parent
    records = load_manifest(manifest_path)
    policy = policy_for_protocol(config.protocol)
    out_dir = Path(config.output_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise InvalidInputError(f"cannot create output dir {out_dir}: {exc}") from exc
    if not os.access(out_dir, os.W_OK):
        raise InvalidInputError(f"output dir {out_dir} is not writable")

    ids = {r.sample_id for r in records}
    live = [r for r in records if r.label == "live"]
    for r in live:
        for rep in range(config.multiplier):
            if augmented_id(r.sample_id, rep) in ids:
                raise InvalidInputError(f"augmented id {augmented_id(r.sample_id, rep)!r} collides with an input id")

    def work(record):
        img, mask = load_sample(record, base_dir)
        produced = []
        for rep in range(config.multiplier):
            rng = derive_seed(config.global_seed, record.sample_id, rep)
            out, attack_type = augment_image(img, mask, policy, rng, config.ranges)
            name = f"{augmented_id(record.sample_id, rep)}.png"
            write_image(out_dir / name, out)
            produced.append(SampleRecord(augmented_id(record.sample_id, rep), name, "attack", attack_type))
        return produced

    results, failures = {}, []
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        futures = {r.sample_id: pool.submit(work, r) for r in live}
        for sid, fut in futures.items():
            try:
                results[sid] = fut.result()
            except Exception as exc:  # collected and reported at the end
                log.error("sample %s failed: %s", sid, exc)
                failures.append((sid, exc))
    if failures:
        raise JobError(failures)

    out_records = []
    for r in records:
        out_records.append(_absolute(r, base_dir))
        out_records.extend(results.get(r.sample_id, ()))
    out_manifest = out_dir / OUTPUT_MANIFEST
    write_manifest(out_manifest, out_records)
    log.info("wrote %d records (%d augmented) to %s",
             len(out_records), len(out_records) - len(records), out_manifest)
    return out_manifest


def run_score_job(predictions_path, dev_path=None, fixed_threshold: Optional[float] = None) -> MetricsReport:
    """Score a prediction file at a dev-selected or fixed threshold (default 0.5)."""
    if dev_path is not None and fixed_threshold is not None:
        raise InvalidInputError("give either a dev file or a fixed threshold, not both")
    if dev_path is not None:
        threshold = select_threshold(load_predictions(dev_path))
    else:
        threshold = DEFAULT_THRESHOLD if fixed_threshold is None else float(fixed_threshold)
    return evaluate(load_predictions(predictions_path), threshold)


def write_report(path, report: MetricsReport) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_dict(), fh, indent=2)
        fh.write("\n")
