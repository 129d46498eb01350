"""Manifests, protocol policies, preprocessing and batch jobs."""
from ..rng import derive_seed
from .jobs import (
    AugmentJobConfig,
    AugmentRanges,
    augment_image,
    augment_sample,
    parse_param,
    run_augment_job,
    run_score_job,
    write_report,
)
from .policy import SDSC, SPSC, Protocol, ProtocolPolicy, policy_for_protocol, preprocess_sample
from .records import SampleRecord, load_manifest, load_predictions, write_manifest

__all__ = [
    "AugmentJobConfig",
    "AugmentRanges",
    "Protocol",
    "ProtocolPolicy",
    "SDSC",
    "SPSC",
    "SampleRecord",
    "augment_image",
    "augment_sample",
    "derive_seed",
    "load_manifest",
    "load_predictions",
    "parse_param",
    "policy_for_protocol",
    "preprocess_sample",
    "run_augment_job",
    "run_score_job",
    "write_manifest",
    "write_report",
]
