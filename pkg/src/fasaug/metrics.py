"""Face anti-spoofing metrics: APCER, BPCER, ACER, AUC, threshold selection.

Live (bona fide) is the positive class. Scores are "higher = more live" and
a record is predicted live when ``score >= threshold``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .errors import InvalidInputError, UndefinedRateError

LIVE = "live"
ATTACK = "attack"
LABELS = (LIVE, ATTACK)


@dataclass(frozen=True)
class ScoreRecord:
    sample_id: str
    label: str
    score: float

    def __post_init__(self):
        if not self.sample_id:
            raise InvalidInputError("sample_id must be non-empty")
        if self.label not in LABELS:
            raise InvalidInputError(f"label must be one of {LABELS}, got {self.label!r}")
        if not 0.0 <= self.score <= 1.0:
            raise InvalidInputError(f"score {self.score} outside [0, 1] for {self.sample_id!r}")


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int


@dataclass(frozen=True)
class MetricsReport:
    apcer: float
    bpcer: float
    acer: float
    auc: float
    threshold: float
    counts: ConfusionCounts

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(d.pop("counts"))
        return d


def _split(records):
    live = np.array([r.score for r in records if r.label == LIVE], dtype=np.float64)
    attack = np.array([r.score for r in records if r.label == ATTACK], dtype=np.float64)
    return live, attack


def confusion_at_threshold(records, threshold: float) -> ConfusionCounts:
    records = list(records)
    if not records:
        raise InvalidInputError("no records to count")
    live, attack = _split(records)
    tp = int(np.count_nonzero(live >= threshold))
    fp = int(np.count_nonzero(attack >= threshold))
    return ConfusionCounts(tp=tp, fp=fp, tn=len(attack) - fp, fn=len(live) - tp)


def error_rates(counts: ConfusionCounts):
    """Return ``(apcer, bpcer, acer)``."""
    if counts.fp + counts.tn == 0:
        raise UndefinedRateError(ATTACK)
    if counts.fn + counts.tp == 0:
        raise UndefinedRateError(LIVE)
    apcer = counts.fp / (counts.fp + counts.tn)
    bpcer = counts.fn / (counts.fn + counts.tp)
    return apcer, bpcer, (apcer + bpcer) / 2


def auc(records) -> float:
    """P(live score > attack score) with ties credited 0.5, via the rank-sum statistic."""
    live, attack = _split(list(records))
    if live.size == 0 or attack.size == 0:
        raise InvalidInputError("AUC needs at least one live and one attack record")
    scores = np.concatenate([live, attack])
    uniq, inverse, counts = np.unique(scores, return_inverse=True, return_counts=True)
    # average 1-based rank of each tie group
    ends = np.cumsum(counts)
    avg_rank = ends - (counts - 1) / 2.0
    live_rank_sum = avg_rank[inverse[: live.size]].sum()
    n_live, n_attack = live.size, attack.size
    u = live_rank_sum - n_live * (n_live + 1) / 2.0
    return float(u / (n_live * n_attack))


def select_threshold(dev_records) -> float:
    """Candidate (distinct dev scores plus 0 and 1) with minimal ACER; smallest wins ties."""
    dev_records = list(dev_records)
    live, attack = _split(dev_records)
    if live.size == 0 or attack.size == 0:
        raise InvalidInputError("dev set must contain both live and attack records")
    candidates = np.unique(np.concatenate([live, attack, [0.0, 1.0]]))
    best_thr, best_acer = None, None
    for thr in candidates:
        _, _, acer = error_rates(confusion_at_threshold(dev_records, thr))
        if best_acer is None or acer < best_acer:
            best_thr, best_acer = float(thr), acer
    return best_thr


def evaluate(records, threshold: float) -> MetricsReport:
    records = list(records)
    counts = confusion_at_threshold(records, threshold)
    apcer, bpcer, acer = error_rates(counts)
    return MetricsReport(apcer, bpcer, acer, auc(records), float(threshold), counts)
