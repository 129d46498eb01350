"""Manifest and prediction file formats."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..errors import InvalidInputError, ParseError
from ..imgcore import BBox
from ..metrics import ScoreRecord

LABELS = ("live", "attack")
ATTACK_TYPES = (
    "none",
    "print",
    "replay",
    "digital_forgery",
    "adversarial",
    "simulated_physical",
    "simulated_digital",
)
SIMULATED_TYPES = ("simulated_physical", "simulated_digital")


@dataclass(frozen=True)
class SampleRecord:
    sample_id: str
    path: str
    label: str
    attack_type: str
    bbox: Optional[BBox] = None
    mask_path: Optional[str] = None

    def __post_init__(self):
        if not self.sample_id:
            raise ValueError("empty sample_id")
        if self.label not in LABELS:
            raise ValueError(f"unknown label {self.label!r}")
        if self.attack_type not in ATTACK_TYPES:
            raise ValueError(f"unknown attack_type {self.attack_type!r}")
        if (self.label == "live") != (self.attack_type == "none"):
            raise ValueError(f"label {self.label!r} inconsistent with attack_type {self.attack_type!r}")


def _data_lines(path):
    """Yield (line_no, fields), skipping blanks and a leading ``sample_id`` header."""
    with open(path, encoding="utf-8") as fh:
        for no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            fields = [f.strip() for f in line.split(",")]
            if no == 1 and fields[0] == "sample_id":
                continue
            yield no, fields


def parse_bbox(text: str) -> Optional[BBox]:
    if not text:
        return None
    parts = text.split(";")
    if len(parts) != 4:
        raise ValueError(f"bbox must be x;y;w;h, got {text!r}")
    try:
        x, y, w, h = (int(p) for p in parts)
    except ValueError:
        raise ValueError(f"bbox fields must be integers, got {text!r}") from None
    return BBox(x, y, w, h)


def format_bbox(bbox: Optional[BBox]) -> str:
    return "" if bbox is None else f"{bbox.x};{bbox.y};{bbox.w};{bbox.h}"


def load_manifest(path) -> list[SampleRecord]:
    """Read ``sample_id,path,label,attack_type,bbox,mask_path`` rows."""
    records, seen = [], set()
    for no, fields in _data_lines(path):
        if len(fields) != 6:
            raise ParseError(path, no, f"expected 6 fields, got {len(fields)}")
        sid, img_path, label, attack_type, bbox_text, mask_path = fields
        if sid in seen:
            raise ParseError(path, no, f"duplicate sample_id {sid!r}")
        try:
            rec = SampleRecord(sid, img_path, label, attack_type, parse_bbox(bbox_text), mask_path or None)
        except ValueError as exc:
            raise ParseError(path, no, str(exc)) from None
        seen.add(sid)
        records.append(rec)
    return records


def write_manifest(path, records) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("sample_id,path,label,attack_type,bbox,mask_path\n")
        for r in records:
            fh.write(",".join([r.sample_id, r.path, r.label, r.attack_type,
                               format_bbox(r.bbox), r.mask_path or ""]) + "\n")


def load_predictions(path) -> list[ScoreRecord]:
    """Read ``sample_id,label,score`` rows; a first line starting with ``sample_id`` is a header."""
    records, seen = [], set()
    for no, fields in _data_lines(path):
        if len(fields) != 3:
            raise ParseError(path, no, f"expected 3 fields, got {len(fields)}")
        sid, label, score_text = fields
        if sid in seen:
            raise ParseError(path, no, f"duplicate sample_id {sid!r}")
        try:
            score = float(score_text)
        except ValueError:
            raise ParseError(path, no, f"score is not a number: {score_text!r}") from None
        try:
            records.append(ScoreRecord(sid, label, score))
        except InvalidInputError as exc:
            raise ParseError(path, no, str(exc)) from None
        seen.add(sid)
    if not records:
        raise ParseError(path, 1, "no prediction records")
    return records


def resolve(base: Path, p: str) -> Path:
    q = Path(p)
    return q if q.is_absolute() else base / q
