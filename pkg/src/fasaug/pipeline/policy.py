"""Protocol policies and the network-facing preprocessing crop."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from ..imgcore import as_image, center_crop_window, expanded_bbox_window
from .records import SampleRecord

SPSC = "SPSC"
SDSC = "SDSC"

LARGE_IMAGE_SIDE = 700
BBOX_MARGIN = 20
CROP_SIZE = 500


class Protocol(enum.Enum):
    P1 = "p1"
    P2_1 = "p2.1"
    P2_2 = "p2.2"

    @classmethod
    def parse(cls, text: str) -> "Protocol":
        key = text.strip().lower().replace("_", ".")
        for p in cls:
            if p.value == key:
                return p
        raise ValueError(f"unknown protocol {text!r}; expected p1, p2.1 or p2.2")


@dataclass(frozen=True)
class ProtocolPolicy:
    protocol: Protocol
    augmentations: frozenset


_POLICY = {
    Protocol.P1: frozenset({SPSC, SDSC}),
    Protocol.P2_1: frozenset({SPSC}),
    Protocol.P2_2: frozenset({SDSC}),
}


def policy_for_protocol(protocol) -> ProtocolPolicy:
    if not isinstance(protocol, Protocol):
        protocol = Protocol.parse(protocol)
    return ProtocolPolicy(protocol, _POLICY[protocol])


def preprocess_window(height: int, width: int, record: SampleRecord):
    """Crop window (x0, y0, x1, y1): expanded bbox for large images, else a center crop."""
    if width > LARGE_IMAGE_SIDE and height > LARGE_IMAGE_SIDE and record.bbox is not None:
        return expanded_bbox_window(height, width, record.bbox, BBOX_MARGIN)
    return center_crop_window(height, width, CROP_SIZE)


def preprocess_sample(img, record: SampleRecord):
    img = as_image(img)
    x0, y0, x1, y1 = preprocess_window(img.shape[0], img.shape[1], record)
    return img[y0:y1, x0:x1].copy()
