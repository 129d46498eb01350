"""Seeded, platform-stable random streams.

Streams are backed by numpy's Philox counter-based generator keyed directly
with a 64-bit integer, so a given key yields the same sequence on every
platform and numpy release that keeps the Philox4x64-10 definition.
"""
from __future__ import annotations

import hashlib
import struct

import numpy as np

_MASK64 = (1 << 64) - 1


class RngStream:
    """Deterministic random stream keyed by a 64-bit seed."""

    def __init__(self, seed: int):
        self.seed = int(seed) & _MASK64
        self._gen = np.random.Generator(np.random.Philox(key=self.seed))

    def __repr__(self):
        return f"RngStream(seed={self.seed:#018x})"

    def uniform(self, low: float, high: float) -> float:
        """One draw from Uniform[low, high)."""
        return float(low + (high - low) * self._gen.random())

    def uniform_array(self, low: float, high: float, shape) -> np.ndarray:
        return low + (high - low) * self._gen.random(shape)

    def integer(self, low: int, high: int) -> int:
        """Uniform integer in the closed range [low, high]."""
        return int(self._gen.integers(low, high, endpoint=True))

    def normal(self, shape=None):
        if shape is None:
            return float(self._gen.standard_normal())
        return self._gen.standard_normal(shape)

    def permutation(self, n: int) -> list[int]:
        return [int(i) for i in self._gen.permutation(n)]


def stable_hash64(global_seed: int, sample_id: str, rep_index: int) -> int:
    """64-bit BLAKE2b digest of (seed, sample id, repetition), little-endian.

    Message layout: u64 seed | u32 byte length of id | UTF-8 id | u64 rep.
    """
    sid = sample_id.encode("utf-8")
    msg = (
        struct.pack("<Q", int(global_seed) & _MASK64)
        + struct.pack("<I", len(sid))
        + sid
        + struct.pack("<Q", int(rep_index) & _MASK64)
    )
    digest = hashlib.blake2b(msg, digest_size=8, person=b"fasaug.seed").digest()
    return struct.unpack("<Q", digest)[0]


def derive_seed(global_seed: int, sample_id: str, rep_index: int) -> RngStream:
    """Per-sample stream, independent of processing order or worker count."""
    return RngStream(stable_hash64(global_seed, sample_id, rep_index))
