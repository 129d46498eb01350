"""Simulated physical spoofing clues: color jitter (print) and moiré warp (replay)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import InvalidParameterError
from .imgcore import as_image
from .rng import RngStream

BRIGHTNESS, CONTRAST, SATURATION, HUE = range(4)
SUB_OPS = ("brightness", "contrast", "saturation", "hue")

# hard limits; sampling ranges may only narrow them
FACTOR_LIMITS = (0.6, 1.4)
HUE_LIMITS = (-0.4, 0.4)
DEGREE_LIMITS = (0.0005, 0.01)

MODES = ("jitter", "moire", "both")


@dataclass(frozen=True)
class SpscRanges:
    """Sampling ranges for SPSC. The jitter factor 0.4 gives [0.6, 1.4]."""

    brightness: tuple = (0.6, 1.4)
    contrast: tuple = (0.6, 1.4)
    saturation: tuple = (0.6, 1.4)
    hue: tuple = (-0.4, 0.4)
    moire_degree: tuple = DEGREE_LIMITS

    def __post_init__(self):
        for name in ("brightness", "contrast", "saturation"):
            _check_subrange(name, getattr(self, name), FACTOR_LIMITS)
        _check_subrange("hue", self.hue, HUE_LIMITS)
        _check_subrange("moire_degree", self.moire_degree, DEGREE_LIMITS)


def _check_subrange(name, rng, limits):
    lo, hi = rng
    if not (limits[0] <= lo <= hi <= limits[1]):
        raise InvalidParameterError(f"{name} range {rng} must lie within {limits}")


@dataclass(frozen=True)
class ColorJitterParams:
    brightness_factor: float = 1.0
    contrast_factor: float = 1.0
    saturation_factor: float = 1.0
    hue_shift: float = 0.0
    op_order: tuple = (BRIGHTNESS, CONTRAST, SATURATION, HUE)

    def validate(self):
        for name in ("brightness_factor", "contrast_factor", "saturation_factor"):
            v = getattr(self, name)
            if not FACTOR_LIMITS[0] <= v <= FACTOR_LIMITS[1]:
                raise InvalidParameterError(f"{name}={v} outside {FACTOR_LIMITS}")
        if not HUE_LIMITS[0] <= self.hue_shift <= HUE_LIMITS[1]:
            raise InvalidParameterError(f"hue_shift={self.hue_shift} outside {HUE_LIMITS}")
        if sorted(self.op_order) != [0, 1, 2, 3]:
            raise InvalidParameterError(f"op_order must permute 0..3, got {self.op_order}")


def adjust_brightness(img, factor):
    return kernels.linear_u8(as_image(img), float(factor), 0.0)


def luma(img) -> np.ndarray:
    f = img.astype(np.float64)
    return 0.299 * f[..., 0] + 0.587 * f[..., 1] + 0.114 * f[..., 2]


def adjust_contrast(img, factor):
    img = as_image(img)
    return kernels.linear_u8(img, float(factor), float(luma(img).mean()))


def adjust_saturation(img, factor):
    """HSV saturation scaled by ``factor`` and clamped to [0, 1]."""
    return kernels.hsv_adjust(as_image(img), 0.0, float(factor))


def adjust_hue(img, shift):
    """Hue rotated by ``shift`` turns, wrapped modulo 1."""
    return kernels.hsv_adjust(as_image(img), float(shift), 1.0)


def color_jitter(img, params: ColorJitterParams) -> np.ndarray:
    """Apply the four jitter sub-ops in ``params.op_order``, quantizing after each."""
    params.validate()
    out = as_image(img)
    for op in params.op_order:
        if op == BRIGHTNESS:
            out = adjust_brightness(out, params.brightness_factor)
        elif op == CONTRAST:
            out = adjust_contrast(out, params.contrast_factor)
        elif op == SATURATION:
            out = adjust_saturation(out, params.saturation_factor)
        else:
            out = adjust_hue(out, params.hue_shift)
    return out


def sample_color_jitter(rng: RngStream, ranges: SpscRanges = SpscRanges()) -> ColorJitterParams:
    """Draws, in order: brightness, contrast, saturation, hue, then the sub-op permutation."""
    b = rng.uniform(*ranges.brightness)
    c = rng.uniform(*ranges.contrast)
    s = rng.uniform(*ranges.saturation)
    h = rng.uniform(*ranges.hue)
    order = tuple(rng.permutation(4))
    return ColorJitterParams(b, c, s, h, order)


def sample_moire_degree(rng: RngStream, ranges: SpscRanges = SpscRanges()) -> float:
    return rng.uniform(*ranges.moire_degree)


def moire_pattern(img, degree: float) -> np.ndarray:
    """Blend each pixel 0.8/0.2 with the pixel found by a radius-dependent rotation.

    The pixel at offset ``(dx, dy)`` from the center ``(W/2, H/2)`` with polar
    coordinates ``(rho, theta)`` is mixed with the source pixel at
    ``center + rho * (cos(theta + degree * rho), sin(theta + degree * rho))``,
    rounded to the nearest pixel and clipped to the frame.
    """
    if degree < 0:
        raise InvalidParameterError(f"moire degree must be >= 0, got {degree}")
    return kernels.moire_remap(as_image(img), float(degree))


def apply_spsc(img, rng: RngStream, ranges: SpscRanges = SpscRanges()) -> np.ndarray:
    """Random SPSC augmentation.

    Draw order: mode index in {0: jitter, 1: moire, 2: both}; jitter params
    when used; moiré degree when used. Jitter runs first when both apply.
    """
    img = as_image(img)
    mode = MODES[rng.integer(0, 2)]
    out = img
    if mode in ("jitter", "both"):
        out = color_jitter(out, sample_color_jitter(rng, ranges))
    if mode in ("moire", "both"):
        out = moire_pattern(out, sample_moire_degree(rng, ranges))
    return out
