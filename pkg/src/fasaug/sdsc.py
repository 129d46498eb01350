"""Simulated digital spoofing clues: self-blending forgery synthesis and Gaussian noise.

A live image is copied twice. One copy gets a color perturbation (pseudo
source), the other a small scale/shift (target). A face mask follows the
target geometry, is deformed, and the two copies are blended through it::

    forgery = source * mask + target * (1 - mask)
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import InvalidParameterError
from .imgcore import (
    affine_transform,
    affine_transform_float,
    as_image,
    bilinear_sample,
    gaussian_blur,
    resize_image,
    to_uint8,
)
from .rng import RngStream
from .spsc import adjust_brightness, adjust_hue

LIMITS = {
    "hue_shift": (-0.1, 0.1),
    "brightness_factor": (0.8, 1.2),
    "downscale_factor": (0.25, 0.5),
    "scale": (0.95, 1.05),
    "translate_x_frac": (-0.03, 0.03),
    "translate_y_frac": (-0.015, 0.015),
    "elastic_alpha": (0.0, 50.0),
    "elastic_sigma": (4.0, 8.0),
    "blur_sigma": (0.0, 7.0),
}

NOISE_SIGMA_RANGE = (5.0, 25.0)


def _check(name, value, limits):
    # slack absorbs rounding in sampled values such as frac * width
    tol = 1e-9 * max(1.0, abs(limits[0]), abs(limits[1]))
    if not limits[0] - tol <= value <= limits[1] + tol:
        raise InvalidParameterError(f"{name}={value} outside {limits}")


@dataclass(frozen=True)
class SdscRanges:
    """Sampling ranges for SDSC; each must lie within the matching entry of ``LIMITS``."""

    hue_shift: tuple = LIMITS["hue_shift"]
    brightness_factor: tuple = LIMITS["brightness_factor"]
    downscale_factor: tuple = LIMITS["downscale_factor"]
    scale: tuple = LIMITS["scale"]
    translate_x_frac: tuple = LIMITS["translate_x_frac"]
    translate_y_frac: tuple = LIMITS["translate_y_frac"]
    elastic_alpha: tuple = LIMITS["elastic_alpha"]
    elastic_sigma: tuple = LIMITS["elastic_sigma"]
    blur_sigma: tuple = LIMITS["blur_sigma"]

    def __post_init__(self):
        for name, limits in LIMITS.items():
            lo, hi = getattr(self, name)
            if not (limits[0] <= lo <= hi <= limits[1]):
                raise InvalidParameterError(f"{name} range {(lo, hi)} must lie within {limits}")


@dataclass(frozen=True)
class SourceTransformParams:
    hue_shift: float
    brightness_factor: float
    downscale_factor: float

    def validate(self):
        _check("hue_shift", self.hue_shift, LIMITS["hue_shift"])
        _check("brightness_factor", self.brightness_factor, LIMITS["brightness_factor"])
        _check("downscale_factor", self.downscale_factor, LIMITS["downscale_factor"])


@dataclass(frozen=True)
class TargetTransformParams:
    scale_x: float = 1.0
    scale_y: float = 1.0
    translate_x: float = 0.0
    translate_y: float = 0.0

    def validate(self, width, height):
        _check("scale_x", self.scale_x, LIMITS["scale"])
        _check("scale_y", self.scale_y, LIMITS["scale"])
        lo, hi = LIMITS["translate_x_frac"]
        _check("translate_x", self.translate_x, (lo * width, hi * width))
        lo, hi = LIMITS["translate_y_frac"]
        _check("translate_y", self.translate_y, (lo * height, hi * height))


@dataclass(frozen=True)
class MaskDeformParams:
    elastic_alpha: float = 0.0
    elastic_sigma: float = 4.0
    blur_sigma: float = 0.0

    def validate(self):
        _check("elastic_alpha", self.elastic_alpha, LIMITS["elastic_alpha"])
        _check("elastic_sigma", self.elastic_sigma, LIMITS["elastic_sigma"])
        _check("blur_sigma", self.blur_sigma, LIMITS["blur_sigma"])


@dataclass(frozen=True)
class BlendTriple:
    o1: np.ndarray
    o2: np.ndarray
    mask: np.ndarray


def as_mask(mask) -> np.ndarray:
    m = np.asarray(mask, dtype=np.float64)
    if m.ndim != 2:
        raise InvalidParameterError(f"mask must be 2-D, got shape {m.shape}")
    if m.size and (m.min() < 0.0 or m.max() > 1.0):
        raise InvalidParameterError("mask weights must lie in [0, 1]")
    return m


def source_color_transform(img, params: SourceTransformParams) -> np.ndarray:
    """Hue shift, brightness scale, then downscale and bilinear upscale back."""
    params.validate()
    out = adjust_hue(as_image(img), params.hue_shift)
    out = adjust_brightness(out, params.brightness_factor)
    h, w = out.shape[:2]
    small_w = max(1, int(round(w * params.downscale_factor)))
    small_h = max(1, int(round(h * params.downscale_factor)))
    small = resize_image(out, small_w, small_h)
    return resize_image(small, w, h)


def target_spatial_transform(img, params: TargetTransformParams) -> np.ndarray:
    img = as_image(img)
    params.validate(img.shape[1], img.shape[0])
    return affine_transform(img, params.scale_x, params.scale_y, params.translate_x, params.translate_y)


def elastic_fields(shape, params: MaskDeformParams, rng: RngStream):
    """Displacement fields (dx, dy), each bounded in magnitude by ``elastic_alpha``.

    Draws two uniform [-1, 1) noise fields (dx first), row-major.
    """
    fields = []
    for _ in range(2):
        noise = rng.uniform_array(-1.0, 1.0, shape)
        smooth = gaussian_blur(noise, params.elastic_sigma)
        peak = np.abs(smooth).max()
        if peak > 0:
            smooth = smooth / peak
        fields.append(params.elastic_alpha * smooth)
    return fields[0], fields[1]


def deform_mask(mask, params: MaskDeformParams, rng: RngStream) -> np.ndarray:
    """Elastic warp followed by Gaussian blur; result clamped to [0, 1]."""
    params.validate()
    m = as_mask(mask)
    h, w = m.shape
    dx, dy = elastic_fields((h, w), params, rng)
    ys, xs = np.indices((h, w), dtype=np.float64)
    warped = bilinear_sample(m, xs + dx, ys + dy)
    return np.clip(gaussian_blur(warped, params.blur_sigma), 0.0, 1.0)


def default_face_mask(width: int, height: int) -> np.ndarray:
    """Centered ellipse with semi-axes 0.30*W and 0.40*H; 1 inside, 0 outside."""
    if width < 1 or height < 1:
        raise InvalidParameterError(f"mask size must be >= 1, got {width}x{height}")
    cx = (width - 1) / 2.0
    cy = (height - 1) / 2.0
    ys, xs = np.indices((height, width), dtype=np.float64)
    r2 = ((xs - cx) / (0.30 * width)) ** 2 + ((ys - cy) / (0.40 * height)) ** 2
    return (r2 <= 1.0).astype(np.float64)


def blend(triple: BlendTriple) -> np.ndarray:
    o1 = as_image(triple.o1)
    o2 = as_image(triple.o2)
    m = as_mask(triple.mask)
    if o1.shape != o2.shape or m.shape != o1.shape[:2]:
        raise InvalidParameterError(
            f"blend shapes disagree: o1 {o1.shape}, o2 {o2.shape}, mask {m.shape}"
        )
    return kernels.blend(o1, o2, np.ascontiguousarray(m))


def gauss_noise(img, sigma: float, rng: RngStream) -> np.ndarray:
    """Additive N(0, sigma^2) noise, one draw per channel in row-major interleaved order."""
    if sigma < 0:
        raise InvalidParameterError(f"noise sigma must be >= 0, got {sigma}")
    img = as_image(img)
    noise = rng.normal(img.size).reshape(img.shape)
    return to_uint8(img + sigma * noise)


def sample_noise_sigma(rng: RngStream, sigma_range=NOISE_SIGMA_RANGE) -> float:
    return rng.uniform(*sigma_range)


def sample_sdsc_params(rng: RngStream, width: int, height: int, ranges: SdscRanges = SdscRanges()):
    """Draw (source, target, mask) params, each field in declaration order."""
    src = SourceTransformParams(
        hue_shift=rng.uniform(*ranges.hue_shift),
        brightness_factor=rng.uniform(*ranges.brightness_factor),
        downscale_factor=rng.uniform(*ranges.downscale_factor),
    )
    tgt = TargetTransformParams(
        scale_x=rng.uniform(*ranges.scale),
        scale_y=rng.uniform(*ranges.scale),
        translate_x=rng.uniform(*ranges.translate_x_frac) * width,
        translate_y=rng.uniform(*ranges.translate_y_frac) * height,
    )
    deform = MaskDeformParams(
        elastic_alpha=rng.uniform(*ranges.elastic_alpha),
        elastic_sigma=rng.uniform(*ranges.elastic_sigma),
        blur_sigma=rng.uniform(*ranges.blur_sigma),
    )
    return src, tgt, deform


def transform_mask(mask, params: TargetTransformParams) -> np.ndarray:
    """Move a mask with the same scale/shift applied to the target copy."""
    m = as_mask(mask)
    warped = affine_transform_float(m, params.scale_x, params.scale_y, params.translate_x, params.translate_y)
    return np.clip(warped, 0.0, 1.0)


def apply_sdsc(img, mask, rng: RngStream, ranges: SdscRanges = SdscRanges()) -> np.ndarray:
    """Self-blended forgery of ``img``; ``mask=None`` falls back to the default ellipse."""
    img = as_image(img)
    h, w = img.shape[:2]
    if mask is None:
        mask = default_face_mask(w, h)
    mask = as_mask(mask)
    if mask.shape != (h, w):
        raise InvalidParameterError(f"mask shape {mask.shape} does not match image {(h, w)}")
    src, tgt, deform = sample_sdsc_params(rng, w, h, ranges)
    o1 = source_color_transform(img, src)
    o2 = target_spatial_transform(img, tgt)
    final_mask = deform_mask(transform_mask(mask, tgt), deform, rng)
    return blend(BlendTriple(o1, o2, final_mask))
