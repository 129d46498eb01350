"""Pixel-level primitives shared by both augmentation families.

Images are numpy arrays: ``uint8`` of shape ``(H, W, 3)`` for RGB buffers,
``float64`` of shape ``(H, W, C)`` for intermediates, and ``float64`` of shape
``(H, W)`` with weights in [0, 1] for soft masks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .errors import InvalidParameterError

__all__ = [
    "BBox",
    "as_image",
    "to_uint8",
    "rgb_to_hsv",
    "hsv_to_rgb",
    "gaussian_kernel",
    "gaussian_blur",
    "bilinear_sample",
    "affine_transform",
    "affine_transform_float",
    "resize_bilinear",
    "resize_image",
    "center_crop_window",
    "center_crop",
    "expanded_bbox_window",
    "crop_expanded_bbox",
]


@dataclass(frozen=True)
class BBox:
    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if self.w < 1 or self.h < 1:
            raise InvalidParameterError(f"bbox extent must be >= 1, got {self.w}x{self.h}")


def as_image(img) -> np.ndarray:
    """Validate an RGB buffer and return it as a C-contiguous uint8 array."""
    arr = np.asarray(img)
    if arr.dtype != np.uint8:
        raise InvalidParameterError(f"expected uint8 image, got {arr.dtype}")
    if arr.ndim != 3 or arr.shape[2] != 3 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise InvalidParameterError(f"expected (H, W, 3) image, got shape {arr.shape}")
    return np.ascontiguousarray(arr)


def to_uint8(x) -> np.ndarray:
    """Clamp to [0, 255], then round half away from zero."""
    return kernels.quantize(np.asarray(x, dtype=np.float64))


def rgb_to_hsv(img) -> np.ndarray:
    """Hexcone RGB -> HSV. H is a fraction of the hue circle in [0, 1); S, V in [0, 1]."""
    return kernels.rgb_to_hsv(as_image(img))


def hsv_to_rgb(hsv) -> np.ndarray:
    """Inverse hexcone conversion. Hue is wrapped modulo 1; S and V are clamped."""
    hsv = np.ascontiguousarray(hsv, dtype=np.float64)
    return kernels.hsv_to_rgb(hsv)


def gaussian_kernel(sigma: float) -> np.ndarray:
    radius = int(math.ceil(3.0 * sigma))
    offsets = np.arange(-radius, radius + 1, dtype=np.float64)
    with np.errstate(over="ignore"):  # tiny sigma: off-center taps underflow to 0
        k = np.exp(-0.5 * (offsets / sigma) ** 2)
    return k / k.sum()


def gaussian_blur(arr, sigma: float) -> np.ndarray:
    """Separable Gaussian blur with replicate borders.

    Accepts a float image ``(H, W, C)`` or a mask ``(H, W)`` and returns the
    same shape as float64. The kernel has radius ``ceil(3 * sigma)`` and sums
    to one; ``sigma == 0`` returns an unmodified copy.
    """
    if sigma < 0:
        raise InvalidParameterError(f"blur sigma must be >= 0, got {sigma}")
    a = np.asarray(arr, dtype=np.float64)
    if sigma == 0:
        return a.copy()
    squeeze = a.ndim == 2
    work = np.ascontiguousarray(a[..., None] if squeeze else a)
    k = gaussian_kernel(sigma)
    out = kernels.blur_cols(kernels.blur_rows(work, k), k)
    return out[..., 0] if squeeze else out


def bilinear_sample(arr, map_x, map_y) -> np.ndarray:
    """Bilinear lookup of ``arr`` at real coordinates; replicate border.

    ``arr`` may be ``(H, W)`` or ``(H, W, C)``; the result is float64 with the
    shape of the maps (plus channels).
    """
    a = np.asarray(arr, dtype=np.float64)
    squeeze = a.ndim == 2
    work = np.ascontiguousarray(a[..., None] if squeeze else a)
    out = kernels.bilinear_remap(
        work,
        np.ascontiguousarray(map_x, dtype=np.float64),
        np.ascontiguousarray(map_y, dtype=np.float64),
    )
    return out[..., 0] if squeeze else out


def _affine_maps(h, w, scale_x, scale_y, translate_x, translate_y):
    if scale_x <= 0 or scale_y <= 0:
        raise InvalidParameterError(f"scale factors must be > 0, got ({scale_x}, {scale_y})")
    cx = (w - 1) / 2.0
    cy = (h - 1) / 2.0
    xs = (np.arange(w, dtype=np.float64) - cx) / scale_x + cx - translate_x
    ys = (np.arange(h, dtype=np.float64) - cy) / scale_y + cy - translate_y
    map_x = np.broadcast_to(xs[None, :], (h, w))
    map_y = np.broadcast_to(ys[:, None], (h, w))
    return map_x, map_y


def affine_transform_float(arr, scale_x, scale_y, translate_x, translate_y) -> np.ndarray:
    """Scale about the image center, then translate. Float in, float out."""
    a = np.asarray(arr, dtype=np.float64)
    map_x, map_y = _affine_maps(a.shape[0], a.shape[1], scale_x, scale_y, translate_x, translate_y)
    return bilinear_sample(a, map_x, map_y)


def affine_transform(img, scale_x: float, scale_y: float,
                     translate_x: float, translate_y: float) -> np.ndarray:
    """Scale-and-translate warp of an RGB buffer, same output size.

    Output pixel ``(x, y)`` samples the input at
    ``((x - cx) / scale_x + cx - translate_x, (y - cy) / scale_y + cy - translate_y)``
    where ``(cx, cy) = ((W - 1) / 2, (H - 1) / 2)``.
    """
    img = as_image(img)
    map_x, map_y = _affine_maps(img.shape[0], img.shape[1], scale_x, scale_y, translate_x, translate_y)
    return _remap_image(img, map_x, map_y)


def _remap_image(img, map_x, map_y):
    return kernels.bilinear_remap_u8(
        img,
        np.ascontiguousarray(map_x, dtype=np.float64),
        np.ascontiguousarray(map_y, dtype=np.float64),
    )


def _resize_maps(h, w, out_w, out_h):
    xs = (np.arange(out_w, dtype=np.float64) + 0.5) * (w / out_w) - 0.5
    ys = (np.arange(out_h, dtype=np.float64) + 0.5) * (h / out_h) - 0.5
    return np.broadcast_to(xs[None, :], (out_h, out_w)), np.broadcast_to(ys[:, None], (out_h, out_w))


def resize_bilinear(arr, out_w: int, out_h: int) -> np.ndarray:
    """Half-pixel-centered bilinear resize (no antialiasing), replicate border. Float result."""
    a = np.asarray(arr, dtype=np.float64)
    return bilinear_sample(a, *_resize_maps(a.shape[0], a.shape[1], out_w, out_h))


def resize_image(img, out_w: int, out_h: int) -> np.ndarray:
    """``resize_bilinear`` for RGB buffers, quantized back to uint8."""
    img = as_image(img)
    return _remap_image(img, *_resize_maps(img.shape[0], img.shape[1], out_w, out_h))


def center_crop_window(height: int, width: int, size: int):
    """(x0, y0, x1, y1) of the centered window, or the full frame when undersized."""
    if size < 1:
        raise InvalidParameterError(f"crop size must be >= 1, got {size}")
    if height < size or width < size:
        return 0, 0, width, height
    x0 = (width - size) // 2
    y0 = (height - size) // 2
    return x0, y0, x0 + size, y0 + size


def center_crop(img, size: int) -> np.ndarray:
    img = as_image(img)
    x0, y0, x1, y1 = center_crop_window(img.shape[0], img.shape[1], size)
    return img[y0:y1, x0:x1].copy()


def expanded_bbox_window(height: int, width: int, bbox: BBox, margin: int):
    x0 = max(bbox.x - margin, 0)
    y0 = max(bbox.y - margin, 0)
    x1 = min(bbox.x + bbox.w + margin, width)
    y1 = min(bbox.y + bbox.h + margin, height)
    if x1 <= x0 or y1 <= y0:
        raise InvalidParameterError(f"{bbox} (margin {margin}) lies outside a {width}x{height} image")
    return x0, y0, x1, y1


def crop_expanded_bbox(img, bbox: BBox, margin: int) -> np.ndarray:
    """Crop the bbox grown by ``margin`` on every side, clamped to the image."""
    img = as_image(img)
    x0, y0, x1, y1 = expanded_bbox_window(img.shape[0], img.shape[1], bbox, margin)
    return img[y0:y1, x0:x1].copy()
