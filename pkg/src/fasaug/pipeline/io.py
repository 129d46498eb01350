"""Lossless raster I/O (PNG via Pillow)."""
import numpy as np
from PIL import Image


def read_image(path) -> np.ndarray:
    with Image.open(path) as im:
        return np.ascontiguousarray(np.asarray(im.convert("RGB"), dtype=np.uint8))


def write_image(path, img) -> None:
    Image.fromarray(np.asarray(img, dtype=np.uint8)).save(path, format="PNG")


def read_mask(path) -> np.ndarray:
    """Single-channel 8-bit mask; 255 is face, 0 background."""
    with Image.open(path) as im:
        return np.asarray(im.convert("L"), dtype=np.float64) / 255.0


def write_mask(path, mask) -> None:
    data = np.floor(np.clip(np.asarray(mask, dtype=np.float64), 0.0, 1.0) * 255.0 + 0.5)
    Image.fromarray(data.astype(np.uint8)).save(path, format="PNG")
