"""Pure-numpy kernels.

Same contracts and the same floating-point operation order as the compiled
``_ckernels`` module; used when the extension is unavailable or when
``FASAUG_PURE_PYTHON=1`` is set.
"""
import numpy as np

NAME = "numpy"


def quantize(x):
    """Clamp to [0, 255] and round half away from zero to uint8."""
    return np.floor(np.clip(x, 0.0, 255.0) + 0.5).astype(np.uint8)


def moire_remap(src, degree):
    h, w = src.shape[:2]
    cx = w / 2.0
    cy = h / 2.0
    ys, xs = np.indices((h, w), dtype=np.float64)
    off_x = xs - cx
    off_y = ys - cy
    theta = np.arctan2(off_y, off_x)
    rho = np.sqrt(off_x * off_x + off_y * off_y)
    ang = theta + degree * rho
    new_x = np.floor(cx + rho * np.cos(ang) + 0.5)
    new_y = np.floor(cy + rho * np.sin(ang) + 0.5)
    new_x = np.clip(new_x, 0, w - 1).astype(np.intp)
    new_y = np.clip(new_y, 0, h - 1).astype(np.intp)
    base = src.astype(np.float64)
    return quantize(0.8 * base + 0.2 * base[new_y, new_x])


def bilinear_remap(img, map_x, map_y):
    h, w = img.shape[:2]
    x = np.clip(map_x, 0.0, w - 1.0)
    y = np.clip(map_y, 0.0, h - 1.0)
    x0 = np.floor(x).astype(np.intp)
    y0 = np.floor(y).astype(np.intp)
    x1 = np.minimum(x0 + 1, w - 1)
    y1 = np.minimum(y0 + 1, h - 1)
    fx = (x - x0)[..., None]
    fy = (y - y0)[..., None]
    top = img[y0, x0] * (1.0 - fx) + img[y0, x1] * fx
    bot = img[y1, x0] * (1.0 - fx) + img[y1, x1] * fx
    return top * (1.0 - fy) + bot * fy


def rgb_to_hsv(img):
    rgb = img.astype(np.float64) / 255.0
    r, g, b = rgb[..., 0], rgb[..., 1], rgb[..., 2]
    mx = np.max(rgb, axis=-1)
    mn = np.min(rgb, axis=-1)
    c = mx - mn
    safe_c = np.where(c > 0.0, c, 1.0)
    s = np.where(mx > 0.0, c / np.where(mx > 0.0, mx, 1.0), 0.0)
    hr = (g - b) / safe_c
    hr = np.where(hr < 0.0, hr + 6.0, hr)
    hg = (b - r) / safe_c + 2.0
    hb = (r - g) / safe_c + 4.0
    h = np.where(mx == r, hr, np.where(mx == g, hg, hb))
    h = np.where(c > 0.0, h / 6.0, 0.0)
    h = np.where(h >= 1.0, h - 1.0, h)
    return np.stack([h, s, mx], axis=-1)


def hsv_to_rgb(hsv):
    h = hsv[..., 0]
    h = h - np.floor(h)
    s = np.clip(hsv[..., 1], 0.0, 1.0)
    v = np.clip(hsv[..., 2], 0.0, 1.0)
    h6 = h * 6.0
    fi = np.floor(h6)
    f = h6 - fi
    i = fi.astype(np.intp) % 6
    p = v * (1.0 - s)
    q = v * (1.0 - s * f)
    t = v * (1.0 - s * (1.0 - f))
    r = np.choose(i, [v, q, p, p, t, v])
    g = np.choose(i, [t, v, v, q, p, p])
    b = np.choose(i, [p, p, t, v, v, q])
    return quantize(np.stack([r, g, b], axis=-1) * 255.0)


def hsv_adjust(img, hue_shift, sat_factor):
    """Shift hue (mod 1) and scale saturation (clamped) in one HSV round trip."""
    hsv = rgb_to_hsv(img)
    h = hsv[..., 0] + hue_shift
    hsv[..., 0] = h - np.floor(h)
    hsv[..., 1] = np.clip(hsv[..., 1] * sat_factor, 0.0, 1.0)
    return hsv_to_rgb(hsv)


def blend(o1, o2, mask):
    m = mask[..., None]
    return quantize(o1 * m + o2 * (1.0 - m))


def linear_u8(img, factor, pivot):
    """``pivot + factor * (x - pivot)``, quantized; pivot 0 gives plain scaling."""
    return quantize(pivot + factor * (img.astype(np.float64) - pivot))


def bilinear_remap_u8(img, map_x, map_y):
    return quantize(bilinear_remap(img.astype(np.float64), map_x, map_y))


# Mirrored taps are folded: acc += k[i] * (p[i] + p[2r - i]) for i < r, then
# acc += k[r] * p[r]; the compiled kernels sum in the same order.

def blur_rows(arr, kernel):
    """Correlate each row of an (H, W, C) array with ``kernel``, replicate border."""
    r = (len(kernel) - 1) // 2
    w = arr.shape[1]
    padded = np.pad(arr, ((0, 0), (r, r), (0, 0)), mode="edge")
    out = np.zeros_like(arr)
    for i in range(r):
        out += kernel[i] * (padded[:, i:i + w] + padded[:, 2 * r - i:2 * r - i + w])
    out += kernel[r] * padded[:, r:r + w]
    return out


def blur_cols(arr, kernel):
    r = (len(kernel) - 1) // 2
    h = arr.shape[0]
    padded = np.pad(arr, ((r, r), (0, 0), (0, 0)), mode="edge")
    out = np.zeros_like(arr)
    for i in range(r):
        out += kernel[i] * (padded[i:i + h] + padded[2 * r - i:2 * r - i + h])
    out += kernel[r] * padded[r:r + h]
    return out
