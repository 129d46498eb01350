"""Slow scalar reference implementations used as test oracles.

Nothing here imports from ``fasaug``; each routine is written from the
operation's definition, pixel by pixel, with the stdlib ``math`` module.
"""
import colorsys
import math

import numpy as np


def q(v):
    """Clamp to [0, 255] and round half away from zero."""
    v = min(max(v, 0.0), 255.0)
    return int(math.floor(v + 0.5))


def rgb_to_hsv_px(r, g, b):
    return colorsys.rgb_to_hsv(r / 255.0, g / 255.0, b / 255.0)


def hsv_to_rgb_px(h, s, v):
    r, g, b = colorsys.hsv_to_rgb(h % 1.0, s, v)
    return q(r * 255.0), q(g * 255.0), q(b * 255.0)


def moire(img, degree):
    """Radius-dependent polar rotation blended 0.8/0.2, one pixel at a time."""
    h, w = img.shape[:2]
    cx, cy = w / 2.0, h / 2.0
    out = np.zeros_like(img)
    for y in range(h):
        for x in range(w):
            ox, oy = x - cx, y - cy
            theta = math.atan2(oy, ox)
            rho = math.sqrt(ox * ox + oy * oy)
            nx = cx + rho * math.cos(theta + degree * rho)
            ny = cy + rho * math.sin(theta + degree * rho)
            nx = min(max(int(math.floor(nx + 0.5)), 0), w - 1)
            ny = min(max(int(math.floor(ny + 0.5)), 0), h - 1)
            for c in range(img.shape[2]):
                out[y, x, c] = q(0.8 * float(img[y, x, c]) + 0.2 * float(img[ny, nx, c]))
    return out


def bilinear_px(arr, x, y):
    """Bilinear lookup with replicate border via explicit edge padding."""
    h, w = arr.shape[:2]
    x = min(max(x, 0.0), w - 1.0)
    y = min(max(y, 0.0), h - 1.0)
    x0, y0 = int(math.floor(x)), int(math.floor(y))
    fx, fy = x - x0, y - y0

    def at(yy, xx):
        return np.asarray(arr[min(yy, h - 1), min(xx, w - 1)], dtype=np.float64)

    return (at(y0, x0) * (1 - fx) * (1 - fy) + at(y0, x0 + 1) * fx * (1 - fy)
            + at(y0 + 1, x0) * (1 - fx) * fy + at(y0 + 1, x0 + 1) * fx * fy)


def affine(img, sx, sy, tx, ty, quantize=True):
    h, w = img.shape[:2]
    cx, cy = (w - 1) / 2.0, (h - 1) / 2.0
    out = np.zeros(img.shape, dtype=np.float64)
    for y in range(h):
        for x in range(w):
            out[y, x] = bilinear_px(img, (x - cx) / sx + cx - tx, (y - cy) / sy + cy - ty)
    if quantize:
        return np.vectorize(q)(out).astype(np.uint8)
    return out


def resize(img, out_w, out_h):
    h, w = img.shape[:2]
    out = np.zeros((out_h, out_w) + img.shape[2:], dtype=np.float64)
    for y in range(out_h):
        for x in range(out_w):
            out[y, x] = bilinear_px(img, (x + 0.5) * w / out_w - 0.5, (y + 0.5) * h / out_h - 0.5)
    return np.vectorize(q)(out).astype(np.uint8)


def gaussian_weights(sigma):
    r = int(math.ceil(3 * sigma))
    wts = [math.exp(-(i * i) / (2 * sigma * sigma)) for i in range(-r, r + 1)]
    total = sum(wts)
    return r, [v / total for v in wts]


def blur2d(arr, sigma):
    """Direct 2-D convolution with the outer-product kernel, replicate border."""
    a = np.asarray(arr, dtype=np.float64)
    if sigma == 0:
        return a.copy()
    r, k = gaussian_weights(sigma)
    h, w = a.shape[:2]
    out = np.zeros_like(a)
    for y in range(h):
        for x in range(w):
            acc = 0.0
            for i in range(-r, r + 1):
                yy = min(max(y + i, 0), h - 1)
                for j in range(-r, r + 1):
                    xx = min(max(x + j, 0), w - 1)
                    acc = acc + k[i + r] * k[j + r] * a[yy, xx]
            out[y, x] = acc
    return out


def jitter(img, b, c, s, h, order):
    """Color jitter applied per pixel with scalar sub-op definitions."""
    cur = img.astype(np.int64)
    for op in order:
        nxt = np.zeros_like(cur)
        if op == 0:
            for idx in np.ndindex(cur.shape):
                nxt[idx] = q(b * cur[idx])
        elif op == 1:
            H, W = cur.shape[:2]
            total = 0.0
            for y in range(H):
                for x in range(W):
                    R, G, B = cur[y, x]
                    total += 0.299 * R + 0.587 * G + 0.114 * B
            mean = total / (H * W)
            for idx in np.ndindex(cur.shape):
                nxt[idx] = q(mean + c * (cur[idx] - mean))
        else:
            for y in range(cur.shape[0]):
                for x in range(cur.shape[1]):
                    hh, ss, vv = rgb_to_hsv_px(*cur[y, x])
                    if op == 2:
                        ss = min(max(ss * s, 0.0), 1.0)
                    else:
                        hh = (hh + h) % 1.0
                    nxt[y, x] = hsv_to_rgb_px(hh, ss, vv)
        cur = nxt
    return cur.astype(np.uint8)


def elastic_warp(mask, dx, dy):
    h, w = mask.shape
    out = np.zeros_like(mask, dtype=np.float64)
    for y in range(h):
        for x in range(w):
            out[y, x] = bilinear_px(mask, x + dx[y, x], y + dy[y, x])
    return out


def confusion(records, thr):
    tp = fp = tn = fn = 0
    for _, label, score in records:
        live_pred = score >= thr
        if label == "live":
            tp += live_pred
            fn += not live_pred
        else:
            fp += live_pred
            tn += not live_pred
    return tp, fp, tn, fn


def pairwise_auc(records):
    live = [s for _, l, s in records if l == "live"]
    attack = [s for _, l, s in records if l == "attack"]
    wins = 0.0
    for a in live:
        for b in attack:
            wins += 1.0 if a > b else (0.5 if a == b else 0.0)
    return wins / (len(live) * len(attack))


def acer(records, thr):
    tp, fp, tn, fn = confusion(records, thr)
    return (fp / (fp + tn) + fn / (fn + tp)) / 2
