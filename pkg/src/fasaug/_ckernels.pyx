# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""
import numpy as np
from libc.math cimport atan2, sqrt, cos, sin

NAME = "cython"


cdef inline double floor(double x) noexcept nogil:
    # exact floor for |x| < 2**63 without a libm call
    cdef double t = <double>(<long long>x)
    if t > x:
        t -= 1.0
    return t


cdef inline unsigned char _q(double v) noexcept nogil:
    if v < 0.0:
        v = 0.0
    elif v > 255.0:
        v = 255.0
    # v + 0.5 >= 0, so truncation is floor
    return <unsigned char>(v + 0.5)


def quantize(x):
    src = np.ascontiguousarray(x, dtype=np.float64)
    out = np.empty(src.shape, dtype=np.uint8)
    cdef const double[::1] a = src.reshape(-1)
    cdef unsigned char[::1] o = out.reshape(-1)
    cdef Py_ssize_t i, n = a.shape[0]
    with nogil:
        for i in range(n):
            o[i] = _q(a[i])
    return out


def moire_remap(const unsigned char[:, :, ::1] src, double degree):
    cdef Py_ssize_t h = src.shape[0], w = src.shape[1], nc = src.shape[2]
    out = np.empty((h, w, nc), dtype=np.uint8)
    cdef unsigned char[:, :, ::1] dst = out
    cdef double cx = w / 2.0, cy = h / 2.0
    cdef double ox, oy, theta, rho, ang, fx, fy
    cdef Py_ssize_t x, y, c, nx, ny
    with nogil:
        for y in range(h):
            oy = y - cy
            for x in range(w):
                ox = x - cx
                theta = atan2(oy, ox)
                rho = sqrt(ox * ox + oy * oy)
                ang = theta + degree * rho
                fx = floor(cx + rho * cos(ang) + 0.5)
                fy = floor(cy + rho * sin(ang) + 0.5)
                if fx < 0.0:
                    fx = 0.0
                elif fx > w - 1:
                    fx = w - 1
                if fy < 0.0:
                    fy = 0.0
                elif fy > h - 1:
                    fy = h - 1
                nx = <Py_ssize_t>fx
                ny = <Py_ssize_t>fy
                for c in range(nc):
                    dst[y, x, c] = _q(0.8 * <double>src[y, x, c] + 0.2 * <double>src[ny, nx, c])
    return out


def bilinear_remap(const double[:, :, ::1] img, const double[:, ::1] map_x, const double[:, ::1] map_y):
    cdef Py_ssize_t h = img.shape[0], w = img.shape[1], nc = img.shape[2]
    cdef Py_ssize_t oh = map_x.shape[0], ow = map_x.shape[1]
    out = np.empty((oh, ow, nc), dtype=np.float64)
    cdef double[:, :, ::1] dst = out
    cdef double x, y, fx, fy, top, bot
    cdef Py_ssize_t i, j, c, x0, y0, x1, y1
    with nogil:
        for i in range(oh):
            for j in range(ow):
                x = map_x[i, j]
                y = map_y[i, j]
                if x < 0.0:
                    x = 0.0
                elif x > w - 1.0:
                    x = w - 1.0
                if y < 0.0:
                    y = 0.0
                elif y > h - 1.0:
                    y = h - 1.0
                x0 = <Py_ssize_t>floor(x)
                y0 = <Py_ssize_t>floor(y)
                x1 = x0 + 1 if x0 + 1 < w else w - 1
                y1 = y0 + 1 if y0 + 1 < h else h - 1
                fx = x - x0
                fy = y - y0
                for c in range(nc):
                    top = img[y0, x0, c] * (1.0 - fx) + img[y0, x1, c] * fx
                    bot = img[y1, x0, c] * (1.0 - fx) + img[y1, x1, c] * fx
                    dst[i, j, c] = top * (1.0 - fy) + bot * fy
    return out


cdef inline void _rgb2hsv(double r, double g, double b, double *hue, double *sat, double *val) noexcept nogil:
    cdef double mx, mn, c, hh
    mx = r if r > g else g
    mx = mx if mx > b else b
    mn = r if r < g else g
    mn = mn if mn < b else b
    c = mx - mn
    if c > 0.0:
        if mx == r:
            hh = (g - b) / c
            if hh < 0.0:
                hh = hh + 6.0
        elif mx == g:
            hh = (b - r) / c + 2.0
        else:
            hh = (r - g) / c + 4.0
        hh = hh / 6.0
        if hh >= 1.0:
            hh = hh - 1.0
    else:
        hh = 0.0
    hue[0] = hh
    sat[0] = c / mx if mx > 0.0 else 0.0
    val[0] = mx


cdef inline void _hsv2rgb(double hh, double s, double v, unsigned char *out) noexcept nogil:
    cdef double h6, fi, f, p, q, t, r, g, b
    cdef Py_ssize_t i
    hh = hh - floor(hh)
    s = 0.0 if s < 0.0 else (1.0 if s > 1.0 else s)
    v = 0.0 if v < 0.0 else (1.0 if v > 1.0 else v)
    h6 = hh * 6.0
    fi = floor(h6)
    f = h6 - fi
    i = (<Py_ssize_t>fi) % 6
    p = v * (1.0 - s)
    q = v * (1.0 - s * f)
    t = v * (1.0 - s * (1.0 - f))
    if i == 0:
        r = v; g = t; b = p
    elif i == 1:
        r = q; g = v; b = p
    elif i == 2:
        r = p; g = v; b = t
    elif i == 3:
        r = p; g = q; b = v
    elif i == 4:
        r = t; g = p; b = v
    else:
        r = v; g = p; b = q
    out[0] = _q(r * 255.0)
    out[1] = _q(g * 255.0)
    out[2] = _q(b * 255.0)


def rgb_to_hsv(const unsigned char[:, :, ::1] img):
    cdef Py_ssize_t h = img.shape[0], w = img.shape[1], x, y
    out = np.empty((h, w, 3), dtype=np.float64)
    cdef double[:, :, ::1] dst = out
    with nogil:
        for y in range(h):
            for x in range(w):
                _rgb2hsv(img[y, x, 0] / 255.0, img[y, x, 1] / 255.0, img[y, x, 2] / 255.0,
                         &dst[y, x, 0], &dst[y, x, 1], &dst[y, x, 2])
    return out


def hsv_to_rgb(const double[:, :, ::1] hsv):
    cdef Py_ssize_t h = hsv.shape[0], w = hsv.shape[1], x, y
    out = np.empty((h, w, 3), dtype=np.uint8)
    cdef unsigned char[:, :, ::1] dst = out
    with nogil:
        for y in range(h):
            for x in range(w):
                _hsv2rgb(hsv[y, x, 0], hsv[y, x, 1], hsv[y, x, 2], &dst[y, x, 0])
    return out


def hsv_adjust(const unsigned char[:, :, ::1] img, double hue_shift, double sat_factor):
    cdef Py_ssize_t h = img.shape[0], w = img.shape[1], x, y
    out = np.empty((h, w, 3), dtype=np.uint8)
    cdef unsigned char[:, :, ::1] dst = out
    cdef double hh, s, v
    with nogil:
        for y in range(h):
            for x in range(w):
                _rgb2hsv(img[y, x, 0] / 255.0, img[y, x, 1] / 255.0, img[y, x, 2] / 255.0, &hh, &s, &v)
                hh = hh + hue_shift
                hh = hh - floor(hh)
                s = s * sat_factor
                s = 0.0 if s < 0.0 else (1.0 if s > 1.0 else s)
                _hsv2rgb(hh, s, v, &dst[y, x, 0])
    return out


def blend(const unsigned char[:, :, ::1] o1, const unsigned char[:, :, ::1] o2, const double[:, ::1] mask):
    cdef Py_ssize_t h = o1.shape[0], w = o1.shape[1], nc = o1.shape[2], x, y, c
    out = np.empty((h, w, nc), dtype=np.uint8)
    cdef unsigned char[:, :, ::1] dst = out
    cdef double m
    with nogil:
        for y in range(h):
            for x in range(w):
                m = mask[y, x]
                for c in range(nc):
                    dst[y, x, c] = _q(o1[y, x, c] * m + o2[y, x, c] * (1.0 - m))
    return out


def linear_u8(const unsigned char[:, :, ::1] img, double factor, double pivot):
    cdef Py_ssize_t h = img.shape[0], w = img.shape[1], nc = img.shape[2], x, y, c
    out = np.empty((h, w, nc), dtype=np.uint8)
    cdef unsigned char[:, :, ::1] dst = out
    with nogil:
        for y in range(h):
            for x in range(w):
                for c in range(nc):
                    dst[y, x, c] = _q(pivot + factor * (img[y, x, c] - pivot))
    return out


def bilinear_remap_u8(const unsigned char[:, :, ::1] img, const double[:, ::1] map_x, const double[:, ::1] map_y):
    cdef Py_ssize_t h = img.shape[0], w = img.shape[1], nc = img.shape[2]
    cdef Py_ssize_t oh = map_x.shape[0], ow = map_x.shape[1]
    out = np.empty((oh, ow, nc), dtype=np.uint8)
    cdef unsigned char[:, :, ::1] dst = out
    cdef double x, y, fx, fy, top, bot
    cdef Py_ssize_t i, j, c, x0, y0, x1, y1
    with nogil:
        for i in range(oh):
            for j in range(ow):
                x = map_x[i, j]
                y = map_y[i, j]
                if x < 0.0:
                    x = 0.0
                elif x > w - 1.0:
                    x = w - 1.0
                if y < 0.0:
                    y = 0.0
                elif y > h - 1.0:
                    y = h - 1.0
                x0 = <Py_ssize_t>x
                y0 = <Py_ssize_t>y
                x1 = x0 + 1 if x0 + 1 < w else w - 1
                y1 = y0 + 1 if y0 + 1 < h else h - 1
                fx = x - x0
                fy = y - y0
                for c in range(nc):
                    top = <double>img[y0, x0, c] * (1.0 - fx) + <double>img[y0, x1, c] * fx
                    bot = <double>img[y1, x0, c] * (1.0 - fx) + <double>img[y1, x1, c] * fx
                    dst[i, j, c] = _q(top * (1.0 - fy) + bot * fy)
    return out


# Both blur passes fold mirrored taps: acc += k[i] * (p[i] + p[2r - i]) for
# i < r, then acc += k[r] * p[r]. The numpy fallback uses the same order.

def blur_rows(const double[:, :, ::1] arr, const double[::1] kernel):
    cdef Py_ssize_t h = arr.shape[0], w = arr.shape[1], nc = arr.shape[2]
    cdef Py_ssize_t nk = kernel.shape[0], r = (nk - 1) // 2
    cdef Py_ssize_t row = w * nc, y, x, c, i, j
    out = np.zeros((h, w, nc), dtype=np.float64)
    cdef double[:, :, ::1] dst = out
    pad = np.empty((w + 2 * r) * nc, dtype=np.float64)
    cdef double[::1] buf = pad
    cdef double k
    cdef double *o
    cdef double *p
    cdef double *q
    with nogil:
        for y in range(h):
            for x in range(w + 2 * r):
                j = x - r
                if j < 0:
                    j = 0
                elif j > w - 1:
                    j = w - 1
                for c in range(nc):
                    buf[x * nc + c] = arr[y, j, c]
            o = &dst[y, 0, 0]
            for i in range(r):
                k = kernel[i]
                p = &buf[i * nc]
                q = &buf[(2 * r - i) * nc]
                for j in range(row):
                    o[j] = o[j] + k * (p[j] + q[j])
            k = kernel[r]
            p = &buf[r * nc]
            for j in range(row):
                o[j] = o[j] + k * p[j]
    return out


cdef inline Py_ssize_t _clamp(Py_ssize_t v, Py_ssize_t hi) noexcept nogil:
    return 0 if v < 0 else (hi if v > hi else v)


def blur_cols(const double[:, :, ::1] arr, const double[::1] kernel):
    cdef Py_ssize_t h = arr.shape[0], w = arr.shape[1], nc = arr.shape[2]
    cdef Py_ssize_t nk = kernel.shape[0], r = (nk - 1) // 2
    cdef Py_ssize_t row = w * nc, y, i, j
    out = np.zeros((h, w, nc), dtype=np.float64)
    cdef double[:, :, ::1] dst = out
    cdef double k
    cdef double *o
    cdef const double *p
    cdef const double *q
    with nogil:
        for y in range(h):
            o = &dst[y, 0, 0]
            for i in range(r):
                k = kernel[i]
                p = &arr[_clamp(y + i - r, h - 1), 0, 0]
                q = &arr[_clamp(y + r - i, h - 1), 0, 0]
                for j in range(row):
                    o[j] = o[j] + k * (p[j] + q[j])
            k = kernel[r]
            p = &arr[y, 0, 0]
            for j in range(row):
                o[j] = o[j] + k * p[j]
    return out
