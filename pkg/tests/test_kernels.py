"""The compiled kernels must agree with the numpy fallback bit for bit."""
import numpy as np
import pytest

from fasaug._backend import BACKEND, available_backends
from fasaug.imgcore import gaussian_kernel

from conftest import random_image

backends = available_backends()
needs_ext = pytest.mark.skipif("cython" not in backends, reason="compiled extension not built")


def test_numpy_backend_always_available():
    assert "numpy" in backends
    assert BACKEND in backends


@needs_ext
@pytest.mark.parametrize("degree", [0.0, 0.0005, 0.004, 0.01, 0.2])
@pytest.mark.parametrize("shape", [(1, 1), (5, 5), (17, 32), (64, 48)])
def test_moire_parity(np_rng, degree, shape):
    img = random_image(np_rng, *shape)
    P, C = backends["numpy"], backends["cython"]
    np.testing.assert_array_equal(P.moire_remap(img, degree), C.moire_remap(img, degree))


@needs_ext
def test_hsv_parity(np_rng):
    P, C = backends["numpy"], backends["cython"]
    img = random_image(np_rng, 64, 64)
    np.testing.assert_array_equal(P.rgb_to_hsv(img), C.rgb_to_hsv(img))
    hsv = np.stack([np_rng.uniform(-2, 3, (64, 64)), np_rng.uniform(-0.2, 1.2, (64, 64)),
                    np_rng.uniform(-0.2, 1.2, (64, 64))], -1)
    np.testing.assert_array_equal(P.hsv_to_rgb(hsv), C.hsv_to_rgb(hsv))
    for shift, factor in [(0.0, 1.0), (0.37, 1.0), (-0.4, 0.6), (0.0, 1.4)]:
        np.testing.assert_array_equal(P.hsv_adjust(img, shift, factor), C.hsv_adjust(img, shift, factor))


@needs_ext
@pytest.mark.parametrize("sigma", [0.2, 1.0, 2.5, 7.0])
@pytest.mark.parametrize("channels", [1, 3])
def test_blur_parity(np_rng, sigma, channels):
    P, C = backends["numpy"], backends["cython"]
    a = np_rng.normal(size=(23, 31, channels))
    k = gaussian_kernel(sigma)
    np.testing.assert_array_equal(P.blur_rows(a, k), C.blur_rows(a, k))
    np.testing.assert_array_equal(P.blur_cols(a, k), C.blur_cols(a, k))


@needs_ext
def test_remap_and_pointwise_parity(np_rng):
    P, C = backends["numpy"], backends["cython"]
    img = random_image(np_rng, 20, 30)
    f = np.ascontiguousarray(img, dtype=np.float64)
    mx = np_rng.uniform(-5, 35, (25, 15))
    my = np_rng.uniform(-5, 25, (25, 15))
    np.testing.assert_array_equal(P.bilinear_remap(f, mx, my), C.bilinear_remap(f, mx, my))
    np.testing.assert_array_equal(P.bilinear_remap_u8(img, mx, my), C.bilinear_remap_u8(img, mx, my))
    np.testing.assert_array_equal(P.linear_u8(img, 1.3, 97.25), C.linear_u8(img, 1.3, 97.25))
    m = np_rng.uniform(0, 1, (20, 30))
    other = random_image(np_rng, 20, 30)
    np.testing.assert_array_equal(P.blend(img, other, m), C.blend(img, other, m))
    x = np_rng.uniform(-300, 600, (7, 9, 3))
    x[0, 0, 0] = 0.5
    x[0, 0, 1] = 254.5
    np.testing.assert_array_equal(P.quantize(x), C.quantize(x))
