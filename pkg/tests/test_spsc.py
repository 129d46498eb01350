import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fasaug.errors import InvalidParameterError
from fasaug.rng import RngStream
from fasaug.spsc import (
    DEGREE_LIMITS,
    MODES,
    ColorJitterParams,
    SpscRanges,
    adjust_brightness,
    apply_spsc,
    color_jitter,
    moire_pattern,
    sample_color_jitter,
    sample_moire_degree,
)

import oracles
from conftest import ramp_image, random_image

IDENTITY = ColorJitterParams()


class TestColorJitter:
    @pytest.mark.parametrize("seed", range(4))
    def test_identity_params_any_order(self, np_rng, seed):
        img = random_image(np_rng, 16, 16)
        order = tuple(RngStream(seed).permutation(4))
        out = color_jitter(img, ColorJitterParams(op_order=order))
        assert np.abs(out.astype(int) - img).max() <= 1

    def test_brightness_only(self):
        img = np.full((2, 2, 3), 100, dtype=np.uint8)
        out = color_jitter(img, ColorJitterParams(brightness_factor=1.4))
        assert (out == 140).all()

    def test_brightness_clamps(self):
        img = np.full((1, 1, 3), 200, dtype=np.uint8)
        assert (adjust_brightness(img, 1.4) == 255).all()

    def test_contrast_pivots_on_mean_luma(self):
        img = np.array([[[0, 0, 0], [200, 200, 200]]], dtype=np.uint8)
        out = color_jitter(img, ColorJitterParams(contrast_factor=0.6))
        # mean luma 100: 100 + 0.6 * (0 - 100) = 40, 100 + 0.6 * 100 = 160
        assert out[0, 0].tolist() == [40, 40, 40]
        assert out[0, 1].tolist() == [160, 160, 160]

    @pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
    def test_random_params_match_scalar_oracle(self, np_rng, backend, seed):
        img = random_image(np_rng, 8, 8)
        p = sample_color_jitter(RngStream(seed))
        out = color_jitter(img, p)
        expect = oracles.jitter(img, p.brightness_factor, p.contrast_factor,
                                p.saturation_factor, p.hue_shift, p.op_order)
        np.testing.assert_array_equal(out, expect)

    def test_brightness_composes(self, np_rng):
        img = np_rng.integers(40, 120, (8, 8, 3), dtype=np.uint8)
        twice = color_jitter(color_jitter(img, ColorJitterParams(brightness_factor=1.3)),
                             ColorJitterParams(brightness_factor=1.2))
        once = adjust_brightness(img, 1.3 * 1.2)
        assert np.abs(twice.astype(int) - once).max() <= 1

    @pytest.mark.parametrize("bad", [
        dict(brightness_factor=1.41), dict(contrast_factor=0.59), dict(saturation_factor=2.0),
        dict(hue_shift=0.5), dict(op_order=(0, 1, 2)), dict(op_order=(0, 0, 1, 2)),
    ])
    def test_out_of_range_rejected(self, np_rng, bad):
        with pytest.raises(InvalidParameterError):
            color_jitter(random_image(np_rng, 2, 2), ColorJitterParams(**bad))

    def test_preserves_dims(self, np_rng):
        img = random_image(np_rng, 7, 11)
        assert color_jitter(img, sample_color_jitter(RngStream(3))).shape == img.shape


class TestSampling:
    def test_factor_ranges(self):
        rng = RngStream(11)
        draws = [sample_color_jitter(rng) for _ in range(10_000)]
        for name in ("brightness_factor", "contrast_factor", "saturation_factor"):
            vals = np.array([getattr(d, name) for d in draws])
            assert vals.min() >= 0.6 and vals.max() <= 1.4
        hues = np.array([d.hue_shift for d in draws])
        assert hues.min() >= -0.4 and hues.max() <= 0.4
        # sd of the mean is 0.8 / sqrt(12 * 1e4) ~ 0.0023
        assert abs(hues.mean()) <= 0.02
        assert all(sorted(d.op_order) == [0, 1, 2, 3] for d in draws)

    def test_deterministic(self):
        assert sample_color_jitter(RngStream(5)) == sample_color_jitter(RngStream(5))

    def test_draw_order(self):
        rng = RngStream(9)
        expect = [rng.uniform(0.6, 1.4), rng.uniform(0.6, 1.4), rng.uniform(0.6, 1.4), rng.uniform(-0.4, 0.4)]
        perm = tuple(rng.permutation(4))
        p = sample_color_jitter(RngStream(9))
        assert [p.brightness_factor, p.contrast_factor, p.saturation_factor, p.hue_shift] == expect
        assert p.op_order == perm

    def test_moire_degree_range(self):
        rng = RngStream(12)
        d = np.array([sample_moire_degree(rng) for _ in range(10_000)])
        assert d.min() >= DEGREE_LIMITS[0] and d.max() <= DEGREE_LIMITS[1]

    def test_ranges_must_stay_inside_limits(self):
        SpscRanges(hue=(-0.1, 0.1))
        with pytest.raises(InvalidParameterError):
            SpscRanges(brightness=(0.5, 1.0))
        with pytest.raises(InvalidParameterError):
            SpscRanges(moire_degree=(0.0, 0.01))


class TestMoire:
    def test_zero_degree_identity(self, np_rng, backend):
        img = random_image(np_rng, 31, 20)
        assert np.array_equal(moire_pattern(img, 0.0), img)

    @pytest.mark.parametrize("degree", [0.0005, 0.003, 0.01, 0.5])
    def test_center_pixel_fixed(self, np_rng, degree):
        img = random_image(np_rng, 24, 36)
        out = moire_pattern(img, degree)
        assert out[12, 18].tolist() == img[12, 18].tolist()

    def test_ramp_matches_scalar_algorithm(self, backend):
        img = ramp_image(5, 5)
        np.testing.assert_array_equal(moire_pattern(img, 0.01), oracles.moire(img, 0.01))

    @pytest.mark.parametrize("degree", [0.002, 0.01, 0.3])
    def test_nonsquare_matches_scalar_algorithm(self, np_rng, backend, degree):
        img = random_image(np_rng, 9, 14)
        np.testing.assert_array_equal(moire_pattern(img, degree), oracles.moire(img, degree))

    def test_negative_degree_rejected(self, np_rng):
        with pytest.raises(InvalidParameterError):
            moire_pattern(random_image(np_rng, 3, 3), -1e-4)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 20), st.integers(1, 20), st.floats(0.0, 0.5), st.integers(0, 2**32 - 1))
    def test_output_within_channel_range(self, h, w, degree, seed):
        img = random_image(np.random.default_rng(seed), h, w)
        out = moire_pattern(img, degree)
        assert out.shape == img.shape
        for c in range(3):
            assert img[..., c].min() <= out[..., c].min()
            assert out[..., c].max() <= img[..., c].max()


class TestApplySpsc:
    def test_deterministic(self, np_rng):
        img = random_image(np_rng, 32, 32)
        assert np.array_equal(apply_spsc(img, RngStream(77)), apply_spsc(img, RngStream(77)))

    @pytest.mark.parametrize("shape", [(1, 1), (5, 9), (40, 33)])
    def test_dims_preserved(self, np_rng, shape):
        img = random_image(np_rng, *shape)
        for seed in range(6):
            assert apply_spsc(img, RngStream(seed)).shape == img.shape

    @pytest.mark.parametrize("mode", MODES)
    def test_mode_pipeline(self, np_rng, mode):
        img = random_image(np_rng, 12, 12)
        seed = next(s for s in range(100) if MODES[RngStream(s).integer(0, 2)] == mode)
        rng = RngStream(seed)
        rng.integer(0, 2)
        expect = img
        if mode != "moire":
            expect = color_jitter(expect, sample_color_jitter(rng))
        if mode != "jitter":
            expect = moire_pattern(expect, sample_moire_degree(rng))
        np.testing.assert_array_equal(apply_spsc(img, RngStream(seed)), expect)

    def test_mode_frequencies(self):
        counts = {m: 0 for m in MODES}
        for seed in range(3000):
            counts[MODES[RngStream(seed).integer(0, 2)]] += 1
        for m in MODES:
            assert abs(counts[m] / 3000 - 1 / 3) <= 0.05
