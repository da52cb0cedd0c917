import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramplab import colorspace as cs
from ramplab import _kernel

from _sharma2005 import PAIRS


class TestConversions:
    def test_white_point(self):
        assert np.allclose(cs.lab_to_srgb([100.0, 0.0, 0.0]), [1, 1, 1], atol=1e-6)

    def test_black(self):
        assert np.allclose(cs.lab_to_srgb([0.0, 0.0, 0.0]), [0, 0, 0], atol=1e-6)

    def test_srgb_primary_red(self):
        lab = cs.srgb_to_lab([1.0, 0.0, 0.0])
        # independent reference converter (scikit-image) gives these values
        assert np.allclose(lab, [53.2408, 80.0925, 67.2032], atol=5e-3)

    def test_neutral_ramp_has_zero_chroma(self):
        gray = cs.srgb_to_lab(np.tile(np.linspace(0, 1, 20)[:, None], (1, 3)))
        assert np.abs(gray[:, 1:]).max() < 1e-8

    def test_round_trip_1000_random(self, random_in_gamut_lab):
        rgb = cs.lab_to_srgb(random_in_gamut_lab)
        lab2 = cs.srgb_to_lab(rgb)
        assert np.abs(lab2 - random_in_gamut_lab).max() < 1e-5

    def test_round_trip_srgb_side(self, rng):
        rgb = rng.uniform(0, 1, (1000, 3))
        back = cs.lab_to_srgb(cs.srgb_to_lab(rgb))
        assert np.abs(back - rgb).max() < 1e-5

    def test_matches_reference_converter(self, rng):
        from skimage.color import rgb2lab

        rgb = rng.uniform(0, 1, (200, 3))
        ours = cs.srgb_to_lab(rgb)
        theirs = rgb2lab(rgb)
        # different matrix precision conventions, but well under 0.01 L*-unit
        assert np.abs(ours - theirs).max() < 0.01

    def test_bad_shape_rejected(self):
        with pytest.raises(ValueError):
            cs.lab_to_srgb([1.0, 2.0])


class TestGamut:
    def test_neutral_interior(self):
        assert cs.in_gamut([50.0, 0.0, 0.0]) is True

    def test_chroma_at_black_is_out(self):
        assert cs.in_gamut([0.0, 100.0, 0.0]) is False

    def test_saturated_blue_purple_out(self):
        # confirmed out-of-gamut via reference converter (clipped channels)
        assert cs.in_gamut([50.0, 80.0, -80.0]) is False

    def test_bright_yellow_in(self):
        # reference converter maps this inside [0,1]^3
        assert cs.in_gamut([95.0, -20.0, 90.0]) is True

    def test_vectorized(self):
        out = cs.in_gamut([[50, 0, 0], [0, 100, 0]])
        assert out.tolist() == [True, False]

    def test_tolerance_stabilizes_round_trips(self, random_in_gamut_lab):
        assert np.all(cs.in_gamut(random_in_gamut_lab))


class TestDeltaE2000:
    def test_sharma_reference_pairs(self):
        for L1, a1, b1, L2, a2, b2, expected in PAIRS:
            got = cs.delta_e_2000([L1, a1, b1], [L2, a2, b2])
            assert got == pytest.approx(expected, abs=1e-4)

    def test_identical_is_zero(self):
        assert cs.delta_e_2000([43.1, 12.0, -5.0], [43.1, 12.0, -5.0]) == 0.0

    def test_symmetry_100_random_pairs(self, rng):
        a = rng.uniform([0, -100, -100], [100, 100, 100], (100, 3))
        b = rng.uniform([0, -100, -100], [100, 100, 100], (100, 3))
        assert np.allclose(cs.delta_e_2000(a, b), cs.delta_e_2000(b, a), atol=1e-12)

    def test_positive_for_distinct(self, rng):
        a = rng.uniform([0, -100, -100], [100, 100, 100], (100, 3))
        b = a + rng.uniform(0.5, 2.0, (100, 3))
        assert np.all(cs.delta_e_2000(a, b) > 0)

    def test_kernel_scalar_agrees(self, rng):
        a = rng.uniform([0, -100, -100], [100, 100, 100], (300, 3))
        b = rng.uniform([0, -100, -100], [100, 100, 100], (300, 3))
        vec = cs.delta_e_2000(a, b)
        for i in range(300):
            scalar = _kernel._delta_e_2000(*a[i], *b[i])
            assert scalar == pytest.approx(vec[i], abs=1e-10)


class TestKernelConversions:
    def test_linear_rgb_agrees(self, random_in_gamut_lab):
        vec = cs.lab_to_linear_rgb(random_in_gamut_lab[:100])
        for i in range(100):
            scalar = _kernel._lab_to_linear_rgb(*random_in_gamut_lab[i])
            assert np.allclose(scalar, vec[i], atol=1e-12)

    def test_gamut_agrees(self, rng):
        labs = rng.uniform([0, -128, -128], [100, 128, 128], (500, 3))
        vec = cs.in_gamut(labs)
        for i in range(500):
            assert _kernel._in_gamut(labs[i, 0], labs[i, 1], labs[i, 2], cs.GAMUT_TOL) == vec[i]


class TestLerp:
    def test_endpoints(self):
        c1, c2 = np.array([10.0, 5.0, -3.0]), np.array([90.0, -20.0, 44.0])
        assert np.array_equal(cs.lerp_lab(c1, c2, 0.0), c1)
        assert np.array_equal(cs.lerp_lab(c1, c2, 1.0), c2)

    def test_midpoint(self):
        got = cs.lerp_lab([0, 0, 0], [100, 20, -40], 0.5)
        assert np.allclose(got, [50, 10, -20])

    def test_quarter(self):
        got = cs.lerp_lab([20, 0, 0], [60, 40, 0], 0.25)
        assert np.allclose(got, [30, 10, 0])

    @given(alpha=st.floats(0, 1))
    @settings(max_examples=50, deadline=None)
    def test_affine_symmetry(self, alpha):
        a = np.array([12.0, 30.0, -8.0])
        b = np.array([77.0, -14.0, 61.0])
        assert np.allclose(cs.lerp_lab(a, b, alpha), cs.lerp_lab(b, a, 1 - alpha), atol=1e-12)


class TestResample:
    def test_same_count_is_exact(self, random_in_gamut_lab):
        pts = random_in_gamut_lab[:25]
        assert np.array_equal(cs.resample(pts, 25), pts)

    def test_endpoints_preserved_exactly(self, random_in_gamut_lab):
        pts = random_in_gamut_lab[:9]
        for m in (2, 3, 5, 12, 31, 100):
            out = cs.resample(pts, m)
            assert np.array_equal(out[0], pts[0])
            assert np.array_equal(out[-1], pts[-1])

    def test_straight_segment_stays_collinear(self):
        pts = np.array([[0.0, 0, 0], [50.0, 10, -5], [100.0, 20, -10]])
        out = cs.resample(pts, 5)
        v = out[1:] - out[:-1]
        cross = np.cross(v[:-1], v[1:])
        assert np.abs(cross).max() < 1e-9

    def test_halving_for_smoothness_term(self, random_in_gamut_lab):
        pts = random_in_gamut_lab[:25]
        assert cs.resample(pts, 25 // 2).shape == (12, 3)

    def test_too_few_points_rejected(self, random_in_gamut_lab):
        with pytest.raises(ValueError):
            cs.resample(random_in_gamut_lab[:5], 1)


class TestLch:
    def test_round_trip(self, random_in_gamut_lab):
        back = cs.lch_to_lab(cs.lab_to_lch(random_in_gamut_lab))
        assert np.abs(back - random_in_gamut_lab).max() < 1e-9

    def test_chroma_nonnegative_hue_range(self, random_in_gamut_lab):
        lch = cs.lab_to_lch(random_in_gamut_lab)
        assert lch[:, 1].min() >= 0
        assert lch[:, 2].min() >= 0 and lch[:, 2].max() < 360
