import math

import numpy as np
import pytest

from ramplab.annealer import random_init
from ramplab.cost import (
    CostBreakdown,
    CostWeights,
    curvature,
    cvd_cost,
    luminance_pairs,
    pair_threshold,
    smoothness_cost,
    total_cost,
    uniformity_cost,
)
from ramplab.cvd import CvdModel
from ramplab.profiles import LuminanceProfile


def gray(L):
    return [float(L), 0.0, 0.0]


def gray_at_distance(start_L, target_de):
    """L (> start_L) whose gray is target_de away from gray(start_L), by
    bisection over an independent reference implementation."""
    from skimage.color import deltaE_ciede2000

    lo, hi = start_L, start_L + 40.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if deltaE_ciede2000(gray(start_L), gray(mid)) < target_de:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class TestUniformity:
    def test_equal_steps_zero(self):
        L1 = 30.0
        L2 = gray_at_distance(L1, 2.0)
        L3 = gray_at_distance(L2, 2.0)
        assert uniformity_cost([gray(L1), gray(L2), gray(L3)]) < 1e-6

    def test_hand_oracle_one_three(self):
        # adjacent distances {1, 3}: mean 2, variance (1+1)/(n-2)=2, CV = sqrt(2)/2
        L1 = 30.0
        L2 = gray_at_distance(L1, 1.0)
        L3 = gray_at_distance(L2, 3.0)
        got = uniformity_cost([gray(L1), gray(L2), gray(L3)])
        assert got == pytest.approx(math.sqrt(2.0) / 2.0, abs=1e-6)

    def test_reversal_invariant(self, random_in_gamut_lab):
        pts = random_in_gamut_lab[:25]
        assert uniformity_cost(pts) == pytest.approx(uniformity_cost(pts[::-1]), abs=1e-12)

    def test_all_identical_is_zero(self):
        assert uniformity_cost([gray(40)] * 5) == 0.0

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            uniformity_cost([gray(10), gray(20)])


class TestCurvature:
    def test_collinear_zero(self):
        pts = [[0.0, 0, 0], [50.0, 10, -5], [100.0, 20, -10]]
        assert curvature(pts) == pytest.approx(0.0, abs=1e-12)

    def test_full_reversal_one(self):
        pts = [[0.0, 0, 0], [50.0, 0, 0], [0.0, 0, 0], [50.0, 0, 0]]
        assert curvature(pts) == pytest.approx(1.0, abs=1e-12)

    def test_right_angle_half(self):
        pts = [[0.0, 0, 0], [10.0, 0, 0], [10.0, 10, 0]]
        assert curvature(pts) == pytest.approx(0.5, abs=1e-12)

    def test_rotation_invariant_in_chromatic_plane(self, random_in_gamut_lab, rng):
        pts = np.array(random_in_gamut_lab[:15])
        base = curvature(pts)
        for _ in range(5):
            theta = rng.uniform(0, 2 * math.pi)
            c, s = math.cos(theta), math.sin(theta)
            rotated = pts.copy()
            rotated[:, 1] = c * pts[:, 1] - s * pts[:, 2]
            rotated[:, 2] = s * pts[:, 1] + c * pts[:, 2]
            assert curvature(rotated) == pytest.approx(base, abs=1e-9)

    def test_zero_length_segment_contributes_zero(self):
        pts = [[0.0, 0, 0], [0.0, 0, 0], [10.0, 0, 0]]
        assert curvature(pts) == 0.0

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            curvature([gray(0), gray(10)])


class TestSmoothness:
    def test_straight_line_zero_any_weight(self):
        pts = np.linspace([5.0, -10, 4], [95.0, 30, -20], 9)
        for w2 in (0.0, 0.25, 0.9):
            assert smoothness_cost(pts, CostWeights(omega_s2=w2)) == pytest.approx(0.0, abs=1e-12)

    def test_weight_zero_equals_curvature(self, random_in_gamut_lab):
        pts = random_in_gamut_lab[:11]
        w = CostWeights(omega_s2=0.0)
        assert smoothness_cost(pts, w) == pytest.approx(curvature(pts), abs=1e-15)

    def test_monotone_in_secondary_weight(self, random_in_gamut_lab):
        pts = random_in_gamut_lab[:11]
        lo = smoothness_cost(pts, CostWeights(omega_s2=0.25))
        hi = smoothness_cost(pts, CostWeights(omega_s2=0.9))
        assert hi > lo

    def test_lower_bound_is_curvature(self, random_in_gamut_lab):
        for k in range(5):
            pts = random_in_gamut_lab[k * 20 : k * 20 + 15]
            assert smoothness_cost(pts) >= curvature(pts) - 1e-15

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            smoothness_cost(np.zeros((4, 3)))


class TestPairThreshold:
    def test_zero_at_same_index(self):
        assert pair_threshold(70.0, 4, 4, 25) == 0.0

    def test_full_k_at_max_separation(self):
        assert pair_threshold(70.0, 0, 24, 25) == 70.0

    def test_monotone_in_separation(self):
        ks = [float(pair_threshold(70.0, 0, j, 25)) for j in range(1, 25)]
        assert all(a < b for a, b in zip(ks, ks[1:]))


class TestCvdCost:
    def test_strictly_increasing_luminance_is_free(self):
        profile = LuminanceProfile(kind="linear", n=9)
        pts = np.column_stack([profile.values(), np.zeros(9), np.zeros(9)])
        assert cvd_cost(pts, CvdModel()) == 0.0

    def test_luminance_pairs_mirror_diverging(self):
        L = LuminanceProfile(kind="diverging", n=7).values()
        pairs = luminance_pairs(L)
        assert pairs.tolist() == [[0, 6], [1, 5], [2, 4]]

    def test_identical_arms_identity_model_max_penalty(self):
        profile = LuminanceProfile(kind="diverging", n=7)
        L = profile.values()
        # same chromaticity reused on both arms: the degenerate mode the
        # identity-matrix term exists to punish
        pts = np.column_stack([L, np.full(7, 20.0), np.full(7, -10.0)])
        assert cvd_cost(pts, CvdModel.none()) == pytest.approx(1.0)

    def test_distant_pairs_are_cheaper_when_separated(self):
        # two-point isoluminant maps with growing chromatic separation
        costs = []
        for spread in (0.0, 10.0, 30.0, 60.0):
            pts = [[50.0, -spread, 0.0], [50.0, spread, 0.0]]
            costs.append(cvd_cost(pts, CvdModel.none()))
        assert all(a >= b for a, b in zip(costs, costs[1:]))
        assert costs[0] == pytest.approx(1.0)

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            cvd_cost(np.zeros((1, 3)), CvdModel())


class TestTotal:
    def test_recombination_bitwise_100_random_maps(self):
        w = CostWeights()
        model = CvdModel()
        for seed in range(100):
            profile = LuminanceProfile(kind="diverging" if seed % 2 else "linear", n=7)
            pts = random_init(profile, seed).points
            br = total_cost(pts, model, w)
            assert br.total == w.omega_u * br.uniformity + w.omega_s * br.smoothness + w.omega_c * br.cvd

    def test_cvd_weight_zero_ignores_model(self, linear_profile):
        w = CostWeights(omega_c=0.0)
        pts = random_init(linear_profile, 5).points
        a = total_cost(pts, CvdModel(), w)
        b = total_cost(pts, CvdModel.none(), w)
        assert a.total == b.total

    def test_all_zero_terms(self):
        profile = LuminanceProfile(kind="linear", n=9)
        L = profile.values()
        # a straight neutral ramp zeroes smoothness and cvd; uniformity stays
        # slightly positive because equal L steps are not equal dE2000 steps
        pts = np.column_stack([L, np.zeros(9), np.zeros(9)])
        br = total_cost(pts, CvdModel.none())
        assert br.smoothness == 0.0
        assert br.cvd == 0.0
        assert br.total == pytest.approx(CostWeights().omega_u * br.uniformity)

    def test_weights_validation(self):
        with pytest.raises(ValueError):
            CostWeights(omega_u=-1)
        with pytest.raises(ValueError):
            CostWeights(K=0)
        assert CostWeights(omega_s2=2.0).omega_s2 == 1.0  # clamped
