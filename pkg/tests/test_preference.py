import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramplab.preference import (
    DEFAULT_EDIT_EXTENT,
    PreferenceBlock,
    PreferenceShelf,
    absorb_edit,
    blend_direction,
    compute_bias,
)
from ramplab.profiles import LuminanceProfile


def dnorm(x, mu, sigma):
    return math.exp(-0.5 * ((x - mu) / sigma) ** 2) / (sigma * math.sqrt(2 * math.pi))


class TestBlock:
    def test_validation(self):
        with pytest.raises(ValueError):
            PreferenceBlock(color=(50, 0, 0), center=1.2)
        with pytest.raises(ValueError):
            PreferenceBlock(color=(50, 0, 0), center=0.5, extent=0.0)

    def test_json_round_trip(self):
        shelf = PreferenceShelf(
            blocks=(
                PreferenceBlock(color=(50.0, 10.0, -20.0), center=0.25, extent=0.3),
                PreferenceBlock(color=(80.0, -5.0, 60.0), center=0.9, extent=0.1),
            )
        )
        data = json.loads(json.dumps(shelf.to_json()))
        assert PreferenceShelf.from_json(data) == shelf

    def test_conformed_snaps_luminance(self):
        profile = LuminanceProfile(kind="linear", n=25)
        shelf = PreferenceShelf(blocks=(PreferenceBlock(color=(50, 10, 10), center=0.0),))
        conformed = shelf.conformed(profile)
        assert conformed.blocks[0].color[0] == profile.luminance(0)
        assert conformed.blocks[0].color[1:] == (10.0, 10.0)


class TestComputeBias:
    def test_empty_shelf_zero_vector(self):
        out = compute_bias(3, [50, 0, 0], PreferenceShelf(), 25)
        assert np.array_equal(out, np.zeros(3))

    def test_single_block_points_at_block_everywhere(self):
        block = PreferenceBlock(color=(60.0, 40.0, -20.0), center=0.7, extent=0.2)
        shelf = PreferenceShelf(blocks=(block,))
        current = np.array([30.0, -10.0, 5.0])
        expected = np.array([0.0, 40.0 - (-10.0), -20.0 - 5.0])
        expected = expected / np.linalg.norm(expected)
        for index in (0, 5, 12, 24):
            out = compute_bias(index, current, shelf, 25)
            assert np.allclose(out, expected, atol=1e-12)

    def test_mirror_blocks_cancel_at_midpoint(self):
        n = 25
        shelf = PreferenceShelf(
            blocks=(
                PreferenceBlock(color=(50.0, 30.0, 0.0), center=0.25, extent=0.4),
                PreferenceBlock(color=(50.0, -30.0, 0.0), center=0.75, extent=0.4),
            )
        )
        out = compute_bias(12, [50.0, 0.0, 0.0], shelf, n)
        assert np.array_equal(out, np.zeros(3))

    def test_unit_length_with_zero_luminance_component(self, rng):
        for _ in range(50):
            blocks = tuple(
                PreferenceBlock(
                    color=tuple(rng.uniform([0, -80, -80], [100, 80, 80])),
                    center=float(rng.uniform(0, 1)),
                    extent=float(rng.uniform(0.05, 1.0)),
                )
                for _ in range(rng.integers(1, 4))
            )
            out = compute_bias(
                int(rng.integers(0, 25)), rng.uniform([0, -60, -60], [100, 60, 60]), PreferenceShelf(blocks), 25
            )
            assert out[0] == 0.0
            norm = np.linalg.norm(out)
            assert norm == 0.0 or norm == pytest.approx(1.0, abs=1e-9)

    @given(
        center=st.floats(0.05, 0.95),
        extent=st.floats(0.05, 1.0),
        index=st.integers(0, 24),
    )
    @settings(max_examples=100, deadline=None)
    def test_matches_gaussian_accumulation_oracle(self, center, extent, index):
        n = 25
        blocks = (
            PreferenceBlock(color=(50.0, 35.0, -10.0), center=center, extent=extent),
            PreferenceBlock(color=(50.0, -20.0, 25.0), center=1.0 - center, extent=extent),
        )
        current = np.array([40.0, 5.0, -5.0])
        acc = np.zeros(2)
        for b in blocks:
            w = dnorm(index, b.center * (n - 1), 0.5 * b.extent * (n - 1))
            acc += w * (np.array(b.color[1:]) - current[1:])
        norm = np.linalg.norm(acc)
        got = compute_bias(index, current, PreferenceShelf(blocks), n)
        if norm < 1e-12:
            assert np.array_equal(got, np.zeros(3))
        else:
            assert np.allclose(got[1:], acc / norm, atol=1e-9)

    def test_closer_center_wins(self):
        # two opposing blocks, equal width; the one whose center is nearer
        # to the index exerts the stronger pull
        n = 25
        shelf = PreferenceShelf(
            blocks=(
                PreferenceBlock(color=(50.0, 40.0, 0.0), center=0.2, extent=0.3),
                PreferenceBlock(color=(50.0, -40.0, 0.0), center=0.8, extent=0.3),
            )
        )
        near_first = compute_bias(3, [50.0, 0.0, 0.0], shelf, n)
        near_second = compute_bias(21, [50.0, 0.0, 0.0], shelf, n)
        assert near_first[1] > 0
        assert near_second[1] < 0

    def test_narrower_block_focuses(self):
        # at its center a narrow block out-pulls a wide one of equal offset;
        # far away the wide one dominates
        n = 25
        narrow = PreferenceBlock(color=(50.0, 40.0, 0.0), center=0.5, extent=0.1)
        wide = PreferenceBlock(color=(50.0, -40.0, 0.0), center=0.5, extent=0.9)
        shelf = PreferenceShelf(blocks=(narrow, wide))
        at_center = compute_bias(12, [50.0, 0.0, 0.0], shelf, n)
        far_away = compute_bias(0, [50.0, 0.0, 0.0], shelf, n)
        assert at_center[1] > 0  # narrow peak dominates at mu
        assert far_away[1] < 0  # diffuse block dominates in the tails

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            compute_bias(25, [50, 0, 0], PreferenceShelf(), 25)


class TestBlendDirection:
    def test_zero_bias_returns_random(self):
        r = np.array([0.0, 1.0, 0.0])
        assert np.array_equal(blend_direction(r, np.zeros(3)), r)

    def test_collinear(self):
        r = np.array([0.0, 0.6, 0.8])
        out = blend_direction(r, r)
        assert np.allclose(out, r, atol=1e-12)

    def test_orthogonal_arithmetic(self):
        out = blend_direction([0.0, 1.0, 0.0], [0.0, 0.0, 1.0])
        expected = np.array([0.0, 0.4, 0.6]) / np.hypot(0.4, 0.6)
        assert np.allclose(out, expected, atol=1e-12)

    def test_opposing_near_cancellation_falls_back(self):
        r = np.array([0.0, 1.0, 0.0])
        u = np.array([0.0, -2.0 / 3.0, 0.0])  # 0.4*r + 0.6*u == 0
        assert np.array_equal(blend_direction(r, u), r)

    def test_always_unit_length(self, rng):
        for _ in range(200):
            theta = rng.uniform(0, 2 * math.pi)
            r = np.array([0.0, math.cos(theta), math.sin(theta)])
            phi = rng.uniform(0, 2 * math.pi)
            u = np.array([0.0, math.cos(phi), math.sin(phi)])
            assert np.linalg.norm(blend_direction(r, u)) == pytest.approx(1.0, abs=1e-9)


class TestAbsorbEdit:
    def test_edit_on_empty_shelf(self):
        shelf = absorb_edit(PreferenceShelf(), 0.4, (52.0, 11.0, -3.0))
        assert len(shelf) == 1
        assert shelf.blocks[0].extent == DEFAULT_EDIT_EXTENT

    def test_identical_edit_is_idempotent(self):
        shelf = absorb_edit(PreferenceShelf(), 0.4, (52.0, 11.0, -3.0))
        again = absorb_edit(shelf, 0.4, (52.0, 11.0, -3.0))
        assert again == shelf

    def test_distinct_edits_accumulate(self):
        shelf = absorb_edit(PreferenceShelf(), 0.4, (52.0, 11.0, -3.0))
        shelf = absorb_edit(shelf, 0.6, (52.0, 11.0, -3.0))
        assert len(shelf) == 2

    def test_control_point_drag_position(self):
        # dragging control point j of an n-point map lands at (j-1)/(n-1)
        # in 1-based terms, i.e. j/(n-1) for 0-based j
        n, j = 25, 6
        shelf = absorb_edit(PreferenceShelf(), j / (n - 1), (40.0, 20.0, 0.0))
        assert shelf.blocks[0].center == pytest.approx(0.25)

    def test_explicit_extent(self):
        shelf = absorb_edit(PreferenceShelf(), 0.5, (50.0, 0.0, 0.0), extent=0.33)
        assert shelf.blocks[0].extent == 0.33
