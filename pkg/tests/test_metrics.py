import numpy as np
import pytest

from ramplab.benchmarks import BENCHMARK_DEFAULT_N, benchmark, benchmark_names
from ramplab.cvd import CvdModel, simulate
from ramplab.metrics import (
    EvalReport,
    benchmark_sweep,
    cvd_discriminability,
    discriminability,
    evaluate,
)

# frozen golden for viridis sampled at n=25, deutan 1.0 scoring; the
# independent re-derivation below guards the freeze
VIRIDIS_25_GOLDEN = {
    "uniformity": 0.15081375467197838,
    "smoothness": 0.010457893842549009,
    "discriminability": 40.32733067471317,
    "cvd_discriminability": 35.13453069898475,
    "retention": 0.8712337293629873,
}


def brute_force_discriminability(points):
    """Independent oracle: plain loops over scikit-image's CIEDE2000."""
    from skimage.color import deltaE_ciede2000

    points = np.asarray(points)
    n = len(points)
    total = 0.0
    count = 0
    for i in range(n):
        for j in range(i + 1, n):
            total += float(deltaE_ciede2000(points[i], points[j]))
            count += 1
    return total / count


class TestDiscriminability:
    def test_identical_map_zero(self):
        assert discriminability([[50, 0, 0]] * 6) == 0.0

    def test_two_point_map_is_pair_distance(self):
        from ramplab.colorspace import delta_e_2000

        pts = [[20.0, 5.0, -10.0], [80.0, -15.0, 30.0]]
        assert discriminability(pts) == pytest.approx(float(delta_e_2000(pts[0], pts[1])))

    def test_matches_brute_force_oracle(self, random_in_gamut_lab):
        pts = random_in_gamut_lab[:12]
        assert discriminability(pts) == pytest.approx(brute_force_discriminability(pts), abs=1e-4)

    def test_permutation_invariant(self, random_in_gamut_lab, rng):
        pts = np.array(random_in_gamut_lab[:10])
        shuffled = pts[rng.permutation(10)]
        assert discriminability(shuffled) == pytest.approx(discriminability(pts), abs=1e-9)

    def test_reversal_invariant(self, random_in_gamut_lab):
        pts = np.array(random_in_gamut_lab[:10])
        assert discriminability(pts[::-1]) == pytest.approx(discriminability(pts), abs=1e-9)

    def test_rainbow_most_discriminable_benchmark(self):
        scores = {
            name: discriminability(benchmark(name).lab_points(31))
            for name in benchmark_names()
        }
        assert max(scores, key=scores.get) == "d3-rainbow"


class TestCvdDiscriminability:
    def test_identity_model_equals_plain(self, random_in_gamut_lab):
        pts = random_in_gamut_lab[:10]
        assert cvd_discriminability(pts, CvdModel.none()) == pytest.approx(
            discriminability(pts), abs=1e-6
        )

    def test_equals_discriminability_of_simulated(self, random_in_gamut_lab):
        pts = random_in_gamut_lab[:10]
        model = CvdModel("deutan", 1.0)
        assert cvd_discriminability(pts, model) == pytest.approx(
            discriminability(simulate(pts, model)), abs=1e-12
        )


class TestEvaluate:
    def test_retention_identity_exactly_one(self, random_in_gamut_lab):
        rep = evaluate(random_in_gamut_lab[:10], CvdModel.none())
        assert rep.retention == pytest.approx(1.0, abs=1e-6)

    def test_fields_rederivable(self, random_in_gamut_lab):
        from ramplab.cost import curvature, uniformity_cost

        pts = random_in_gamut_lab[:15]
        model = CvdModel()
        rep = evaluate(pts, model)
        assert rep.uniformity == uniformity_cost(pts)
        assert rep.smoothness == curvature(pts)
        assert rep.discriminability == discriminability(pts)
        assert rep.cvd_discriminability == cvd_discriminability(pts, model)
        assert rep.retention == rep.cvd_discriminability / rep.discriminability

    def test_neutral_ramp(self):
        from ramplab.colorspace import srgb_to_lab

        ramp = srgb_to_lab(np.tile(np.linspace(0.05, 0.95, 9)[:, None], (1, 3)))
        rep = evaluate(ramp)
        assert rep.smoothness == pytest.approx(0.0, abs=1e-6)
        assert rep.retention == pytest.approx(1.0, abs=0.02)

    def test_viridis_golden(self):
        rep = evaluate(benchmark("viridis").lab_points(25), CvdModel())
        for key, expected in VIRIDIS_25_GOLDEN.items():
            assert getattr(rep, key) == pytest.approx(expected, rel=1e-9)

    def test_viridis_golden_against_oracle(self):
        pts = benchmark("viridis").lab_points(25)
        assert VIRIDIS_25_GOLDEN["discriminability"] == pytest.approx(
            brute_force_discriminability(pts), abs=1e-4
        )


class TestBenchmarks:
    def test_all_eight_present(self):
        assert benchmark_names() == sorted(
            ["blues", "viridis", "plasma", "red-grey", "red-blue", "cool-warm",
             "spectral", "d3-rainbow"]
        )

    def test_families(self):
        fam = {name: benchmark(name).family for name in benchmark_names()}
        assert fam["blues"] == fam["viridis"] == fam["plasma"] == "sequential"
        assert fam["red-grey"] == fam["red-blue"] == fam["cool-warm"] == "diverging"
        assert fam["spectral"] == fam["d3-rainbow"] == "rainbow"

    def test_stops_decode_in_range(self):
        for name in benchmark_names():
            stops = benchmark(name).stops
            assert stops.min() >= 0.0 and stops.max() <= 1.0

    def test_default_sampling_counts(self):
        assert benchmark("blues").lab_points().shape == (25, 3)
        assert benchmark("red-blue").lab_points().shape == (31, 3)
        assert benchmark("spectral").lab_points().shape == (31, 3)

    def test_scores_stable_across_calls(self):
        a = evaluate(benchmark("plasma").lab_points(25))
        b = evaluate(benchmark("plasma").lab_points(25))
        assert a == b

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            benchmark("turbo")


class TestSweep:
    def test_count_one_matches_single_report(self):
        sweep = benchmark_sweep(1, "sequential", seed=42, iter_count=150)
        assert len(sweep.reports) == 1
        assert sweep.median("uniformity") == sweep.reports[0].uniformity

    def test_csv_schema(self):
        sweep = benchmark_sweep(2, "diverging", cvd=True, seed=1, iter_count=100)
        lines = sweep.to_csv().splitlines()
        assert lines[0] == (
            "seed,family,colorfulness,cvd,uniformity,smoothness,"
            "discriminability,cvd_discriminability,retention"
        )
        assert len(lines) == 3
        assert lines[1].split(",")[1] == "diverging"
        assert lines[1].split(",")[3] == "on"

    def test_luminance_ranges_randomized_but_seeded(self):
        a = benchmark_sweep(2, "sequential", seed=5, iter_count=60)
        b = benchmark_sweep(2, "sequential", seed=5, iter_count=60)
        assert a.seeds == b.seeds
        assert [r.uniformity for r in a.reports] == [r.uniformity for r in b.reports]

    def test_benchmark_scores_match_family(self):
        sweep = benchmark_sweep(1, "sequential", seed=0, iter_count=60)
        assert set(sweep.benchmark_reports) == {"blues", "viridis", "plasma"}
        sweep = benchmark_sweep(1, "diverging", seed=0, iter_count=60)
        assert set(sweep.benchmark_reports) == {
            "red-grey", "red-blue", "cool-warm", "spectral", "d3-rainbow"
        }

    def test_histogram_payload(self):
        sweep = benchmark_sweep(3, "sequential", seed=9, iter_count=60)
        hist = sweep.histogram("uniformity", bins=4)
        assert sum(hist["counts"]) == 3
        assert len(hist["edges"]) == 5

    def test_invalid_args(self):
        with pytest.raises(ValueError):
            benchmark_sweep(0, "sequential")
        with pytest.raises(ValueError):
            benchmark_sweep(1, "rainbow")
