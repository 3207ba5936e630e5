"""DiskRationalBezier: evaluation, de Casteljau, subdivision, elevation,
exact reduction, and the curve properties (hull, affine invariance,
non-uniform convergence)."""

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from conftest import random_curve
from diskbezier import (
    Disk,
    DiskRationalBezier,
    bernstein,
    rational_basis,
)


def example_curve() -> DiskRationalBezier:
    """Degree-5 test curve with mixed weights and radii."""
    centers = [(96, 141), (104, 271), (178, 363), (331, 378), (486, 285), (486, 140)]
    radii = [1, 10, 15, 15, 10, 6]
    weights = [2, 1, 1, 2, 1, 2]
    return DiskRationalBezier.from_arrays(centers, radii, weights)


class TestConstruction:
    def test_from_disks(self):
        c = DiskRationalBezier([Disk(0, 0, 1), Disk(1, 0, 2)], [1.0, 2.0])
        assert c.degree == 1
        assert c.disks == (Disk(0, 0, 1), Disk(1, 0, 2))

    def test_arrays_read_only(self):
        c = example_curve()
        for arr in (c.centers, c.radii, c.weights):
            with pytest.raises(ValueError):
                arr[0] = 0

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="at least one"):
            DiskRationalBezier([], [])

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError, match="weights"):
            DiskRationalBezier([Disk(0, 0, 0)], [1.0, 2.0])

    def test_nonpositive_weight_named(self):
        with pytest.raises(ValueError, match=r"weights\[1\]"):
            DiskRationalBezier.from_arrays([(0, 0), (1, 1)], [0, 0], [1.0, 0.0])


class TestEvaluate:
    def test_end_interpolation_exact(self):
        c = example_curve()
        assert c.evaluate(0.0).center == (96.0, 141.0)
        assert c.evaluate(0.0).radius == 1.0
        assert c.evaluate(1.0).center == (486.0, 140.0)
        assert c.evaluate(1.0).radius == 6.0

    def test_degree_one_midpoint(self):
        c = DiskRationalBezier.from_arrays([(0, 0), (2, 0)], [0, 2], [1, 1])
        point = c.evaluate(0.5)
        assert point.center == pytest.approx((1.0, 0.0), abs=1e-15)
        assert point.radius == pytest.approx(1.0, abs=1e-15)

    def test_matches_basis_sum(self):
        c = example_curve()
        for t in (0.1, 0.37, 0.5, 0.82):
            point = c.evaluate(t)
            center = sum(
                rational_basis(c.weights, i, t) * c.centers[i]
                for i in range(c.degree + 1)
            )
            radius = sum(
                bernstein(c.degree, i, t) * c.radii[i]
                for i in range(c.degree + 1)
            )
            assert point.center == pytest.approx(tuple(center), abs=1e-10)
            assert point.radius == pytest.approx(radius, abs=1e-12)

    def test_domain_errors(self):
        c = example_curve()
        with pytest.raises(ValueError):
            c.evaluate(-0.01)
        with pytest.raises(ValueError):
            c.evaluate(1.01)
        with pytest.raises(ValueError):
            c.sample(np.array([0.0, 1.2]))

    def test_as_disk(self):
        point = example_curve().evaluate(0.25)
        disk = point.as_disk()
        assert disk.center == point.center
        assert disk.r == point.radius


class TestDeCasteljau:
    def test_endpoints(self):
        c = example_curve()
        assert c.de_casteljau(0.0).point.center == (96.0, 141.0)
        assert c.de_casteljau(1.0).point.center == (486.0, 140.0)

    def test_agrees_with_evaluate(self):
        rng = np.random.default_rng(42)
        for _ in range(300):
            degree = int(rng.integers(1, 9))
            c = random_curve(rng, degree)
            t = float(rng.uniform(0, 1))
            a = c.evaluate(t)
            b = c.de_casteljau(t).point
            assert np.hypot(a.center[0] - b.center[0], a.center[1] - b.center[1]) < 1e-10
            assert abs(a.radius - b.radius) < 1e-10

    def test_triangle_shape(self):
        c = example_curve()
        tri = c.de_casteljau(0.3)
        assert len(tri.centers) == c.degree + 1
        assert tri.centers[0].shape == (c.degree + 1, 2)
        assert tri.centers[-1].shape == (1, 2)


class TestSubdivision:
    def test_shared_apex(self):
        c = example_curve()
        left, right = c.subdivide(0.4)
        apex = c.evaluate(0.4)
        assert left.evaluate(1.0).center == pytest.approx(apex.center, abs=1e-9)
        assert right.evaluate(0.0).center == pytest.approx(apex.center, abs=1e-9)
        assert left.evaluate(0.0).center == c.evaluate(0.0).center

    def test_concatenated_sampling(self):
        c = example_curve()
        left, right = c.subdivide(0.5)
        ts = np.linspace(0, 1, 51)
        whole_c, whole_r = c.sample(ts)
        for t, center, radius in zip(ts, whole_c, whole_r):
            if t <= 0.5:
                got = left.evaluate(t / 0.5)
            else:
                got = right.evaluate((t - 0.5) / 0.5)
            assert np.hypot(got.center[0] - center[0], got.center[1] - center[1]) < 1e-9
            assert abs(got.radius - radius) < 1e-9

    def test_random_cuts(self):
        rng = np.random.default_rng(8)
        for _ in range(25):
            c = random_curve(rng, int(rng.integers(2, 7)))
            cut = float(rng.uniform(0.1, 0.9))
            left, right = c.subdivide(cut)
            for t in rng.uniform(0, 1, size=8):
                want = c.evaluate(float(t))
                if t <= cut:
                    got = left.evaluate(float(t / cut))
                else:
                    got = right.evaluate(float((t - cut) / (1 - cut)))
                assert np.hypot(
                    got.center[0] - want.center[0], got.center[1] - want.center[1]
                ) < 1e-9
                assert abs(got.radius - want.radius) < 1e-9

    def test_cut_domain_errors(self):
        c = example_curve()
        for cut in (0.0, 1.0, -0.5, 2.0):
            with pytest.raises(ValueError):
                c.subdivide(cut)


class TestElevation:
    def test_hand_example(self):
        c = DiskRationalBezier.from_arrays([(0, 0), (1, 0)], [0, 2], [1, 1])
        up = c.elevate(1)
        assert np.allclose(up.weights, [1, 1, 1])
        assert np.allclose(up.centers, [(0, 0), (0.5, 0), (1, 0)])
        assert np.allclose(up.radii, [0, 1, 2])

    def test_sampling_equivalence(self):
        rng = np.random.default_rng(77)
        ts = np.linspace(0, 1, 101)
        for _ in range(20):
            c = random_curve(rng, int(rng.integers(1, 7)))
            up = c.elevate(int(rng.integers(1, 4)))
            c_centers, c_radii = c.sample(ts)
            u_centers, u_radii = up.sample(ts)
            assert np.abs(u_centers - c_centers).max() < 1e-10
            assert np.abs(u_radii - c_radii).max() < 1e-10

    def test_composition(self):
        rng = np.random.default_rng(13)
        c = random_curve(rng, 3)
        double = c.elevate(2)
        stepwise = c.elevate(1).elevate(1)
        assert np.abs(double.centers - stepwise.centers).max() < 1e-12
        assert np.abs(double.radii - stepwise.radii).max() < 1e-12
        assert np.abs(double.weights - stepwise.weights).max() < 1e-12

    def test_bad_step_rejected(self):
        with pytest.raises(ValueError):
            example_curve().elevate(0)


class TestExactReduce:
    def test_round_trip(self):
        rng = np.random.default_rng(21)
        for _ in range(20):
            degree = int(rng.integers(1, 6))
            c = random_curve(rng, degree)
            s = int(rng.integers(1, 4))
            back = c.elevate(s).try_exact_reduce(degree)
            assert back is not None
            assert np.abs(back.radii - c.radii).max() < 1e-9
            assert np.abs(back.centers - c.centers).max() < 1e-9
            # weights only defined up to a common positive scale
            ratio = back.weights / c.weights
            assert ratio.max() - ratio.min() < 1e-9

    def test_generic_curve_not_reducible(self):
        assert example_curve().try_exact_reduce(4) is None

    def test_collinear_degree_two(self):
        base = DiskRationalBezier.from_arrays([(0, 0), (2, 2)], [0, 2], [1, 1])
        lifted = base.elevate(1)
        assert np.allclose(lifted.centers, [(0, 0), (1, 1), (2, 2)])
        back = lifted.try_exact_reduce(1)
        assert back is not None
        assert np.allclose(back.centers, [(0, 0), (2, 2)])
        assert np.allclose(back.radii, [0, 2])

    def test_bad_target_rejected(self):
        c = example_curve()
        with pytest.raises(ValueError):
            c.try_exact_reduce(0)
        with pytest.raises(ValueError):
            c.try_exact_reduce(5)


class TestCurveProperties:
    def test_convex_hull_certificate(self):
        # sampled centers are convex combinations of control centers with
        # the rational basis as certificate coefficients
        rng = np.random.default_rng(31)
        for _ in range(10):
            c = random_curve(rng, int(rng.integers(2, 7)))
            for t in rng.uniform(0, 1, size=20):
                point = c.evaluate(float(t))
                alphas = np.array([
                    rational_basis(c.weights, i, float(t))
                    for i in range(c.degree + 1)
                ])
                assert np.all(alphas >= -1e-14)
                assert abs(alphas.sum() - 1.0) < 1e-12
                combo = alphas @ c.centers
                assert np.allclose(combo, point.center, atol=1e-9)

    def test_sampled_disk_inside_hull_of_control_disks(self):
        # cross-check with an independent hull: center must lie inside the
        # hull of control centers grown by the blended radius
        c = example_curve()
        hull = ConvexHull(c.centers)
        eqs = hull.equations  # rows [a, b, offset] with a*x+b*y+offset <= 0
        ts = np.linspace(0, 1, 200)
        centers, radii = c.sample(ts)
        blended = np.array([
            sum(rational_basis(c.weights, i, t) * c.radii[i]
                for i in range(c.degree + 1))
            for t in ts
        ])
        for center, grow in zip(centers, blended):
            signed = eqs[:, :2] @ center + eqs[:, 2]
            assert np.all(signed <= grow + 1e-9)

    def test_affine_invariance(self):
        rng = np.random.default_rng(44)
        ts = np.linspace(0, 1, 33)
        for _ in range(10):
            c = random_curve(rng, int(rng.integers(1, 6)))
            matrix = rng.normal(size=(2, 2))
            shift = rng.normal(size=2)
            mapped = DiskRationalBezier.from_arrays(
                c.centers @ matrix.T + shift, c.radii, c.weights
            )
            base, _ = c.sample(ts)
            got, _ = mapped.sample(ts)
            assert np.abs(got - (base @ matrix.T + shift)).max() < 1e-9

    def test_non_uniform_convergence(self):
        # blowing up one interior weight pulls the middle of the curve to
        # that control point (unit-scale coordinates)
        rng = np.random.default_rng(60)
        centers = rng.uniform(-1, 1, size=(6, 2))
        radii = rng.uniform(0, 1, size=6)
        for i in (2, 3):
            weights = np.ones(6)
            weights[i] = 1e6
            heavy = DiskRationalBezier.from_arrays(centers, radii, weights)
            for t in np.linspace(0.3, 0.7, 21):
                point = heavy.evaluate(float(t))
                dist = np.hypot(
                    point.center[0] - centers[i, 0],
                    point.center[1] - centers[i, 1],
                )
                assert dist < 1e-3

    def test_repr_mentions_degree(self):
        assert "degree=5" in repr(example_curve())
