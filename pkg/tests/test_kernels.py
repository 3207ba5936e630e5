"""Parity tests between the compiled and pure numpy kernel backends."""

import os
import subprocess
import sys

import numpy as np

from diskbezier import _kernels, _pykernels, backend


def grids(rng, n):
    # always include the endpoints: those rows must be exact unit vectors
    return np.concatenate([[0.0, 1.0], np.sort(rng.random(200))])


def test_backend_name_is_known():
    assert backend() in ("compiled", "python")
    assert _kernels.backend() == backend()


def test_basis_matrix_parity():
    rng = np.random.default_rng(11)
    for n in range(1, 13):
        ts = grids(rng, n)
        active = _kernels.basis_matrix(n, ts)
        pure = _pykernels.basis_matrix(n, ts)
        assert active.shape == (len(ts), n + 1)
        np.testing.assert_allclose(active, pure, rtol=0.0, atol=1e-14)


def test_rational_matrix_parity():
    rng = np.random.default_rng(12)
    for n in range(1, 13):
        ts = grids(rng, n)
        weights = rng.uniform(0.5, 3.0, n + 1)
        active = _kernels.rational_matrix(weights, ts)
        pure = _pykernels.rational_matrix(weights, ts)
        np.testing.assert_allclose(active, pure, rtol=0.0, atol=1e-14)
        # rational rows are convex weights
        np.testing.assert_allclose(active.sum(axis=1), 1.0, atol=1e-12)


def test_curve_samples_parity():
    rng = np.random.default_rng(13)
    for n in range(1, 11):
        ts = grids(rng, n)
        px, py = rng.uniform(-100.0, 100.0, (2, n + 1))
        radii = rng.uniform(0.0, 5.0, n + 1)
        weights = rng.uniform(0.5, 3.0, n + 1)
        active = _kernels.curve_samples(px, py, radii, weights, ts)
        pure = _pykernels.curve_samples(px, py, radii, weights, ts)
        for a, p in zip(active, pure):
            np.testing.assert_allclose(a, p, rtol=1e-14, atol=1e-13)


def test_endpoint_rows_exact():
    for impl in (_kernels, _pykernels):
        b = impl.basis_matrix(7, np.array([0.0, 1.0]))
        assert (b[0] == np.eye(8)[0]).all()
        assert (b[1] == np.eye(8)[7]).all()


def test_pure_env_override_forces_python_backend():
    env = dict(os.environ, DISKBEZIER_PURE="1")
    proc = subprocess.run(
        [sys.executable, "-c", "import diskbezier; print(diskbezier.backend())"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "python"
