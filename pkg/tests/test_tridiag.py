"""Sturm counting, bisection, and inverse iteration primitives."""

import numpy as np
import pytest

from montspec.tridiag import (
    inverse_iteration,
    lowest_eigenvalues,
    shifted_solve,
    sturm_bisect_eigenvalues,
    sturm_count_below,
)


def _random_tridiag(rng, n):
    diag = rng.uniform(-2.0, 6.0, size=n)
    offdiag = rng.uniform(-1.5, 1.5, size=n - 1)
    return diag, offdiag


def test_sturm_count_on_diagonal_matrix():
    diag = np.array([1.0, 2.0, 3.0])
    off = np.zeros(2)
    assert sturm_count_below(diag, off, 0.5) == 0
    assert sturm_count_below(diag, off, 1.5) == 1
    assert sturm_count_below(diag, off, 10.0) == 3


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_sturm_count_matches_dense_spectrum(seed):
    rng = np.random.default_rng(seed)
    diag, offdiag = _random_tridiag(rng, 30)
    full = np.diag(diag) + np.diag(offdiag, 1) + np.diag(offdiag, -1)
    eigs = np.linalg.eigvalsh(full)
    for x in rng.uniform(-3.0, 7.0, size=10):
        assert sturm_count_below(diag, offdiag, x) == int(np.sum(eigs < x))


@pytest.mark.parametrize("seed", [10, 11, 12])
def test_bisection_reference_matches_lapack(seed):
    rng = np.random.default_rng(seed)
    diag, offdiag = _random_tridiag(rng, 40)
    ours = sturm_bisect_eigenvalues(diag, offdiag, 4)
    lapack = lowest_eigenvalues(diag, offdiag, 4)
    assert ours == pytest.approx(lapack, rel=1e-11, abs=1e-11)


def test_lowest_eigenvalues_examples():
    assert lowest_eigenvalues([1.0, 2.0, 3.0], [0.0, 0.0], 2) == pytest.approx([1.0, 2.0])
    # [[2, -1], [-1, 2]] has eigenvalues 1 and 3
    assert lowest_eigenvalues([2.0, 2.0], [-1.0], 2) == pytest.approx([1.0, 3.0])


def test_lowest_eigenvalues_count_validation():
    with pytest.raises(ValueError):
        lowest_eigenvalues([1.0, 2.0], [0.1], 3)
    with pytest.raises(ValueError):
        lowest_eigenvalues([1.0, 2.0], [0.1], 0)


def test_inverse_iteration_diagonal():
    v = inverse_iteration(np.array([1.0, 5.0, 9.0]), np.zeros(2), 1.0)
    assert v == pytest.approx([1.0, 0.0, 0.0], abs=1e-10)


def test_inverse_iteration_interior_eigenvalue():
    rng = np.random.default_rng(42)
    diag, offdiag = _random_tridiag(rng, 50)
    lam = lowest_eigenvalues(diag, offdiag, 3)
    v = inverse_iteration(diag, offdiag, float(lam[2]))
    full = np.diag(diag) + np.diag(offdiag, 1) + np.diag(offdiag, -1)
    assert np.linalg.norm(full @ v - lam[2] * v) < 1e-9
    assert np.linalg.norm(v) == pytest.approx(1.0, abs=1e-12)
    assert np.sum(v) > 0.0


def test_shifted_solve_residual():
    rng = np.random.default_rng(5)
    diag, offdiag = _random_tridiag(rng, 25)
    rhs = rng.normal(size=25)
    x = shifted_solve(diag, offdiag, 0.37, rhs)
    full = np.diag(diag) + np.diag(offdiag, 1) + np.diag(offdiag, -1) - 0.37 * np.eye(25)
    assert np.linalg.norm(full @ x - rhs) < 1e-10 * max(1.0, np.linalg.norm(x))
