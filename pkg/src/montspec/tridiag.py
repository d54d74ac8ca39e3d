"""Symmetric tridiagonal eigenvalue primitives.

Production eigenvalue extraction goes through LAPACK's Sturm-count
bisection driver (stebz).  A plain-Python Sturm counter and bisection
solver are kept alongside it as an independent reference used by the
test suite on small matrices.
"""

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal, solve_banded

from .errors import SolverFailure

_PIVOT_FLOOR = 1e-300


def sturm_count_below(diag, offdiag, x: float) -> int:
    """Number of eigenvalues of the tridiagonal matrix strictly below x.

    Counts negative pivots of the LDL^T factorization of (A - x I).
    Reference implementation; O(n) per call in pure Python.
    """
    diag = np.asarray(diag, dtype=float)
    offdiag = np.asarray(offdiag, dtype=float)
    count = 0
    d = diag[0] - x
    if d == 0.0:
        d = -_PIVOT_FLOOR
    if d < 0.0:
        count += 1
    for i in range(1, len(diag)):
        d = (diag[i] - x) - offdiag[i - 1] ** 2 / d
        if d == 0.0:
            d = -_PIVOT_FLOOR
        if d < 0.0:
            count += 1
    return count


def sturm_bisect_eigenvalues(diag, offdiag, count: int, rel_width: float = 1e-13):
    """Smallest `count` eigenvalues by explicit Sturm bisection.

    Each eigenvalue is bracketed to relative width `rel_width` starting
    from the Gershgorin enclosure.  Slow reference path for tests.
    """
    diag = np.asarray(diag, dtype=float)
    offdiag = np.asarray(offdiag, dtype=float)
    n = len(diag)
    if count < 1 or count > n:
        raise ValueError(f"count must be in [1, {n}], got {count}")
    radius = np.zeros(n)
    if n > 1:
        radius[:-1] += np.abs(offdiag)
        radius[1:] += np.abs(offdiag)
    lo = float(np.min(diag - radius))
    hi = float(np.max(diag + radius))
    eigs = []
    for j in range(1, count + 1):
        a, b = lo, hi
        while (b - a) > rel_width * max(1.0, abs(a), abs(b)):
            mid = 0.5 * (a + b)
            if sturm_count_below(diag, offdiag, mid) >= j:
                b = mid
            else:
                a = mid
        eigs.append(0.5 * (a + b))
    return np.array(eigs)


def lowest_eigenvalues(diag, offdiag, count: int):
    """Smallest `count` eigenvalues of a symmetric tridiagonal matrix.

    Backed by LAPACK stebz (Sturm counting plus bisection, machine-tight
    brackets, deterministic).  Eigenvalues come back sorted ascending.
    """
    diag = np.asarray(diag, dtype=float)
    offdiag = np.asarray(offdiag, dtype=float)
    n = len(diag)
    if count < 1 or count > n:
        raise ValueError(f"count must be in [1, {n}], got {count}")
    if n == 1:
        return diag.copy()
    # tol must be a tiny positive: at exactly 0 LAPACK substitutes
    # ulp * ||T||, which is useless when barrier samples push ||T|| to
    # 1e18; a tiny abstol switches it to the per-eigenvalue relative
    # criterion (machine-tight brackets around each eigenvalue).
    vals = eigvalsh_tridiagonal(
        diag,
        offdiag,
        select="i",
        select_range=(0, count - 1),
        lapack_driver="stebz",
        tol=1e-300,
        check_finite=False,
    )
    return np.sort(vals)


def _tridiag_matvec(diag, offdiag, v):
    out = diag * v
    out[:-1] += offdiag * v[1:]
    out[1:] += offdiag * v[:-1]
    return out


def inverse_iteration(diag, offdiag, eigenvalue: float, max_iter: int = 50):
    """Eigenvector for a converged eigenvalue via shifted inverse iteration.

    The shift is offset from the eigenvalue by 1e-12 relative so the
    factorization stays regular.  Convergence is declared on the residual
    ||A v - eigenvalue v||, measured against the rounding floor of the
    matrix-vector product; an iterate-stabilization check covers exactly
    representable cases.  Returns a unit 2-norm vector with positive sign
    convention (sum of entries > 0).
    """
    diag = np.asarray(diag, dtype=float)
    offdiag = np.asarray(offdiag, dtype=float)
    n = len(diag)
    if n == 1:
        return np.ones(1)
    shift = eigenvalue + 1e-12 * max(1.0, abs(eigenvalue))
    ab = np.zeros((3, n))
    ab[0, 1:] = offdiag
    ab[1, :] = diag - shift
    ab[2, :-1] = offdiag
    # Rounding floor of the residual: driven by the kinetic scale of the
    # matrix, not by saturated potential entries (the eigenvector is zero
    # there, so they contribute nothing to a converged residual).
    scale = 4.0 * float(np.max(np.abs(offdiag))) + abs(eigenvalue) + 1.0
    floor = 64.0 * np.finfo(float).eps * scale
    v = np.full(n, 1.0 / np.sqrt(n))
    residual = np.inf
    for _ in range(max_iter):
        w = solve_banded((1, 1), ab, v, check_finite=False)
        w /= np.linalg.norm(w)
        if np.dot(w, v) < 0.0:
            w = -w
        delta = np.linalg.norm(w - v)
        v = w
        residual = np.linalg.norm(_tridiag_matvec(diag, offdiag, v) - eigenvalue * v)
        if residual <= floor or delta < 1e-12:
            break
    else:
        raise SolverFailure(
            f"inverse iteration did not converge in {max_iter} iterations",
            residual=float(residual),
        )
    # Two polish sweeps: the bulk of the vector is already at its noise
    # floor, but far-tail entries (where the true eigenfunction sits below
    # rounding) still carry start-vector imprint; each extra sweep damps
    # them by the local barrier height.
    for _ in range(2):
        w = solve_banded((1, 1), ab, v, check_finite=False)
        w /= np.linalg.norm(w)
        if np.dot(w, v) < 0.0:
            w = -w
        v = w
    if np.sum(v) < 0.0:
        v = -v
    return v


def shifted_solve(diag, offdiag, shift: float, rhs):
    """Solve (A - shift I) x = rhs for a symmetric tridiagonal A."""
    diag = np.asarray(diag, dtype=float)
    offdiag = np.asarray(offdiag, dtype=float)
    n = len(diag)
    ab = np.zeros((3, n))
    ab[0, 1:] = offdiag
    ab[1, :] = diag - shift
    ab[2, :-1] = offdiag
    return solve_banded((1, 1), ab, rhs, check_finite=False)
