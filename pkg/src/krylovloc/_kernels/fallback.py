"""Pure-numpy implementations of the hot kernels."""
import numpy as np


def apply_couplings(diag, idx_a, idx_b, amp, v):
    """Apply diag + Hermitian coupling list to a vector.

    Each coupling (a, b, amp) contributes amp*v[b] to y[a] and amp*v[a]
    to y[b]; amplitudes are real, the vector may be complex.
    """
    out = diag * v
    if len(idx_a):
        np.add.at(out, idx_a, amp * v[idx_b])
        np.add.at(out, idx_b, amp * v[idx_a])
    return out


def sturm_counts(d, e2, xs):
    """Number of eigenvalues strictly below each probe in ``xs``.

    Runs the determinant-ratio recursion q_k = (d_k - x) - e2_{k-1}/q_{k-1}
    (the rescaled three-term determinant recursion); the count is the
    number of negative q_k.  ``e2`` holds the squared off-diagonals.
    """
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    n = len(d)
    pivmin = _pivmin(e2)
    q = np.full(xs.shape, d[0]) - xs
    small = np.abs(q) < pivmin
    q[small] = -pivmin
    counts = (q < 0).astype(np.int64)
    for k in range(1, n):
        q = (d[k] - xs) - e2[k - 1] / q
        small = np.abs(q) < pivmin
        q[small] = -pivmin
        counts += q < 0
    return counts


def tridiag_eigenvalues(d, e, rtol=1e-12):
    """All eigenvalues of an irreducible symmetric tridiagonal matrix.

    Bisection on the Sturm count, vectorized over the n eigenvalue
    targets; accuracy rtol * spectral width.
    """
    d = np.asarray(d, dtype=float)
    e = np.asarray(e, dtype=float)
    n = len(d)
    if n == 1:
        return d.copy()
    e2 = e * e
    radius = np.zeros(n)
    radius[:-1] += np.abs(e)
    radius[1:] += np.abs(e)
    lo = float(np.min(d - radius))
    hi = float(np.max(d + radius))
    width = max(hi - lo, 1e-300)
    tol = max(rtol * width, 1e-300)
    low = np.full(n, lo)
    high = np.full(n, hi)
    targets = np.arange(1, n + 1)  # lambda_i < x  <=>  count(x) >= i+1
    n_iter = int(np.ceil(np.log2(width / tol))) + 2
    for _ in range(min(n_iter, 128)):
        mid = 0.5 * (low + high)
        counts = sturm_counts(d, e2, mid)
        above = counts >= targets
        high[above] = mid[above]
        low[~above] = mid[~above]
        if np.max(high - low) <= tol:
            break
    return 0.5 * (low + high)


def _pivmin(e2):
    m = float(np.max(e2)) if len(e2) else 1.0
    return max(m * np.finfo(float).eps ** 2, np.finfo(float).tiny)
