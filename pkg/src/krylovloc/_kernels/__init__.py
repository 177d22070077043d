"""Numerical kernels with a compiled core and a pure-numpy fallback.

The Cython extension is preferred when it imported cleanly; set the
environment variable ``KRYLOVLOC_FORCE_FALLBACK=1`` to force the numpy
implementation (used by the kernel benchmark and the fallback test lane).

Both backends expose the same three functions:

``apply_couplings(diag, idx_a, idx_b, amp, v)``
    y = H v for the Hermitian operator given by a real diagonal plus a
    one-sided coupling list (each pair stored once, applied both ways).
``sturm_counts(d, e2, xs)``
    Number of eigenvalues below each probe value, from the determinant
    ratio recursion of the tridiagonal characteristic polynomial.
``tridiag_eigenvalues(d, e, rtol)``
    All eigenvalues of an irreducible symmetric tridiagonal matrix by
    bisection on the Sturm count.
"""
import os

from . import fallback

_impl = fallback
_backend = "fallback"

if not os.environ.get("KRYLOVLOC_FORCE_FALLBACK"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        _backend = "compiled"
    except ImportError:
        pass


def backend_name() -> str:
    return _backend


apply_couplings = _impl.apply_couplings
sturm_counts = _impl.sturm_counts
tridiag_eigenvalues = _impl.tridiag_eigenvalues
