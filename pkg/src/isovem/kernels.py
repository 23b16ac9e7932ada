"""Kernel backend selection: compiled Cython core with pure-python fallback.

``ISOVEM_PURE=1`` forces the fallback. Both backends implement identical
arithmetic; ``BACKEND`` records which one is active.
"""

import os
from functools import lru_cache

import numpy as np

if os.environ.get("ISOVEM_PURE", "").strip().lower() in {"1", "true", "yes"}:
    from isovem import _kernels_py as _impl
    BACKEND = "python"
else:
    try:
        from isovem import _kernels as _impl
        BACKEND = "compiled"
    except ImportError:
        from isovem import _kernels_py as _impl
        BACKEND = "python"


def basis_size(degree):
    """Dimension of the polynomial space P_degree in two variables."""
    return (degree + 1) * (degree + 2) // 2


def multi_indices(degree):
    """Graded lexicographic exponent pairs (a, b), |a+b| <= degree."""
    out = []
    for d in range(degree + 1):
        for b in range(d + 1):
            out.append((d - b, b))
    return np.array(out, dtype=np.int64).reshape(-1, 2)


def monomial_position(a, b):
    """Position of exponent pair (a, b) in the graded lex ordering."""
    d = a + b
    return d * (d + 1) // 2 + b


@lru_cache(maxsize=None)
def _recurrence_tables(degree):
    nb = basis_size(degree)
    src = np.zeros(nb, dtype=np.int64)
    use_x = np.zeros(nb, dtype=np.uint8)
    ax = np.zeros(nb, dtype=np.int64)
    ay = np.zeros(nb, dtype=np.int64)
    srcx = np.zeros(nb, dtype=np.int64)
    srcy = np.zeros(nb, dtype=np.int64)
    for d in range(1, degree + 1):
        for b in range(d + 1):
            a = d - b
            k = monomial_position(a, b)
            if a > 0:
                src[k] = monomial_position(a - 1, b)
                use_x[k] = 1
            else:
                src[k] = monomial_position(0, b - 1)
            ax[k] = a
            ay[k] = b
            if a > 0:
                srcx[k] = monomial_position(a - 1, b)
            if b > 0:
                srcy[k] = monomial_position(a, b - 1)
    return src, use_x, ax, ay, srcx, srcy


def monomial_vander(pts, cx, cy, h, degree):
    """Values of the scaled monomial basis at an (n, 2) point array."""
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    src, use_x, *_ = _recurrence_tables(degree)
    return _impl.monomial_eval(pts, float(cx), float(cy), float(h), src, use_x)


def monomial_vander_grad(pts, cx, cy, h, degree):
    """Values and first derivatives (V, Vx, Vy) of the scaled monomial basis."""
    pts = np.ascontiguousarray(pts, dtype=np.float64)
    src, use_x, ax, ay, srcx, srcy = _recurrence_tables(degree)
    return _impl.monomial_grad(pts, float(cx), float(cy), float(h), src, use_x,
                               ax, ay, srcx, srcy)


def clip_cell(poly_init, seeds, i, cand):
    """Clip ``poly_init`` by seed-i/seed-j bisectors, candidates in distance order."""
    return _impl.clip_cell(
        np.ascontiguousarray(poly_init, dtype=np.float64),
        np.ascontiguousarray(seeds, dtype=np.float64),
        int(i),
        np.ascontiguousarray(cand, dtype=np.int64),
    )
