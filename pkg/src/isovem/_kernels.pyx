# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: half-plane clipping for Voronoi cells and scaled
monomial evaluation.

The pure-python fallback (`_kernels_py`) mirrors the arithmetic of this module
operation for operation, so both backends produce bit-identical results.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

DEF MAX_VERTS = 1024


def clip_cell(double[:, ::1] poly_init, double[:, ::1] seeds, Py_ssize_t i,
              long long[::1] cand):
    """Clip a starting polygon by the bisector half-planes between seed ``i``
    and the candidate seeds (sorted by increasing distance).

    Returns ``(polygon, exhausted)`` where ``exhausted`` is True when every
    candidate was consumed without reaching the geometric stopping criterion
    (the caller must then retry with the full candidate list).
    """
    cdef double bufa_x[MAX_VERTS]
    cdef double bufa_y[MAX_VERTS]
    cdef double bufb_x[MAX_VERTS]
    cdef double bufb_y[MAX_VERTS]
    cdef double* cur_x = bufa_x
    cdef double* cur_y = bufa_y
    cdef double* out_x = bufb_x
    cdef double* out_y = bufb_y
    cdef double* tmp
    cdef Py_ssize_t m = poly_init.shape[0]
    cdef Py_ssize_t ncand = cand.shape[0]
    cdef Py_ssize_t e, jj, j, mo
    cdef double six = seeds[i, 0]
    cdef double siy = seeds[i, 1]
    cdef double rmax2, dx, dy, r2, dij2, nx, ny, c
    cdef double px, py, qx, qy, dp, dq, t
    cdef bint exhausted = True

    for e in range(m):
        cur_x[e] = poly_init[e, 0]
        cur_y[e] = poly_init[e, 1]

    for jj in range(ncand):
        j = <Py_ssize_t> cand[jj]
        rmax2 = 0.0
        for e in range(m):
            dx = cur_x[e] - six
            dy = cur_y[e] - siy
            r2 = dx * dx + dy * dy
            if r2 > rmax2:
                rmax2 = r2
        dx = seeds[j, 0] - six
        dy = seeds[j, 1] - siy
        dij2 = dx * dx + dy * dy
        if dij2 > 4.0 * rmax2:
            exhausted = False
            break
        nx = dx
        ny = dy
        c = nx * (0.5 * (six + seeds[j, 0])) + ny * (0.5 * (siy + seeds[j, 1]))
        # Sutherland-Hodgman against n.x <= c
        mo = 0
        for e in range(m):
            px = cur_x[e]
            py = cur_y[e]
            qx = cur_x[(e + 1) % m]
            qy = cur_y[(e + 1) % m]
            dp = nx * px + ny * py - c
            dq = nx * qx + ny * qy - c
            if dp <= 0.0:
                out_x[mo] = px
                out_y[mo] = py
                mo += 1
                if dq > 0.0:
                    t = dp / (dp - dq)
                    out_x[mo] = px + t * (qx - px)
                    out_y[mo] = py + t * (qy - py)
                    mo += 1
            elif dq <= 0.0:
                t = dp / (dp - dq)
                out_x[mo] = px + t * (qx - px)
                out_y[mo] = py + t * (qy - py)
                mo += 1
            if mo >= MAX_VERTS - 2:
                raise RuntimeError("clip_cell vertex buffer overflow")
        tmp = cur_x
        cur_x = out_x
        out_x = tmp
        tmp = cur_y
        cur_y = out_y
        out_y = tmp
        m = mo
        if m < 3:
            break

    result = np.empty((m, 2), dtype=np.float64)
    cdef double[:, ::1] rv = result
    for e in range(m):
        rv[e, 0] = cur_x[e]
        rv[e, 1] = cur_y[e]
    return result, bool(exhausted)


def monomial_eval(double[:, ::1] pts, double cx, double cy, double h,
                  long long[::1] src, const unsigned char[::1] use_x):
    """Vandermonde of scaled monomials ((x-cx)/h)^a ((y-cy)/h)^b, graded lex."""
    cdef Py_ssize_t npts = pts.shape[0]
    cdef Py_ssize_t nb = src.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] V = np.empty((npts, nb))
    cdef double[:, ::1] v = V
    cdef Py_ssize_t p, k
    cdef double X, Y
    for p in range(npts):
        X = (pts[p, 0] - cx) / h
        Y = (pts[p, 1] - cy) / h
        v[p, 0] = 1.0
        for k in range(1, nb):
            if use_x[k]:
                v[p, k] = v[p, src[k]] * X
            else:
                v[p, k] = v[p, src[k]] * Y
    return V


def monomial_grad(double[:, ::1] pts, double cx, double cy, double h,
                  long long[::1] src, const unsigned char[::1] use_x,
                  long long[::1] ax, long long[::1] ay,
                  long long[::1] srcx, long long[::1] srcy):
    """Values plus first derivatives of the scaled monomial basis."""
    cdef Py_ssize_t npts = pts.shape[0]
    cdef Py_ssize_t nb = src.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] V = np.empty((npts, nb))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] VX = np.zeros((npts, nb))
    cdef cnp.ndarray[cnp.float64_t, ndim=2] VY = np.zeros((npts, nb))
    cdef double[:, ::1] v = V
    cdef double[:, ::1] vx = VX
    cdef double[:, ::1] vy = VY
    cdef Py_ssize_t p, k
    cdef double X, Y
    for p in range(npts):
        X = (pts[p, 0] - cx) / h
        Y = (pts[p, 1] - cy) / h
        v[p, 0] = 1.0
        for k in range(1, nb):
            if use_x[k]:
                v[p, k] = v[p, src[k]] * X
            else:
                v[p, k] = v[p, src[k]] * Y
        for k in range(1, nb):
            if ax[k] > 0:
                vx[p, k] = (ax[k] * v[p, srcx[k]]) / h
            if ay[k] > 0:
                vy[p, k] = (ay[k] * v[p, srcy[k]]) / h
    return V, VX, VY
