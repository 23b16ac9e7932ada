"""Pure-python fallback for the compiled kernels.

Mirrors `_kernels.pyx` operation for operation so that both backends return
bit-identical floats. Used when the extension is unavailable or when
``ISOVEM_PURE=1`` is set.
"""

import numpy as np


def clip_cell(poly_init, seeds, i, cand):
    cur = [(poly_init[e, 0], poly_init[e, 1]) for e in range(poly_init.shape[0])]
    six = seeds[i, 0]
    siy = seeds[i, 1]
    exhausted = True
    for jj in range(cand.shape[0]):
        j = int(cand[jj])
        rmax2 = 0.0
        for vx, vy in cur:
            dx = vx - six
            dy = vy - siy
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
        m = len(cur)
        out = []
        for e in range(m):
            px, py = cur[e]
            qx, qy = cur[(e + 1) % m]
            dp = nx * px + ny * py - c
            dq = nx * qx + ny * qy - c
            if dp <= 0.0:
                out.append((px, py))
                if dq > 0.0:
                    t = dp / (dp - dq)
                    out.append((px + t * (qx - px), py + t * (qy - py)))
            elif dq <= 0.0:
                t = dp / (dp - dq)
                out.append((px + t * (qx - px), py + t * (qy - py)))
        cur = out
        if len(cur) < 3:
            break
    return np.array(cur, dtype=np.float64).reshape(len(cur), 2), exhausted


def monomial_eval(pts, cx, cy, h, src, use_x):
    nb = src.shape[0]
    X = (pts[:, 0] - cx) / h
    Y = (pts[:, 1] - cy) / h
    V = np.empty((pts.shape[0], nb))
    V[:, 0] = 1.0
    for k in range(1, nb):
        V[:, k] = V[:, src[k]] * (X if use_x[k] else Y)
    return V


def monomial_grad(pts, cx, cy, h, src, use_x, ax, ay, srcx, srcy):
    V = monomial_eval(pts, cx, cy, h, src, use_x)
    nb = src.shape[0]
    VX = np.zeros_like(V)
    VY = np.zeros_like(V)
    for k in range(1, nb):
        if ax[k] > 0:
            VX[:, k] = (ax[k] * V[:, srcx[k]]) / h
        if ay[k] > 0:
            VY[:, k] = (ay[k] * V[:, srcy[k]]) / h
    return V, VX, VY
