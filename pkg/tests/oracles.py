"""Reference computations that share no code with the package under test."""
import itertools

import numpy as np


def corners(lo, hi):
    return np.array(list(itertools.product(*zip(lo, hi))), dtype=float)


def max_distance_brute(alo, ahi, blo, bhi):
    """Largest corner-to-corner distance (the max of a convex function sits at vertices)."""
    ca, cb = corners(alo, ahi), corners(blo, bhi)
    return float(np.sqrt(((ca[:, None, :] - cb[None, :, :]) ** 2).sum(-1)).max())


def min_distance_clamp(alo, ahi, blo, bhi, rng, starts=10, iters=100):
    """Minimise |x - y| over the two boxes by alternating projections."""
    alo, ahi, blo, bhi = map(np.asarray, (alo, ahi, blo, bhi))
    best = np.inf
    for _ in range(starts):
        x = rng.uniform(alo, ahi) if np.all(ahi > alo) else alo.copy()
        y = rng.uniform(blo, bhi) if np.all(bhi > blo) else blo.copy()
        for _ in range(iters):
            x_new = np.clip(y, alo, ahi)
            y_new = np.clip(x_new, blo, bhi)
            if np.array_equal(x_new, x) and np.array_equal(y_new, y):
                break
            x, y = x_new, y_new
        best = min(best, float(np.linalg.norm(x - y)))
    return best


def euclidean(points):
    p = np.asarray(points, dtype=float)
    return np.sqrt(((p[:, None, :] - p[None, :, :]) ** 2).sum(-1))


def cmdscale_lapack(d, q):
    """Classical scaling via the centering projector and numpy.linalg.eigh."""
    d = np.asarray(d, dtype=float)
    n = len(d)
    h = np.eye(n) - np.ones((n, n)) / n
    b = -0.5 * h @ (d ** 2) @ h
    w, v = np.linalg.eigh(b)
    order = np.argsort(w)[::-1]
    w, v = w[order], v[:, order]
    k = min(q, int(np.sum(w > 1e-10 * w[0])))
    x = np.zeros((n, q))
    x[:, :k] = v[:, :k] * np.sqrt(w[:k])
    return x, w


def pca_lapack(x, q):
    """Population-covariance PCA scores and eigenvalues via SVD."""
    x = np.asarray(x, dtype=float)
    xc = x - x.mean(axis=0)
    u, s, vt = np.linalg.svd(xc, full_matrices=False)
    return xc @ vt[:q].T, s ** 2 / len(x)


def align_columns(a, b):
    """Flip columns of b to best match a (sign is not identifiable)."""
    b = np.array(b, dtype=float)
    for r in range(b.shape[1]):
        if np.dot(a[:, r], b[:, r]) < 0:
            b[:, r] = -b[:, r]
    return b


def random_boxes(rng, m, n, spread=10.0, max_half=1.0):
    c = rng.uniform(-spread, spread, size=(m, n))
    h = rng.uniform(0, max_half, size=(m, n))
    return c - h, c + h
