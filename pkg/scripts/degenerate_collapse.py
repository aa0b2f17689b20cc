"""Point-valued dissimilarities: INTERSCAL against classical scaling.

Prints, per random configuration, the eigenvalue ratio (expected 2), the
widest interval and the largest midpoint/classical coordinate gap.
"""
import argparse

import numpy as np

from interscal import IntervalDissimMatrix, classical_mds, interscal_embed


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--runs", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"{'m':>3} {'k':>2} {'ratio':>14} {'max width':>10} {'mid gap':>10}")
    for _ in range(args.runs):
        m, k = int(rng.integers(4, 11)), int(rng.integers(1, 4))
        pts = rng.uniform(-1, 1, size=(m, k))
        d = np.sqrt(((pts[:, None] - pts[None]) ** 2).sum(-1))
        e = interscal_embed(IntervalDissimMatrix.from_points(d), k)
        c = classical_mds(d, k)
        ratio = e.eigenvalues[:k] / c.eigenvalues[:k]
        mids = e.midpoints()
        signs = np.sign((mids * c.coords).sum(0))
        gap = np.abs(mids * signs - c.coords).max()
        print(f"{m:>3} {k:>2} {ratio.min():>14.12f} {e.widths().max():>10.1e} {gap:>10.1e}")


if __name__ == "__main__":
    main()
