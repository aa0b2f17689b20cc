"""Independent oracle for the two-object worked example, delta_12 = [1, 3].

Deliberately shares no code with the package: the augmented matrix is typed
out by hand, centering uses the H = I - 11'/n projector, and the eigensolver
is LAPACK (numpy.linalg.eigh).  Output is frozen into tests/data.
"""
import json
import pathlib

import numpy as np

D = np.array([
    [0.0, 0.0, 1.0, 2.0],
    [0.0, 0.0, 2.0, 3.0],
    [1.0, 2.0, 0.0, 0.0],
    [2.0, 3.0, 0.0, 0.0],
])


def main():
    n = len(D)
    H = np.eye(n) - np.ones((n, n)) / n
    B = -0.5 * H @ (D ** 2) @ H
    w, V = np.linalg.eigh(B)
    order = np.argsort(w)[::-1]
    w, V = w[order], V[:, order]
    v = V[:, 0]
    # near-equal magnitudes count as ties; the lowest index wins
    big = np.flatnonzero(np.abs(v) >= np.abs(v).max() * (1 - 1e-9))[0]
    if v[big] < 0:
        v = -v
    x = np.sqrt(w[0]) * v
    obj1 = sorted(x[:2])
    obj2 = sorted(x[2:])
    gap = max(0.0, obj1[0] - obj2[1], obj2[0] - obj1[1])
    span = max(abs(obj1[1] - obj2[0]), abs(obj2[1] - obj1[0]))
    stress = (gap - 1.0) ** 2 + (span - 3.0) ** 2
    out = {
        "eigenvalues": w.tolist(),
        "point_coords": x.tolist(),
        "intervals": [obj1, obj2],
        "min_gap": gap,
        "max_span": span,
        "raw_stress": stress,
    }
    path = pathlib.Path(__file__).resolve().parents[1] / "tests" / "data" / "worked_example_oracle.json"
    path.write_text(json.dumps(out, indent=2) + "\n")
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
