import json
import pathlib
import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st

from interscal import (IntervalDissimMatrix, IntervalEmbedding, IntervalTable, SelfMode, build_augmented,
                       classical_mds, describe_symbolic, interval_distance_matrix, interscal_embed,
                       rotate_embedding)
from interscal.errors import IndexOutOfRange, InvalidInput, NotOrthogonal, RankDeficientWarning

import oracles

ORACLE = json.loads((pathlib.Path(__file__).parent / "data" / "worked_example_oracle.json").read_text())


def pair(lo, hi, mode=SelfMode.PAIRWISE_ZERO):
    return IntervalDissimMatrix([[0, lo], [lo, 0]], [[0, hi], [hi, 0]], mode)


def test_augmented_worked_example():
    aug = build_augmented(pair(1, 3))
    np.testing.assert_array_equal(aug.entries, [[0, 0, 1, 2], [0, 0, 2, 3], [1, 2, 0, 0], [2, 3, 0, 0]])
    assert aug.base_m == 2 and aug.self_mode is SelfMode.PAIRWISE_ZERO


def test_augmented_degenerate():
    np.testing.assert_array_equal(build_augmented(pair(1, 1)).entries,
                                  [[0, 0, 1, 1], [0, 0, 1, 1], [1, 1, 0, 0], [1, 1, 0, 0]])


def test_augmented_single_feature_object():
    d = IntervalDissimMatrix([[0.0]], [[2.0]], SelfMode.FEATURE_DERIVED)
    np.testing.assert_array_equal(build_augmented(d).entries, [[0, 2], [2, 0]])


def test_augmented_rejects_invalid():
    with pytest.raises(InvalidInput):
        build_augmented(IntervalDissimMatrix([[0, 1], [1, 0]], [[0, 3], [4, 0]]))


def random_dissim(r, m, mode):
    if mode is SelfMode.FEATURE_DERIVED:
        lo, hi = oracles.random_boxes(r, m, int(r.integers(1, 4)), spread=5)
        return interval_distance_matrix(IntervalTable(lo, hi))
    lo = r.uniform(0, 5, size=(m, m))
    hi = lo + r.uniform(0, 3, size=(m, m))
    lo, hi = np.triu(lo, 1), np.triu(hi, 1)
    return IntervalDissimMatrix(lo + lo.T, hi + hi.T, mode)


@given(st.integers(1, 8), st.sampled_from(list(SelfMode)), st.integers(0, 2 ** 32 - 1))
def test_augmented_structure(m, mode, seed):
    delta = random_dissim(np.random.default_rng(seed), m, mode)
    d = build_augmented(delta).entries
    assert np.array_equal(d, d.T)
    assert np.all(np.diag(d) == 0)
    for i in range(m):
        assert d[2 * i, 2 * i + 1] == delta.hi[i, i]
        for j in range(m):
            if i == j:
                continue
            block = d[2 * i:2 * i + 2, 2 * j:2 * j + 2]
            mean = (delta.lo[i, j] + delta.hi[i, j]) / 2
            np.testing.assert_array_equal(block, [[delta.lo[i, j], mean], [mean, delta.hi[i, j]]])
            assert block[0, 0] <= block[0, 1] <= block[1, 1]


def test_degenerate_two_objects():
    e = interscal_embed(pair(1, 1), 1)
    assert e.eigenvalues[0] == pytest.approx(1.0, abs=1e-12)
    # twice the classical eigenvalue
    assert e.eigenvalues[0] == pytest.approx(2 * classical_mds([[0, 1], [1, 0]], 1).eigenvalues[0], abs=1e-12)
    assert np.abs(e.widths()).max() <= 1e-9
    np.testing.assert_allclose(e.midpoints()[:, 0], [0.5, -0.5], atol=1e-12)


def test_worked_example_matches_oracle():
    e = interscal_embed(pair(1, 3), 1)
    np.testing.assert_allclose(e.eigenvalues, ORACLE["eigenvalues"], atol=1e-12)
    np.testing.assert_allclose(e.point_coords[:, 0], ORACLE["point_coords"], atol=1e-12)
    np.testing.assert_allclose(np.c_[e.lo, e.hi], ORACLE["intervals"], atol=1e-12)
    assert e.positive_rank == 1


def test_all_zero_input():
    d = IntervalDissimMatrix(np.zeros((3, 3)), np.zeros((3, 3)))
    with pytest.warns(RankDeficientWarning):
        e = interscal_embed(d, 1)
    assert np.array_equal(e.lo, np.zeros((3, 1))) and np.array_equal(e.hi, np.zeros((3, 1)))
    assert e.positive_rank == 0


@given(st.integers(2, 7), st.sampled_from(list(SelfMode)), st.integers(0, 2 ** 32 - 1))
def test_embedding_invariants(m, mode, seed):
    delta = random_dissim(np.random.default_rng(seed), m, mode)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RankDeficientWarning)
        e = interscal_embed(delta, 2)
    p = e.point_coords
    assert p.shape == (2 * m, 2) and e.lo.shape == (m, 2)
    assert len(e.eigenvalues) == 2 * m
    assert np.all(e.hi >= e.lo)
    assert np.abs(p.mean(axis=0)).max() <= 1e-10 * max(1.0, np.abs(p).max())
    for i in range(m):
        for r in range(2):
            pair_vals = {p[2 * i, r], p[2 * i + 1, r]}
            assert e.lo[i, r] == min(pair_vals) and e.hi[i, r] == max(pair_vals)


def test_paired_rows_coincide_for_point_objects(rng):
    pts = rng.uniform(size=(5, 2))
    e = interscal_embed(IntervalDissimMatrix.from_points(oracles.euclidean(pts)), 2)
    np.testing.assert_allclose(e.point_coords[0::2], e.point_coords[1::2], atol=1e-9)


def test_rotation_identity_and_reflection(rng):
    e = interscal_embed(random_dissim(rng, 4, SelfMode.PAIRWISE_ZERO), 2)
    same = rotate_embedding(e, np.eye(2))
    assert np.array_equal(same.point_coords, e.point_coords)
    assert np.array_equal(same.lo, e.lo) and np.array_equal(same.hi, e.hi)
    flipped = rotate_embedding(e, np.diag([-1.0, 1.0]))
    np.testing.assert_array_equal(flipped.lo[:, 0], -e.hi[:, 0])
    np.testing.assert_array_equal(flipped.hi[:, 0], -e.lo[:, 0])
    np.testing.assert_array_equal(flipped.lo[:, 1], e.lo[:, 1])
    assert np.array_equal(flipped.eigenvalues, e.eigenvalues)


@given(st.floats(0, 2 * np.pi), st.integers(0, 2 ** 32 - 1))
def test_rotation_is_isometry(angle, seed):
    r = np.random.default_rng(seed)
    e = interscal_embed(random_dissim(r, 5, SelfMode.PAIRWISE_ZERO), 2)
    t = np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])
    rot = rotate_embedding(e, t)
    np.testing.assert_allclose(oracles.euclidean(rot.point_coords), oracles.euclidean(e.point_coords), atol=1e-10)
    assert np.all(rot.hi >= rot.lo)


def test_rotation_rejects_non_orthogonal(rng):
    e = interscal_embed(random_dissim(rng, 3, SelfMode.PAIRWISE_ZERO), 2)
    with pytest.raises(NotOrthogonal):
        rotate_embedding(e, [[1.0, 0.1], [0.0, 1.0]])


def _embedding(lo, hi):
    lo, hi = np.atleast_2d(lo), np.atleast_2d(hi)
    return IntervalEmbedding(np.ones(2 * lo.shape[0]), lo, hi, lo.shape[1])


def test_describe_rectangle_eight():
    e = _embedding([4.43, -35.12, -0.05], [7.22, -14.94, 0.49])
    assert describe_symbolic(e, 0) == ("a(w)=[Y1(w) ∈ [4.43,7.22]] ∧ [Y2(w) ∈ [-35.12,-14.94]] "
                                       "∧ [Y3(w) ∈ [-0.05,0.49]]")


def test_describe_degenerate_and_bounds():
    e = _embedding([0.0], [0.0])
    assert describe_symbolic(e, 0) == "a(w)=[Y1(w) ∈ [0.00,0.00]]"
    with pytest.raises(IndexOutOfRange):
        describe_symbolic(e, 1)


def test_describe_half_even_and_labels():
    e = _embedding([0.125, -0.001], [2.675, 0.335])
    assert describe_symbolic(e, 0, ["size", "shape"]) == "a(w)=[size(w) ∈ [0.12,2.68]] ∧ [shape(w) ∈ [0.00,0.34]]"


@given(st.integers(2, 6), st.integers(0, 2 ** 32 - 1), st.booleans())
def test_paired_rows_identical_iff_point_object(m, seed, collapse_first):
    r = np.random.default_rng(seed)
    delta = random_dissim(r, m, SelfMode.PAIRWISE_ZERO)
    lo, hi = delta.lo.copy(), delta.hi.copy()
    if collapse_first:
        lo[0, :] = lo[:, 0] = hi[0, :]
        hi[:, 0] = hi[0, :]
        lo[0, 0] = hi[0, 0] = 0.0
    delta = IntervalDissimMatrix(lo, hi)
    d = build_augmented(delta).entries
    point_like = bool(np.all(lo[0] == hi[0]) and hi[0, 0] == 0)
    assert np.array_equal(d[0], d[1]) == point_like
