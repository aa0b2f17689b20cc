import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from interscal import IntervalDissimMatrix, IntervalTable, SelfMode, interscal_embed
from interscal.csvio import (emit_embedding, format_interval_csv, parse_cell, parse_embedding,
                             parse_interval_csv)
from interscal.errors import ParseError, ReversedBounds

floats = st.floats(allow_nan=False, allow_infinity=False)


def test_cells():
    assert parse_cell("1:3") == (1.0, 3.0)
    assert parse_cell("2") == (2.0, 2.0)
    assert parse_cell("-1.5:-0.5") == (-1.5, -0.5)
    with pytest.raises(ReversedBounds):
        parse_cell("3:1")
    for bad in ("", "a:b", "1:2:3", "nan", "1:inf"):
        with pytest.raises(ParseError):
            parse_cell(bad)


def test_reversed_cell_location():
    with pytest.raises(ReversedBounds) as info:
        parse_interval_csv("object,x,y\nA,1:2,3:1\n")
    assert "line 2, column 3" in str(info.value)


def test_parse_error_location():
    with pytest.raises(ParseError) as info:
        parse_interval_csv("object,x\nA,1:2\nB,oops\n")
    assert (info.value.line, info.value.column) == (3, 2)


def test_table_mode():
    t = parse_interval_csv("object,len,wid\nA,1:3,2\nB,0.5:1,2:4\n")
    assert isinstance(t, IntervalTable)
    assert t.columns == ("len", "wid") and t.names == ("A", "B")
    np.testing.assert_array_equal(t.lo, [[1, 2], [0.5, 2]])
    np.testing.assert_array_equal(t.hi, [[3, 2], [1, 4]])


def test_dissim_mode_and_inferred_self_mode():
    d = parse_interval_csv("dissim,A,B\nA,0,1:3\nB,1:3,0\n")
    assert isinstance(d, IntervalDissimMatrix) and d.self_mode is SelfMode.PAIRWISE_ZERO
    f = parse_interval_csv("dissim,A,B\nA,0:1,1:3\nB,1:3,0:2\n")
    assert f.self_mode is SelfMode.FEATURE_DERIVED
    forced = parse_interval_csv("dissim,A,B\nA,0,1:3\nB,1:3,0\n", SelfMode.FEATURE_DERIVED)
    assert forced.self_mode is SelfMode.FEATURE_DERIVED


def test_bad_headers():
    with pytest.raises(ParseError):
        parse_interval_csv("thing,a\nA,1\n")
    with pytest.raises(ParseError):
        parse_interval_csv("dissim,A,B\nA,0,1\n")
    with pytest.raises(ParseError):
        parse_interval_csv("dissim,A,B\nA,0,1\nC,1,0\n")


@given(st.integers(1, 5), st.integers(1, 4), st.lists(floats, min_size=40, max_size=40))
def test_table_round_trip(m, n, vals):
    a = np.array(vals[: m * n]).reshape(m, n)
    b = np.array(vals[20: 20 + m * n]).reshape(m, n)
    t = IntervalTable(np.minimum(a, b), np.maximum(a, b))
    text = format_interval_csv(t)
    back = parse_interval_csv(text)
    assert back == t
    assert back.lo.tobytes() == t.lo.tobytes() and back.hi.tobytes() == t.hi.tobytes()
    assert format_interval_csv(back) == text


@given(st.integers(1, 5), st.integers(0, 2 ** 32 - 1))
def test_dissim_round_trip(m, seed):
    r = np.random.default_rng(seed)
    lo = r.uniform(0, 1, size=(m, m)) ** 3
    hi = lo + r.exponential(size=(m, m))
    lo, hi = np.triu(lo, 1), np.triu(hi, 1)
    d = IntervalDissimMatrix(lo + lo.T, hi + hi.T)
    back = parse_interval_csv(format_interval_csv(d))
    assert back == d


def _embedding():
    d = IntervalDissimMatrix([[0, 1, 2], [1, 0, 1.5], [2, 1.5, 0]], [[0, 3, 4], [3, 0, 2], [4, 2, 0]])
    return interscal_embed(d, 2)


def test_emit_csv_json_agree():
    e = _embedding()
    csv_text, json_text = emit_embedding(e, "csv"), emit_embedding(e, "json")
    from_csv, labels_csv, _ = parse_embedding(csv_text)
    from_json, labels_json, _ = parse_embedding(json_text)
    assert labels_csv == labels_json == ["Y1", "Y2"]
    assert np.array_equal(from_csv.lo, from_json.lo) and np.array_equal(from_csv.hi, from_json.hi)
    assert np.array_equal(from_csv.eigenvalues, from_json.eigenvalues)
    assert from_csv.positive_rank == from_json.positive_rank == e.positive_rank
    np.testing.assert_allclose(from_csv.lo, e.lo, rtol=1e-11, atol=1e-12)
    doc = json.loads(json_text)
    assert doc["objects"][0]["description"].startswith("a(w)=[Y1(w) ∈ [")


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_emit_round_trip_identity(fmt):
    text = emit_embedding(_embedding(), fmt)
    e, labels, meta = parse_embedding(text)
    assert emit_embedding(e, fmt, labels, extra=meta) == text


def test_emit_degenerate_rows():
    d = IntervalDissimMatrix.from_points([[0, 1], [1, 0]])
    text = emit_embedding(interscal_embed(d, 1), "csv")
    rows = [line for line in text.splitlines() if line.startswith("S")]
    assert rows[0].startswith("S1,0.5:0.5,") and rows[1].startswith("S2,-0.5:-0.5,")
