"""CSV / JSON formats.

Interval files are CSV with ``lo:hi`` cells (a bare number is a point
interval).  A header starting with ``object,`` marks a feature table, one
starting with ``dissim,`` a dissimilarity matrix::

    object,length,width          dissim,A,B
    A,1:3,2                      A,0,1:3
    B,0.5:1,2:4                  B,1:3,0

Embedding files (written by ``embed`` and ``pca``) start with ``#`` metadata
lines followed by an ``embedding,`` header; values carry 12 significant digits.
"""
from __future__ import annotations

import csv
import io
import json
import math
from typing import Sequence

import numpy as np

from .embed import IntervalEmbedding, describe_symbolic
from .errors import ParseError, ReversedBounds
from .intervals import IntervalDissimMatrix, IntervalTable, SelfMode

SIG_DIGITS = 12


def _number(text: str, line: int, col: int) -> float:
    try:
        x = float(text)
    except ValueError:
        raise ParseError(f"not a number: {text!r}", line, col) from None
    if not math.isfinite(x):
        raise ParseError(f"non-finite value: {text!r}", line, col)
    return x


def parse_cell(text: str, line: int | None = None, col: int | None = None) -> tuple[float, float]:
    text = text.strip()
    if not text:
        raise ParseError("empty cell", line, col)
    parts = text.split(":")
    if len(parts) == 1:
        x = _number(parts[0], line, col)
        return x, x
    if len(parts) != 2:
        raise ParseError(f"expected 'lo:hi', got {text!r}", line, col)
    lo, hi = _number(parts[0], line, col), _number(parts[1], line, col)
    if lo > hi:
        raise ReversedBounds(lo, hi, location=f"line {line}, column {col}")
    return lo, hi


def format_cell(lo: float, hi: float) -> str:
    # repr is the shortest string that reads back to the same double
    return repr(float(lo)) if lo == hi else f"{float(lo)!r}:{float(hi)!r}"


def _rows(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or all(not c.strip() for c in row) or row[0].startswith("#"):
            continue
        out.append((lineno, row))
    return out


def parse_interval_csv(text: str, self_mode: SelfMode | str | None = None):
    """Parse a feature table or a dissimilarity matrix, chosen by the header.

    For matrices, ``self_mode=None`` infers the mode: pairwise when every
    diagonal upper bound is zero, feature-derived otherwise.
    """
    rows = _rows(text)
    if not rows:
        raise ParseError("empty input")
    hline, header = rows[0]
    kind = header[0].strip().lower()
    if kind not in ("object", "dissim"):
        raise ParseError("header must start with 'object,' or 'dissim,'", hline, 1)
    columns = [h.strip() for h in header[1:]]
    if not columns:
        raise ParseError("header names no columns", hline)
    names, lo, hi = [], [], []
    for lineno, row in rows[1:]:
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} fields, found {len(row)}", lineno)
        names.append(row[0].strip())
        bounds = [parse_cell(c, lineno, k + 2) for k, c in enumerate(row[1:])]
        lo.append([b[0] for b in bounds])
        hi.append([b[1] for b in bounds])
    if not names:
        raise ParseError("no data rows", hline)
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    if kind == "object":
        return IntervalTable(lo, hi, tuple(columns), tuple(names))
    if len(names) != len(columns):
        raise ParseError(f"dissimilarity matrix has {len(names)} rows but {len(columns)} columns")
    if columns != names:
        raise ParseError("row labels must match the header labels", hline)
    if self_mode is None:
        self_mode = SelfMode.PAIRWISE_ZERO if np.all(np.diag(hi) == 0) else SelfMode.FEATURE_DERIVED
    return IntervalDissimMatrix(lo, hi, SelfMode(self_mode), tuple(names))


def format_interval_csv(obj: IntervalTable | IntervalDissimMatrix) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(obj, IntervalTable):
        w.writerow(["object", *obj.columns])
    else:
        w.writerow(["dissim", *obj.names])
    for i, name in enumerate(obj.names):
        w.writerow([name, *(format_cell(a, b) for a, b in zip(obj.lo[i], obj.hi[i]))])
    return buf.getvalue()


def _round(x) -> np.ndarray:
    return np.vectorize(lambda v: float(f"{v:.{SIG_DIGITS}g}"), otypes=[float])(np.asarray(x, dtype=float))


def _g(x: float) -> str:
    return f"{x:.{SIG_DIGITS}g}"


def emit_embedding(e: IntervalEmbedding, fmt: str = "csv", labels: Sequence[str] | None = None,
                   extra: dict | None = None) -> str:
    """Serialize an embedding deterministically as ``csv`` or ``json``.

    Values are rounded to 12 significant digits first and the conjunction
    strings are rendered from the rounded values, so parsing the output
    and emitting it again reproduces it exactly.
    """
    labels = list(labels) if labels else [f"Y{r + 1}" for r in range(e.dims)]
    r = IntervalEmbedding(_round(e.eigenvalues), _round(e.lo), _round(e.hi), e.positive_rank, None, e.names)
    desc = [describe_symbolic(r, i, labels) for i in range(r.m)]
    meta = {"kind": "interscal", **(extra or {})}
    if fmt == "json":
        doc = {
            **meta,
            "dims": r.dims,
            "labels": labels,
            "eigenvalues": r.eigenvalues.tolist(),
            "positive_rank": r.positive_rank,
            "objects": [
                {"name": r.names[i],
                 "intervals": [[float(r.lo[i, k]), float(r.hi[i, k])] for k in range(r.dims)],
                 "description": desc[i]}
                for i in range(r.m)
            ],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}: {value}\n")
    buf.write("# eigenvalues: " + ",".join(_g(v) for v in r.eigenvalues) + "\n")
    buf.write(f"# positive_rank: {r.positive_rank}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["embedding", *labels, "description"])
    for i in range(r.m):
        w.writerow([r.names[i], *(f"{_g(r.lo[i, k])}:{_g(r.hi[i, k])}" for k in range(r.dims)), desc[i]])
    return buf.getvalue()


def parse_embedding(text: str) -> tuple[IntervalEmbedding, list[str], dict]:
    """Read an embedding file written by :func:`emit_embedding` (either format).

    Returns the embedding (without point coordinates), the dimension labels
    and the remaining metadata.
    """
    if text.lstrip().startswith("{"):
        try:
            doc = json.loads(text)
            objs = doc["objects"]
            lo = np.array([[iv[0] for iv in o["intervals"]] for o in objs], dtype=float)
            hi = np.array([[iv[1] for iv in o["intervals"]] for o in objs], dtype=float)
            e = IntervalEmbedding(np.array(doc["eigenvalues"], dtype=float), lo, hi,
                                  int(doc["positive_rank"]), None, tuple(o["name"] for o in objs))
            labels = list(doc["labels"])
        except (ValueError, KeyError, TypeError, IndexError) as exc:
            raise ParseError(f"malformed embedding JSON: {exc}") from None
        meta = {k: v for k, v in doc.items()
                if k not in ("dims", "labels", "eigenvalues", "positive_rank", "objects")}
        return e, labels, meta
    meta, eigenvalues, rank = {}, None, None
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.startswith("#"):
            continue
        key, _, value = line[1:].partition(":")
        key, value = key.strip(), value.strip()
        if key == "eigenvalues":
            eigenvalues = np.array([_number(v, lineno, k + 1) for k, v in enumerate(value.split(","))])
        elif key == "positive_rank":
            try:
                rank = int(value)
            except ValueError:
                raise ParseError(f"bad positive_rank {value!r}", lineno) from None
        else:
            meta[key] = value
    rows = _rows(text)
    if eigenvalues is None or rank is None or not rows:
        raise ParseError("embedding file lacks eigenvalues, positive_rank or data")
    hline, header = rows[0]
    if header[0] != "embedding" or header[-1] != "description":
        raise ParseError("header must be 'embedding,<dims...>,description'", hline)
    labels = header[1:-1]
    names, lo, hi = [], [], []
    for lineno, row in rows[1:]:
        if len(row) != len(header):
            raise ParseError(f"expected {len(header)} fields, found {len(row)}", lineno)
        names.append(row[0])
        bounds = [parse_cell(c, lineno, k + 2) for k, c in enumerate(row[1:-1])]
        lo.append([b[0] for b in bounds])
        hi.append([b[1] for b in bounds])
    e = IntervalEmbedding(eigenvalues, np.array(lo, dtype=float), np.array(hi, dtype=float),
                          rank, None, tuple(names))
    return e, labels, meta


def format_stress(report, fmt: str = "csv", names: Sequence[str] | None = None) -> str:
    def label(k):
        return names[k] if names else str(k)

    if fmt == "json":
        doc = {
            "raw_stress": report.raw_stress,
            "normalized_stress": report.normalized_stress,
            "normalizer": report.normalizer,
            "pairs": [{"i": label(i), "j": label(j), "d_min": a, "d_max": b, "delta_lo": c, "delta_hi": d}
                      for i, j, a, b, c, d in report.per_pair],
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    buf.write(f"# raw_stress: {_g(report.raw_stress)}\n")
    buf.write(f"# normalized_stress: {_g(report.normalized_stress)}\n")
    buf.write(f"# normalizer: {report.normalizer}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i", "j", "d_min", "d_max", "delta_lo", "delta_hi"])
    for i, j, a, b, c, d in report.per_pair:
        w.writerow([label(i), label(j), _g(a), _g(b), _g(c), _g(d)])
    return buf.getvalue()

