"""Command line entry point.

    interscal distances --input table.csv --output dissim.csv
    interscal embed --input dissim.csv --dims 2 --format json --svg plane.svg
    interscal pca --input table.csv --dims 2 --standardize
    interscal stress --input dissim.csv --embedding embedding.csv
    interscal plot --input embedding.csv --plot-dims 1,2 --output plane.svg

Exit status: 0 on success, 1 on invalid input, 2 on I/O failure.
"""
from __future__ import annotations

import argparse
import sys
import warnings
from dataclasses import dataclass

import numpy as np

from .boxes import interval_distance_matrix
from .csvio import emit_embedding, format_interval_csv, format_stress, parse_embedding, parse_interval_csv
from .embed import IntervalEmbedding, interscal_embed
from .errors import InterscalError, ParseError
from .intervals import IntervalDissimMatrix, IntervalTable, SelfMode
from .linalg import positive_rank
from .quality import embedding_stress
from .svg import plot_rectangles
from .tops import tops_pca

SUBCOMMANDS = ("distances", "embed", "pca", "stress", "plot")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    input: str
    output: str | None = None
    dims: int = 2
    self_mode: SelfMode | None = None   # None: inferred from the diagonal
    standardize: bool = False
    plot_dims: tuple[int, int] = (1, 2)  # 1-based, as typed on the command line
    fmt: str = "csv"
    seed: int | None = None
    embedding: str | None = None
    svg: str | None = None

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise InterscalError(f"unknown subcommand {self.subcommand!r}")
        if self.dims < 1:
            raise InterscalError("--dims must be at least 1")
        a, b = self.plot_dims
        if a == b or min(a, b) < 1:
            raise InterscalError("--plot-dims needs two distinct dimensions, both >= 1")
        if self.subcommand == "embed" and self.svg and max(a, b) > self.dims:
            raise InterscalError(f"--plot-dims {a},{b} exceeds --dims {self.dims}")
        if self.fmt not in ("csv", "json"):
            raise InterscalError(f"unknown format {self.fmt!r}")


def random_table(m: int, n: int, seed: int | None) -> IntervalTable:
    """Synthetic boxes: uniform centres in [0, 10), half-widths in [0, 1)."""
    rng = np.random.default_rng(seed)
    centre = rng.uniform(0, 10, size=(m, n))
    half = rng.uniform(0, 1, size=(m, n))
    return IntervalTable(centre - half, centre + half)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _load_table(cfg: RunConfig) -> IntervalTable:
    if cfg.input.startswith("random:"):
        try:
            m, n = (int(v) for v in cfg.input[len("random:"):].lower().split("x"))
        except ValueError:
            raise ParseError(f"expected random:MxN, got {cfg.input!r}") from None
        return random_table(m, n, cfg.seed)
    obj = parse_interval_csv(_read(cfg.input))
    if not isinstance(obj, IntervalTable):
        raise ParseError(f"{cfg.input}: expected a feature table (header 'object,...')")
    return obj


def _load_dissim(cfg: RunConfig) -> IntervalDissimMatrix:
    obj = parse_interval_csv(_read(cfg.input), cfg.self_mode)
    if isinstance(obj, IntervalTable):
        # a feature table is accepted and turned into box distances first
        return interval_distance_matrix(obj)
    return obj


def _execute(cfg: RunConfig) -> None:
    if cfg.subcommand == "distances":
        _write(cfg.output, format_interval_csv(interval_distance_matrix(_load_table(cfg))))
    elif cfg.subcommand == "embed":
        delta = _load_dissim(cfg)
        e = interscal_embed(delta, cfg.dims)
        _write(cfg.output, emit_embedding(e, cfg.fmt, extra={"self_mode": delta.self_mode.value}))
        if cfg.svg:
            a, b = cfg.plot_dims
            _write(cfg.svg, plot_rectangles(e, (a - 1, b - 1)))
    elif cfg.subcommand == "pca":
        table = _load_table(cfg)
        res = tops_pca(table, cfg.dims, cfg.standardize)
        e = IntervalEmbedding(res.eigenvalues, res.lo, res.hi, positive_rank(res.eigenvalues), None, table.names)
        extra = {"kind": "tops", "standardized": str(cfg.standardize).lower(),
                 "covariance_divisor": res.covariance_divisor}
        _write(cfg.output, emit_embedding(e, cfg.fmt, extra=extra))
    elif cfg.subcommand == "stress":
        if not cfg.embedding:
            raise InterscalError("stress needs --embedding")
        delta = _load_dissim(cfg)
        e, _, _ = parse_embedding(_read(cfg.embedding))
        _write(cfg.output, format_stress(embedding_stress(delta, e), cfg.fmt, delta.names))
    elif cfg.subcommand == "plot":
        e, labels, _ = parse_embedding(_read(cfg.input))
        a, b = cfg.plot_dims
        if max(a, b) > e.dims:
            raise InterscalError(f"--plot-dims {a},{b} exceeds the embedding's {e.dims} dimension(s)")
        _write(cfg.output, plot_rectangles(e, (a - 1, b - 1), axis_labels=[labels[a - 1], labels[b - 1]]))


def run_cli(cfg: RunConfig) -> int:
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            _execute(cfg)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return 0
    except (InterscalError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 2


def _plot_dims(text: str) -> tuple[int, int]:
    try:
        a, b = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return a, b


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="interscal", description="Multidimensional scaling of interval data.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, help_ in [
        ("distances", "feature table -> interval box-distance matrix"),
        ("embed", "interval dissimilarities -> INTERSCAL embedding"),
        ("pca", "feature table -> Tops interval PCA"),
        ("stress", "dissimilarities + embedding -> stress report"),
        ("plot", "embedding file -> SVG principal plane"),
    ]:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--input", required=True,
                       help="input file, '-' for stdin; distances/pca also take random:MxN")
        p.add_argument("--output", help="output file (default stdout)")
        p.add_argument("--dims", type=int, default=2)
        p.add_argument("--self-mode", choices=[m.value for m in SelfMode], default=None)
        p.add_argument("--standardize", action="store_true")
        p.add_argument("--plot-dims", type=_plot_dims, default=(1, 2))
        p.add_argument("--format", choices=["csv", "json"], default="csv", dest="fmt")
        p.add_argument("--seed", type=int, default=None, help="seed for random:MxN inputs")
        if name == "stress":
            p.add_argument("--embedding", required=True)
        if name == "embed":
            p.add_argument("--svg", help="also write the principal plane to this SVG file")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            subcommand=args.subcommand,
            input=args.input,
            output=args.output,
            dims=args.dims,
            self_mode=SelfMode(args.self_mode) if args.self_mode else None,
            standardize=args.standardize,
            plot_dims=args.plot_dims,
            fmt=args.fmt,
            seed=args.seed,
            embedding=getattr(args, "embedding", None),
            svg=getattr(args, "svg", None),
        )
    except InterscalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return run_cli(cfg)


if __name__ == "__main__":
    sys.exit(main())
