"""Command-line driver: raw-word listing, batch analysis, local service.

Exit codes: 0 success, 1 usage or validation problem, 2 I/O failure.
"""

import argparse
import socket
import sys
from pathlib import Path

from .cast import CastError, ExtractionConstraints, extract_raw_words, parse_cast_file
from .corpus import load_corpus
from .metrics import DEFAULT_DECAY, DEFAULT_WINDOW, ProximityKernel
from .network import Thresholds
from .pipeline import AnalysisParams, run_analysis

KERNEL_NAMES = {"rect": "rectangular", "exp": "exponential"}


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; our convention reserves 2 for I/O.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="castnet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    words = sub.add_parser("words", parents=[], help="list candidate raw words as TSV")
    words.add_argument("corpus_dir", help="directory of UTF-8 text units")
    words.add_argument("--ext", default=".txt", help="unit file extension (default .txt)")
    words.add_argument("--min-len", type=int, default=3, help="minimum word length (default 3)")
    words.add_argument("--min-count", type=int, default=2, help="minimum total count (default 2)")
    words.add_argument(
        "--capitalized-only",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="require at least one capitalized occurrence (default on)",
    )
    words.add_argument("-o", "--out", help="write TSV here instead of stdout")

    analyze = sub.add_parser("analyze", help="score the cast and emit graph outputs")
    analyze.add_argument("corpus_dir", help="directory of UTF-8 text units")
    analyze.add_argument("--ext", default=".txt", help="unit file extension (default .txt)")
    analyze.add_argument("--cast", required=True, help="cast file path")
    scope = analyze.add_mutually_exclusive_group()
    scope.add_argument("--unit", type=int, help="analyze a single unit (1-based index)")
    scope.add_argument(
        "--per-unit", action="store_true", help="run once per unit, suffixing outputs _actN"
    )
    analyze.add_argument(
        "--kernel", choices=sorted(KERNEL_NAMES), default="rect", help="proximity kernel (default rect)"
    )
    analyze.add_argument(
        "--window", type=int, default=DEFAULT_WINDOW,
        help=f"rectangular window in tokens (default {DEFAULT_WINDOW})",
    )
    analyze.add_argument(
        "--decay", type=float, default=DEFAULT_DECAY,
        help=f"exponential decay length in tokens (default {DEFAULT_DECAY:g})",
    )
    analyze.add_argument(
        "--node-threshold", type=float, default=0.15, help="minimum F to keep a node (default 0.15)"
    )
    analyze.add_argument(
        "--edge-threshold", type=float, default=0.15, help="minimum I to keep an edge (default 0.15)"
    )
    analyze.add_argument("--tables", action="store_true", help="print ranked score tables")
    analyze.add_argument("--dot", help="write DOT graph here")
    analyze.add_argument("--json", help="write JSON graph here")

    serve = sub.add_parser("serve", help="run the local HTTP service")
    serve.add_argument("corpus_dir", nargs="?", default=".", help="corpus directory (default .)")
    serve.add_argument("--ext", default=".txt", help="unit file extension (default .txt)")
    serve.add_argument("--cast", help="cast file to preload and save back to")
    serve.add_argument("--port", type=int, default=8572, help="port to bind (0 = ephemeral)")
    serve.add_argument("--host", default="127.0.0.1", help="bind address (default localhost)")
    return parser


def _load_corpus_or_exit(path: str, ext: str):
    try:
        return load_corpus(path, extension=ext)
    except (OSError, ValueError) as e:
        print(f"castnet: {e}", file=sys.stderr)
        raise SystemExit(2) from None


def _with_suffix(path: str, tag: str) -> Path:
    p = Path(path)
    return p.with_name(p.stem + tag + p.suffix)


def cmd_words(args) -> int:
    corpus = _load_corpus_or_exit(args.corpus_dir, args.ext)
    try:
        constraints = ExtractionConstraints(
            min_length=args.min_len,
            capitalized_only=args.capitalized_only,
            min_count=args.min_count,
        )
    except ValueError as e:
        print(f"castnet: {e}", file=sys.stderr)
        return 1
    lines = [
        f"{w.folded}\t{w.count}\t{w.sample_surface}"
        for w in extract_raw_words(corpus, constraints)
    ]
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as e:
            print(f"castnet: {e}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0


def cmd_analyze(args) -> int:
    corpus = _load_corpus_or_exit(args.corpus_dir, args.ext)
    try:
        cast_text = Path(args.cast).read_text(encoding="utf-8")
    except OSError as e:
        print(f"castnet: {e}", file=sys.stderr)
        return 2
    try:
        cast = parse_cast_file(cast_text)
        thresholds = Thresholds(node_min=args.node_threshold, edge_min=args.edge_threshold)
        kernel = ProximityKernel(
            kind=KERNEL_NAMES[args.kernel], window=args.window, decay_length=args.decay
        )
    except (CastError, ValueError) as e:
        print(f"castnet: {args.cast if isinstance(e, CastError) else 'invalid parameters'}: {e}",
              file=sys.stderr)
        return 1

    if args.unit is not None and args.unit not in corpus.unit_indices:
        print(f"castnet: unknown unit index {args.unit}", file=sys.stderr)
        return 1

    runs = corpus.unit_indices if args.per_unit else (args.unit,)
    multi = args.per_unit
    for unit_index in runs:
        params = AnalysisParams(unit_index=unit_index, kernel=kernel, thresholds=thresholds)
        result = run_analysis(corpus, cast, params)
        tag = f"_act{unit_index}" if multi else ""
        try:
            if args.dot:
                _with_suffix(args.dot, tag).write_text(result.dot, encoding="utf-8")
            if args.json:
                _with_suffix(args.json, tag).write_text(result.json_text, encoding="utf-8")
        except OSError as e:
            print(f"castnet: {e}", file=sys.stderr)
            return 2
        if args.tables:
            if multi:
                unit = corpus.unit(unit_index)
                sys.stdout.write(f"# unit {unit.index}: {unit.id}\n")
            sys.stdout.write(result.tables)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .api import create_app

    corpus = _load_corpus_or_exit(args.corpus_dir, args.ext)
    cast = None
    if args.cast:
        try:
            cast = parse_cast_file(Path(args.cast).read_text(encoding="utf-8"))
        except OSError as e:
            print(f"castnet: {e}", file=sys.stderr)
            return 2
        except CastError as e:
            print(f"castnet: {args.cast}: {e}", file=sys.stderr)
            return 1

    app = create_app(corpus, cast=cast, cast_path=args.cast)
    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, args.port))
    except OSError as e:
        print(f"castnet: cannot bind {args.host}:{args.port}: {e}", file=sys.stderr)
        sock.close()
        return 2
    host, port = sock.getsockname()[:2]
    print(f"castnet serving {len(corpus.units)} unit(s) on http://{host}:{port}", flush=True)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    server.run(sockets=[sock])
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = {"words": cmd_words, "analyze": cmd_analyze, "serve": cmd_serve}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
