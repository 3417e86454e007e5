"""Command-line entry point: ``kgeodesics <subcommand> ...``.

Exit status is 0 on success, 1 on domain errors and 2 on usage errors.
With ``--json-errors`` domain errors are printed to stderr as
``{"code", "message", "context"}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import acceptance
from .bounds import (
    BOUND_NAMES,
    bound_table,
    improved_vs_basmajian21_crossover,
    improved_vs_ep_crossover,
)
from .constructions import closed_form_intersection, params_for_k, word_for_k
from .errors import GeodesicError
from .geometry import geodesic_length, parse_structure
from .intersection import self_intersection
from .oracle import oracle_count
from .render import RenderMode, RenderSpec, render
from .survey import CSV_COLUMNS, DEFAULT_MAX_LEN, figure_eight_length, survey, survey_metadata
from .words import parse_word


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_intersect(args) -> int:
    w = parse_word(args.word)
    S = parse_structure(args.structure)
    if args.oracle:
        total = oracle_count(w, S)
        if args.json or args.breakdown:
            print(json.dumps({"word": str(w), "total": total, "method": "oracle"}))
        else:
            print(total)
        return 0
    br = self_intersection(w, S)
    if args.breakdown:
        print(json.dumps(br.to_json(), indent=2))
    elif args.json:
        print(json.dumps({"word": br.word, "total": br.total, "method": "formula"}))
    else:
        print(br.total)
    return 0


def cmd_construct(args) -> int:
    w = word_for_k(args.k)
    if args.k == 1:
        info = {"k": 1, "word": str(w), "closed_form": 1}
    else:
        p = params_for_k(args.k)
        info = {**p.as_dict(), "word": str(w), "closed_form": closed_form_intersection(p.m, p.n, p.j)}
    if args.json:
        print(json.dumps(info))
    else:
        print(" ".join(f"{k}={v}" for k, v in info.items() if k not in ("word", "closed_form")))
        print(f"word {info['word']}")
        print(f"closed-form self-intersection {info['closed_form']}")
    return 0


def cmd_length(args) -> int:
    w = parse_word(args.word)
    length = geodesic_length(w, parse_structure(args.structure))
    if args.json:
        print(json.dumps({"word": str(w), "length": length}))
    else:
        print(repr(length))
    return 0


def cmd_survey(args) -> int:
    S = parse_structure(args.structure)
    L8, witness = figure_eight_length(S)
    records = survey(S, max_len=args.max_len, k_max=args.k_max, workers=args.workers, L8=L8)
    rows = [r.as_row() for r in records]
    if args.format == "json":
        doc = {"metadata": survey_metadata(S, args.max_len, args.k_max, L8, witness), "records": rows}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        buf = io.StringIO()
        buf.write(f"# {survey_metadata(S, args.max_len, args.k_max, L8, witness)['caveat']}\n")
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    _emit(text, args.out)
    return 0


def cmd_bounds(args) -> int:
    if args.k_min < 1 or args.k_max < args.k_min:
        raise ValueError("need 1 <= k-min <= k-max")
    rows = bound_table(range(args.k_min, args.k_max + 1), args.which)
    if args.format == "json":
        doc = {
            "rows": rows,
            "crossovers": {
                "S_K_IMPROVED_below_BASMAJIAN21": improved_vs_basmajian21_crossover(),
                "IMPROVED_below_EP": improved_vs_ep_crossover(),
            },
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["k", *args.which], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        _emit(buf.getvalue(), args.out)
    return 0


def cmd_verify(args) -> int:
    results = acceptance.run_all(echo=print)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


def cmd_render(args) -> int:
    spec = RenderSpec(
        structure=parse_structure(args.structure),
        words=tuple(parse_word(w) for w in args.word),
        canvas=(args.size, args.size),
        which=RenderMode(args.mode.upper().replace("-", "_")),
    )
    _emit(render(spec), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kgeodesics", description=__doc__.splitlines()[0])
    parser.add_argument("--json-errors", action="store_true", help="report domain errors as JSON on stderr")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-errors", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("intersect", parents=[common], help="self-intersection number of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--structure", default="1,1,1", help="boundary lengths L1,L2,L3")
    p.add_argument("--breakdown", action="store_true", help="print the per-set JSON breakdown")
    p.add_argument("--oracle", action="store_true", help="use the linked-pair oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("construct", parents=[common], help="construction parameters and word for a target k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("length", parents=[common], help="length of the closed geodesic of a word")
    p.add_argument("--word", required=True)
    p.add_argument("--structure", default="1,1,1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("survey", parents=[common], help="empirical shortest k-geodesics")
    p.add_argument("--structure", default="1,1,1")
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.add_argument("--k-max", type=int, default=50)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("bounds", parents=[common], help="tables of the s_k and I_k bounds")
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=20)
    p.add_argument("--which", nargs="+", choices=BOUND_NAMES, default=list(BOUND_NAMES))
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[common], help="SVG of axes in the Poincare disk")
    p.add_argument("--word", action="append", required=True)
    p.add_argument("--structure", default="1,1,1")
    p.add_argument("--mode", choices=("axes", "alpha-beta"), default="axes")
    p.add_argument("--size", type=int, default=600)
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GeodesicError, ValueError) as exc:
        err = exc.to_json() if isinstance(exc, GeodesicError) else {
            "code": "invalid_argument",
            "message": str(exc),
            "context": {},
        }
        if args.json_errors:
            print(json.dumps(err), file=sys.stderr)
        else:
            print(f"error: {err['message']}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
