"""Command-line entry point ``tra``.

Exit codes: 0 success, 1 validation failure or SL revision required,
2 missing input, 3 parse or I/O error. Input files are never modified.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path

from . import __version__
from .combined import Verdict
from .config import Config, load_config
from .errors import TraError
from .method_dke import dke_sweep
from .method_iec import (
    BROADCAST_NOTE,
    ORDINAL_PRODUCT_NOTE,
    IecAssessmentInput,
    broadcast,
    iec_border_case_table,
    iec_sl_target,
)
from .ordinal import Band, builtin_matrix
from .reqcatalog import coverage_summary, export_document, load_catalog, sample_catalog, tailor
from .report import MissingInputError, ValidationFailed, dumps, run_assess, run_compare
from .slvector import SLVector
from .sysmodel import load_model, validate

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_MISSING = 2
EXIT_PARSE = 3


class _Exit(Exception):
    def __init__(self, code: int):
        self.code = code


def _common() -> argparse.ArgumentParser:
    # Lets global flags appear before or after the subcommand.
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--out", default=argparse.SUPPRESS, help="write output to this path instead of stdout")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p.add_argument("--config", default=argparse.SUPPRESS, help="JSON policy file")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="tra", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"tra {__version__}")
    parser.add_argument("--out", default=None)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--config", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check zone/conduit partition rules")
    p.add_argument("model")

    p = sub.add_parser("assess", parents=[common], help="assign security levels")
    p.add_argument("--method", choices=("iec", "dke", "combined"), required=True)
    p.add_argument("--likelihood", help="iec: level label or order 1-5")
    p.add_argument("--impact", help="iec: level label or order 1-5")
    p.add_argument("--risk", type=int, help="iec: raw risk value R instead of likelihood/impact")
    p.add_argument("--broadcast", action="store_true", help="iec: also print the uniform SL vector")
    p.add_argument("--model")
    p.add_argument("--zone")
    p.add_argument("--scenarios")
    p.add_argument("--matrix", default="sample", help="built-in name (sample, iso27005) or JSON file")
    p.add_argument("--catalog", help="tailor requirements from this catalog")

    p = sub.add_parser("compare", parents=[common], help="side-by-side table of both methods")
    p.add_argument("--bands", help="JSON object {label: color} for the sample matrix")

    p = sub.add_parser("table", parents=[common], help="print a method's full lookup table")
    p.add_argument("which", choices=("iec", "dke"))

    p = sub.add_parser("catalog", help="requirement catalog operations")
    csub = p.add_subparsers(dest="catalog_command", required=True)
    c = csub.add_parser("tailor", parents=[common])
    c.add_argument("--sl", required=True, help='SL vector, e.g. "(2,2,2,1,2,2,1)"')
    c.add_argument("--catalog", help="catalog file (default: bundled sample)")
    c = csub.add_parser("summary", parents=[common])
    c.add_argument("catalog", nargs="?")
    c = csub.add_parser("export", parents=[common], help="SL1 entries for the safety requirements spec")
    c.add_argument("catalog", nargs="?")
    return parser


def _emit(args: argparse.Namespace, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_validate(args: argparse.Namespace, config: Config) -> int:
    violations = validate(load_model(args.model))
    if args.format == "json":
        _emit(args, dumps([{"rule": v.rule.value, "id": v.id, "message": v.message} for v in violations]))
    else:
        _emit(args, "".join(f"{v}\n" for v in violations))
    return EXIT_FAIL if violations else EXIT_OK


def _cmd_assess_iec(args: argparse.Namespace, config: Config) -> int:
    if args.risk is not None:
        result = iec_sl_target(args.risk, config.tolerable_risk)
    elif args.likelihood is not None and args.impact is not None:
        matrix = builtin_matrix("sample")
        inp = IecAssessmentInput(
            matrix.likelihood_scale.resolve(args.likelihood), matrix.impact_scale.resolve(args.impact)
        )
        result = iec_sl_target(inp, config.tolerable_risk)
    else:
        raise MissingInputError("the iec method needs --likelihood and --impact, or --risk")
    data = result.to_dict()
    if args.broadcast:
        data["sl_vector"] = str(broadcast(result.sl_target))
        data["sl_vector_note"] = BROADCAST_NOTE
    if args.format == "json":
        _emit(args, dumps(data))
    else:
        lines = [
            f"R = {result.risk_r}  [{ORDINAL_PRODUCT_NOTE}]",
            f"CRRF = {result.crrf_text}",
            f"SL-T = {result.sl_target}",
        ]
        if args.broadcast:
            lines.append(f"SL-T vector = {data['sl_vector']}  [{BROADCAST_NOTE}]")
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_assess(args: argparse.Namespace, config: Config) -> int:
    if args.method == "iec":
        return _cmd_assess_iec(args, config)
    if args.model is None:
        raise MissingInputError(f"the {args.method} method needs --model")
    report = run_assess(
        args.model,
        args.method,
        zone=args.zone,
        scenarios_path=args.scenarios,
        matrix=args.matrix,
        catalog_path=args.catalog,
        config=config,
    )
    _emit(args, report.to_json() if args.format == "json" else report.to_text())
    if report.tra is not None and report.tra.summary[Verdict.SL_MISJUDGED]:
        return EXIT_FAIL
    return EXIT_OK


def _cmd_compare(args: argparse.Namespace, config: Config) -> int:
    bands = None
    if args.bands:
        with open(args.bands, encoding="utf-8") as fh:
            bands = {str(k): Band(v) for k, v in json.load(fh).items()}
    report = run_compare(config, bands)
    _emit(args, report.to_json() if args.format == "json" else report.to_text())
    return EXIT_OK


def _cmd_table(args: argparse.Namespace, config: Config) -> int:
    if args.which == "iec":
        rows = iec_border_case_table(config.tolerable_risk)
        if args.format == "json":
            _emit(args, dumps([
                {"risk_r": r.risk_r, "crrf": str(r.crrf), "sl_target": r.sl_target, "is_product": r.is_product}
                for r in rows
            ]))
        else:
            out = [f"{'R':>3} {'CRRF':>6} {'SL-T':>4}  L*I"]
            out += [
                f"{r.risk_r:>3} {str(r.crrf):>6} {r.sl_target:>4}  {'yes' if r.is_product else 'no'}"
                for r in rows
            ]
            _emit(args, "\n".join(out) + "\n")
        return EXIT_OK
    rows = dke_sweep()
    if args.format == "json":
        _emit(args, dumps([vars(r) for r in rows]))
    else:
        out = ["RES KNO max(ORT,NAC,POT) PSL SL"]
        out += [f"{r.resources:>3} {r.knowhow:>3} {r.modifier_max:>17} {r.psl:>3} {r.sl:>2}" for r in rows]
        _emit(args, "\n".join(out) + "\n")
    return EXIT_OK


def _cmd_catalog(args: argparse.Namespace, config: Config) -> int:
    catalog = load_catalog(args.catalog) if args.catalog else sample_catalog()
    if args.catalog_command == "tailor":
        entries = tailor(catalog, SLVector.parse(args.sl))
        if args.format == "json":
            _emit(args, dumps({"catalog": catalog.name, "sl": args.sl, "entries": [e.to_dict() for e in entries]}))
        else:
            _emit(args, "".join(f"{e.fr.value:<4} {e.id:<12} SL{e.min_sl}  {e.title}\n" for e in entries))
        return EXIT_OK
    if args.catalog_command == "summary":
        counts = coverage_summary(catalog.entries)
        sl1 = coverage_summary(e for e in catalog.entries if e.min_sl == 1)
        if args.format == "json":
            _emit(args, dumps({
                "catalog": catalog.name,
                "all": {k.value: v for k, v in counts.items()},
                "sl1": {k.value: v for k, v in sl1.items()},
            }))
        else:
            lines = [f"catalog {catalog.name}: {len(catalog)} entries, {sum(sl1.values())} at SL1"]
            lines += [f"    {k.value:<24} {sl1[k]:>3} SL1 / {v:>3} total" for k, v in counts.items()]
            _emit(args, "\n".join(lines) + "\n")
        return EXIT_OK
    _emit(args, dumps(export_document(catalog)))
    return EXIT_OK


COMMANDS = {
    "validate": _cmd_validate,
    "assess": _cmd_assess,
    "compare": _cmd_compare,
    "table": _cmd_table,
    "catalog": _cmd_catalog,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        return COMMANDS[args.command](args, config)
    except ValidationFailed as exc:
        sys.stdout.write("".join(f"{v}\n" for v in exc.violations))
        return EXIT_FAIL
    except MissingInputError as exc:
        print(f"tra: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except (OSError, json.JSONDecodeError, TraError, ValueError, KeyError, TypeError) as exc:
        print(f"tra: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
