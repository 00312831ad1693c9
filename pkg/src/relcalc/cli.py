"""Command-line interface.

Exit codes: 0 success, 1 computation failure (mass overflow, total conflict,
zero marginal, ...), 2 unreadable, malformed or invalid input.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from typing import Sequence, TextIO

from . import bayes, formats
from .catalog import default_catalog
from .errors import ComputationError, InputError
from .evidence import combine_dempster, conflict, ds_table

EXIT_OK, EXIT_COMPUTE, EXIT_INPUT = 0, 1, 2


def _run_config(args: argparse.Namespace) -> formats.RunConfig:
    cfg = formats.parse_config(args.config) if args.config else formats.RunConfig()
    changes = {}
    if args.epsilon is not None:
        changes["epsilon"] = args.epsilon
    if args.septuple:
        changes["septuple"] = formats.parse_septuple(args.septuple)
    if args.format:
        changes["output_format"] = args.format
    return dataclasses.replace(cfg, **changes) if changes else cfg


def cmd_compute(args: argparse.Namespace, out: TextIO) -> int:
    cfg = _run_config(args)
    catalog = formats.parse_catalog(args.catalog) if args.catalog else default_catalog()
    dossiers = [formats.parse_dossier(p) for p in args.dossier]
    for d in dossiers:
        d.check_against(catalog)
    reports = [formats.build_report(d, catalog, cfg) for d in dossiers]
    out.write(formats.render_reports(reports, cfg.output_format))
    return EXIT_OK


def cmd_validate(args: argparse.Namespace, out: TextIO) -> int:
    if not (args.catalog or args.dossier or args.config or args.mass):
        raise InputError("nothing to validate; pass --catalog, --dossier, --config or --mass")
    catalog = default_catalog()
    if args.catalog:
        catalog = formats.parse_catalog(args.catalog)
        out.write(f"ok catalog {args.catalog}\n")
    if args.config:
        formats.parse_config(args.config)
        out.write(f"ok config {args.config}\n")
    for path in args.dossier or []:
        formats.parse_dossier(path).check_against(catalog)
        out.write(f"ok dossier {path}\n")
    for path in args.mass or []:
        formats.parse_mass(path)
        out.write(f"ok mass {path}\n")
    return EXIT_OK


def cmd_ds(args: argparse.Namespace, out: TextIO) -> int:
    for path in args.mass:
        m = formats.parse_mass(path)
        summary = ds_table(m)
        if args.format == "json":
            out.write(formats.dumps(formats.ds_to_dict(summary, m, args.base_rate)) + "\n")
        else:
            out.write(formats.render_ds_text(summary, m, args.base_rate))
    return EXIT_OK


def cmd_fuse(args: argparse.Namespace, out: TextIO) -> int:
    masses = [formats.parse_mass(p) for p in args.mass]
    if len(masses) < 2:
        raise InputError("fuse needs at least two mass files")
    combined = masses[0]
    for m in masses[1:]:
        k = conflict(combined, m)
        combined = combine_dempster(combined, m)
    if args.format == "json":
        out.write(formats.dumps(formats.mass_to_dict(combined)) + "\n")
    else:
        out.write(formats.render_mass_text(combined, k if len(masses) == 2 else None))
    return EXIT_OK


def cmd_bayes(args: argparse.Namespace, out: TextIO) -> int:
    if args.partition:
        part = formats.parse_partition(args.partition)
        post = bayes.sequential_update(part["priors"], part["evidence"])
        names = part.get("hypotheses") or [f"H{i + 1}" for i in range(len(post))]
        if args.format == "json":
            out.write(formats.dumps({"posteriors": [{"hypothesis": n, "p": p} for n, p in zip(names, post)]}) + "\n")
        else:
            out.writelines(f"{n} {p:.6f}\n" for n, p in zip(names, post))
        return EXIT_OK
    if args.prior is None or args.likelihood is None or args.marginal is None:
        raise InputError("bayes needs --prior, --likelihood and --marginal, or --partition")
    p = bayes.posterior(bayes.BayesUpdate(args.prior, args.likelihood, args.marginal))
    if args.format == "json":
        out.write(formats.dumps({"posterior": p}) + "\n")
    else:
        out.write(f"{p:.6f}\n")
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace, out: TextIO) -> int:
    c = default_catalog()
    if args.format == "json":
        out.write(formats.dumps(formats.catalog_to_dict(c)) + "\n")
    else:
        out.write(formats.render_catalog_text(c))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relcalc", description="Trust-perception calculus for international relations.")
    # argparse usage errors exit with 2, matching other input failures
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p: argparse.ArgumentParser, choices=("text", "json"), default: str | None = "text") -> None:
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("compute", help="evaluate one or more dossiers")
    p.add_argument("--catalog", help="catalog.json (default: built-in property tables)")
    p.add_argument("--dossier", action="append", required=True, help="dossier.json; repeat for a batch")
    p.add_argument("--config", help="config.json")
    p.add_argument("--septuple", help="septuple interval file overriding the equal-width default")
    p.add_argument("--epsilon", type=float)
    fmt(p, ("text", "json", "csv"), default=None)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("validate", help="parse and validate input files")
    p.add_argument("--catalog")
    p.add_argument("--dossier", action="append")
    p.add_argument("--config")
    p.add_argument("--mass", action="append")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("ds", help="belief/plausibility table of a mass function")
    p.add_argument("mass", nargs="+")
    p.add_argument("--base-rate", type=float, help="base rate of derived opinions (default 1/|frame|)")
    fmt(p)
    p.set_defaults(func=cmd_ds)

    p = sub.add_parser("fuse", help="combine mass functions with Dempster's rule")
    p.add_argument("mass", nargs="+")
    fmt(p)
    p.set_defaults(func=cmd_fuse)

    p = sub.add_parser("bayes", help="posterior probability")
    p.add_argument("--prior", type=float)
    p.add_argument("--likelihood", type=float)
    p.add_argument("--marginal", type=float)
    p.add_argument("--partition", help="JSON with priors and an evidence stream of likelihood vectors")
    fmt(p)
    p.set_defaults(func=cmd_bayes)

    p = sub.add_parser("catalog", help="print the default property catalog")
    fmt(p)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ComputationError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
