"""Command line interface.

Subcommands::

    lctdv validate  --surface <id>
    lctdv pullback  --surface <id> --profile E3=1,...
    lctdv bound     --surface <id> [--dump-system]
    lctdv lct-pair  --surface <id> --profile C=1/2,... [--trace]
    lctdv certify   --lemma <id> [--chain-depth N] [--trace] [--dump-system]
    lctdv tables    [--expected PATH] [--tsv] [--chain-depth N]

Exit codes: 0 = everything verified, 1 = a mismatch, proof gap or failed
check, 2 = input or usage error.  The ``LCTDV_FIXTURES`` environment
variable points at an alternative fixture catalog.  All output is
deterministic.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import fixtures
from .exactlin import QVector, rat, rat_str

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _parse_profile(text: str) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for item in text.split(","):
        if "=" not in item:
            raise InputError(f"--profile items are key=value, got {item!r}")
        key, value = item.split("=", 1)
        try:
            out[key.strip()] = rat(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational {value!r}: {exc}")
    if not out:
        raise InputError("--profile needs at least one key=value item")
    return out


def _load_surface(name: str):
    from .surface import ParseError, ValidationError
    try:
        return fixtures.load_surface_fixture(name)
    except fixtures.FixtureNotFound:
        raise InputError(f"unknown surface fixture {name!r}")
    except (ParseError, ValidationError) as exc:
        raise InputError(f"surface fixture {name!r} is invalid: {exc}")


def _load_lemma(name: str):
    from .certify import ScriptError
    try:
        return fixtures.load_lemma_fixture(name)
    except fixtures.FixtureNotFound:
        raise InputError(f"unknown lemma fixture {name!r}")
    except ScriptError as exc:
        raise InputError(f"lemma fixture {name!r} is invalid: {exc}")


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_validate(args) -> int:
    from .surface import ParseError, ValidationError, load_surface
    path = fixtures.surface_path(args.surface)
    if not path.is_file():
        raise InputError(f"unknown surface fixture {args.surface!r}")
    try:
        cfg = load_surface(path.read_text(encoding="utf-8"),
                           name_hint=args.surface)
    except ParseError as exc:
        raise InputError(f"parse error: {exc}")
    except ValidationError as exc:
        for violation in exc.violations:
            print(f"violation: {violation}")
        return EXIT_MISMATCH
    print(f"ok: {cfg.name} ({len(cfg.labels)} exceptional curves, "
          f"{len(cfg.aux_curves)} auxiliary curves)")
    return EXIT_OK


def cmd_pullback(args) -> int:
    from .surface import solve_pullback
    cfg = _load_surface(args.surface)
    if not args.profile:
        raise InputError("pullback needs --profile")
    weights = _parse_profile(args.profile)
    vec = [Fraction(0)] * len(cfg.labels)
    for label, value in weights.items():
        if label not in cfg.labels:
            raise InputError(f"unknown exceptional label {label!r} on "
                             f"{cfg.name}")
        vec[cfg.label_index(label)] = value
    coeffs = solve_pullback(cfg, QVector(vec))
    print(" ".join(rat_str(c) for c in coeffs))
    return EXIT_OK


def cmd_bound(args) -> int:
    from .polytope import MAX, bound
    from .surface import nonneg_constraints
    cfg = _load_surface(args.surface)
    system = nonneg_constraints(cfg, curves="all")
    if args.dump_system:
        print(system.dump())
    from .polytope import LinForm
    for name in cfg.var_names:
        result = bound(system, LinForm.var(name), MAX)
        if result.status == "optimal":
            print(f"{name} <= {rat_str(result.value)}")
        else:
            print(f"{name} {result.status}")
    return EXIT_OK


def cmd_lct_pair(args) -> int:
    from .blowup import (BlowupError, init_state, lct_pair, resolve_to_snc)
    from .surface import UnknownCurve, make_divisor
    cfg = _load_surface(args.surface)
    if not args.profile:
        raise InputError("lct-pair needs --profile (curve weights)")
    weights = _parse_profile(args.profile)
    try:
        divisor = make_divisor(cfg, weights)
    except UnknownCurve as exc:
        raise InputError(f"unknown curve {exc} on {cfg.name}")
    try:
        if args.trace:
            state = resolve_to_snc(init_state(cfg, divisor))
            for line in state.trace:
                print(line)
        result = lct_pair(cfg, divisor)
    except BlowupError as exc:
        raise InputError(f"cannot resolve the pair: {exc}")
    print(f"{rat_str(result.value)} {result.witness}")
    return EXIT_OK


def cmd_certify(args) -> int:
    from .certify import replay_lemma
    script = _load_lemma(args.lemma)
    cfg = _load_surface(args.surface if args.surface else script.surface)
    report = replay_lemma(script, cfg, chain_depth=args.chain_depth,
                          collect_systems=args.dump_system)
    print(report.render())
    if args.dump_system:
        for case in report.cases:
            if case.system_dump:
                print(f"system for case {case.name}:")
                print(case.system_dump)
    if args.trace:
        for case in report.cases:
            for i, cert in enumerate(case.certificates, start=1):
                pairs = " ".join(f"{idx}:{rat_str(mult)}"
                                 for idx, mult in cert.multipliers)
                print(f"certificate {case.name}/{i}: {pairs} "
                      f"=> {cert.conclusion}")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_tables(args) -> int:
    from .harness import (TableFormatError, load_catalog, parse_tables_tsv,
                          reproduce_tables)
    try:
        if args.expected:
            path = Path(args.expected)
            if not path.is_file():
                raise InputError(f"expected-values file not found: {path}")
            entries = parse_tables_tsv(path.read_text(encoding="utf-8"),
                                       source=str(path))
        else:
            entries = load_catalog()
    except TableFormatError as exc:
        raise InputError(str(exc))
    report = reproduce_tables(entries, chain_depth=args.chain_depth)
    for line in (report.tsv_lines() if args.tsv else report.lines()):
        print(line)
    return EXIT_OK if report.ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lctdv",
        description=("Exact computation and certification of global log "
                     "canonical thresholds of del Pezzo surfaces with "
                     "Du Val singularities."))
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, surface=False, lemma=False, profile=False, depth=False,
               expected=False):
        if surface:
            p.add_argument("--surface", help="surface fixture id")
        if lemma:
            p.add_argument("--lemma", required=True, help="lemma fixture id")
        if profile:
            p.add_argument("--profile",
                           help="comma separated key=value rationals")
        if depth:
            p.add_argument("--chain-depth", type=int, default=None,
                           help="cap inductive towers at this depth")
        if expected:
            p.add_argument("--expected", help="expected-values TSV file")
        p.add_argument("--trace", action="store_true",
                       help="print resolution or certificate traces")
        p.add_argument("--dump-system", action="store_true",
                       help="print the generated constraint systems")

    p = sub.add_parser("validate", help="parse and validate a surface")
    common(p, surface=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("pullback",
                       help="pullback coefficients of a profile")
    common(p, surface=True, profile=True)
    p.set_defaults(func=cmd_pullback)

    p = sub.add_parser("bound", help="per-variable bounds of the base "
                                     "constraint system")
    common(p, surface=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("lct-pair", help="log canonical threshold of a pair")
    common(p, surface=True, profile=True)
    p.set_defaults(func=cmd_lct_pair)

    p = sub.add_parser("certify", help="replay a lower-bound lemma")
    common(p, surface=True, lemma=True, depth=True)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("tables", help="reproduce the threshold catalog")
    common(p, depth=True, expected=True)
    p.add_argument("--tsv", action="store_true",
                   help="emit the computed catalog as TSV")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass through.
        return int(exc.code or 0)
    try:
        if getattr(args, "command", None) in ("validate", "pullback",
                                              "bound", "lct-pair"):
            if not getattr(args, "surface", None):
                raise InputError(f"{args.command} needs --surface")
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
