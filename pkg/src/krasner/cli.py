"""Command-line entry point.

Exit codes: 0 verified / pass, 1 verification failure, 2 input or usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import reports
from .constructions import (QuotientSpec, RingSpec, UnknownBuiltin, builtin, catalogue,
                            quotient_hyperring, ring_to_hyperring)
from .core import DEFAULT_MAX_SIZE, check_axioms, check_format, validate
from .errors import AxiomFailure, FormatError, PreconditionError
from .fileio import emit_hyperring, parse_hyperring
from .ideals import EXHAUSTIVE_LATTICE, all_hyperideals, lattice_report
from .spectral import FULL, PROPER, build_lower_topology, verify_theorem
from .topology import spectral_verdict

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _global_flags(p: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--max-size", type=int, default=d(DEFAULT_MAX_SIZE),
                   help="carrier size cap (default %d)" % DEFAULT_MAX_SIZE)
    p.add_argument("--format", choices=("human", "machine"), default=d("human"))
    p.add_argument("--seed", type=int, default=d(0), help="seed for sampled checks")
    p.add_argument("--subfamily-cap", type=int, default=d(EXHAUSTIVE_LATTICE),
                   help="lattices up to this many ideals get exhaustive subfamily checks")


def _source_args(p: argparse.ArgumentParser):
    p.add_argument("file", nargs="?", help="hyperring JSON file")
    p.add_argument("--builtin", metavar="NAME", help="catalogue instance: " + ", ".join(catalogue()))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="krasner", description="Verify finite Krasner hyperrings and the "
                     "spectrality of their proper-hyperideal spaces.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("check", help="check the hyperring axioms")
    _source_args(p)
    _global_flags(p, suppress=True)

    p = sub.add_parser("ideals", help="list hyperideals and their inclusion order")
    _source_args(p)
    _global_flags(p, suppress=True)

    p = sub.add_parser("spectral", help="spectral-space verdicts for the hyperideal spaces")
    _source_args(p)
    p.add_argument("--space", choices=(FULL, PROPER, "both"), default="both")
    _global_flags(p, suppress=True)

    p = sub.add_parser("theorem", help="verify every step of the spectrality argument")
    _source_args(p)
    _global_flags(p, suppress=True)

    p = sub.add_parser("construct", help="write a hyperring file")
    p.add_argument("kind", choices=("quotient", "ring"))
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--subgroup", default="1", help="comma-separated unit subgroup (quotient)")
    p.add_argument("--name")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    _global_flags(p, suppress=True)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    _global_flags(p, suppress=True)
    return parser


def _load(args):
    if (args.file is None) == (args.builtin is None):
        raise UsageError("give exactly one of FILE or --builtin NAME")
    if args.builtin is not None:
        spec = builtin(args.builtin)
        check_format(spec, args.max_size)
        return spec.canonical()
    return parse_hyperring(Path(args.file).read_bytes(), max_size=args.max_size)


class _Out:
    def __init__(self, args, stdout):
        self.machine = args.format == "machine"
        self.stdout = stdout

    def emit(self, doc, text):
        self.stdout.write((reports.dumps(doc) if self.machine else text) + "\n")


def _validated(args, out):
    """Validate or report the axiom failure; returns None on failure."""
    spec = _load(args)
    try:
        return validate(spec, args.max_size)
    except AxiomFailure as exc:
        out.emit(reports.axiom_report_doc(exc.report, spec),
                 reports.render_axioms(exc.report, spec))
        return None


def cmd_check(args, out):
    spec = _load(args)
    rep = check_axioms(spec)
    out.emit(reports.axiom_report_doc(rep, spec), reports.render_axioms(rep, spec))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_ideals(args, out):
    R = _validated(args, out)
    if R is None:
        return EXIT_FAIL
    L = all_hyperideals(R)
    rep = lattice_report(L, cap=args.subfamily_cap, seed=args.seed)
    out.emit(reports.lattice_doc(L, rep), reports.render_lattice(L, rep))
    ok = rep.is_complete_lattice and rep.is_algebraic and len(rep.compact_elements) == len(L)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_spectral(args, out):
    R = _validated(args, out)
    if R is None:
        return EXIT_FAIL
    L = all_hyperideals(R)
    variants = (FULL, PROPER) if args.space == "both" else (args.space,)
    docs, texts, ok = [], [], True
    for variant in variants:
        space = build_lower_topology(L, variant)
        v = spectral_verdict(space.base)
        labels = reports.space_labels(space)
        docs.append(reports.verdict_doc(v, labels, variant))
        texts.append(reports.render_verdict(v, labels, variant))
        ok = ok and v.spectral and v.consistent
    doc = {"schema_version": reports.SCHEMA_VERSION, "kind": "spectral-verdicts",
           "ring": R.name, "verdicts": docs}
    out.emit(doc, "\n".join(texts))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_theorem(args, out):
    R = _validated(args, out)
    if R is None:
        return EXIT_FAIL
    rep = verify_theorem(R, cap=args.subfamily_cap, seed=args.seed)
    L = all_hyperideals(R)
    full_labels = reports.space_labels(build_lower_topology(L, FULL))
    proper_labels = reports.space_labels(build_lower_topology(L, PROPER))
    out.emit(reports.theorem_doc(rep, R, full_labels, proper_labels),
             reports.render_theorem(rep, R, proper_labels))
    return EXIT_OK if rep.overall else EXIT_FAIL


def cmd_construct(args, out):
    ring = RingSpec.integers_mod(args.modulus)
    if args.kind == "ring":
        spec = ring_to_hyperring(ring)
    else:
        try:
            G = tuple(int(x) % args.modulus for x in args.subgroup.split(",") if x.strip())
        except ValueError:
            raise UsageError(f"--subgroup must be comma-separated integers, got {args.subgroup!r}")
        spec = quotient_hyperring(QuotientSpec(ring, G), args.name)
    if args.name:
        spec = type(spec)(args.name, spec.n, spec.zero, spec.one, spec.add, spec.mul, spec.labels)
    validate(spec, args.max_size)
    text = emit_hyperring(spec)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.stdout.write(text)
    return EXIT_OK


def cmd_selftest(args, out):
    from .acceptance import run_all
    results = list(run_all(cap=args.subfamily_cap, seed=args.seed))
    doc = {"schema_version": reports.SCHEMA_VERSION, "kind": "selftest",
           "criteria": [{"number": n, "title": t, "passed": ok, "detail": d}
                        for n, t, ok, d in results]}
    text = "\n".join(f"[{'PASS' if ok else 'FAIL'}] {n:>2}. {t}: {d}" for n, t, ok, d in results)
    out.emit(doc, text)
    return EXIT_OK if all(r[2] for r in results) else EXIT_FAIL


COMMANDS = {
    "check": cmd_check,
    "ideals": cmd_ideals,
    "spectral": cmd_spectral,
    "theorem": cmd_theorem,
    "construct": cmd_construct,
    "selftest": cmd_selftest,
}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(str(exc))
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return exc.code or 0
    if args.command is None:
        stderr.write(parser.format_usage())
        return EXIT_INPUT
    out = _Out(args, stdout)
    try:
        return COMMANDS[args.command](args, out)
    except FormatError as exc:
        doc = {"schema_version": reports.SCHEMA_VERSION, "kind": "error", "code": exc.code,
               "location": exc.location, "message": str(exc)}
        if out.machine:
            stdout.write(json.dumps(doc, indent=2) + "\n")
        stderr.write(f"krasner: {exc}\n")
        return EXIT_INPUT
    except AxiomFailure as exc:
        stderr.write(f"krasner: {exc}\n")
        return EXIT_FAIL
    except (UsageError, UnknownBuiltin, PreconditionError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"krasner: {msg}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
